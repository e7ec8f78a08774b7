#include "latreal/families.hpp"

#include "latreal/errors.hpp"

#include <numeric>

namespace latreal {

std::vector<long long> cartan_symmetrizer(const GeneralizedCartan& a) {
    int n = a.rank();
    // propagate ratios d_j / d_i = a_ij / a_ji along edges, then clear denominators
    std::vector<Rational> d(n, 0);
    std::vector<int> todo;
    for (int start = 0; start < n; ++start) {
        if (d[start] != 0) continue;
        d[start] = 1;
        todo.assign(1, start);
        while (!todo.empty()) {
            int i = todo.back();
            todo.pop_back();
            for (int j = 0; j < n; ++j) {
                if (i == j || a.at(i, j) == 0) continue;
                if (a.at(j, i) == 0) throw NotSymmetrizable("a_ij = 0 xor a_ji = 0");
                Rational dj = d[i] * Rational(a.at(i, j)) / Rational(a.at(j, i));
                if (d[j] == 0) {
                    d[j] = dj;
                    todo.push_back(j);
                } else if (d[j] != dj) {
                    throw NotSymmetrizable("inconsistent symmetrizer ratios");
                }
            }
        }
    }
    BigInt lcm = 1;
    for (const auto& x : d) lcm = boost::multiprecision::lcm(lcm, denominator(x));
    std::vector<long long> out(n);
    BigInt g = 0;
    std::vector<BigInt> scaled(n);
    for (int i = 0; i < n; ++i) {
        scaled[i] = numerator(d[i]) * (lcm / denominator(d[i]));
        g = boost::multiprecision::gcd(g, scaled[i]);
    }
    for (int i = 0; i < n; ++i) out[i] = (scaled[i] / g).convert_to<long long>();
    // d_i a_ij = d_j a_ji must now hold exactly
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (out[i] * a.at(i, j) != out[j] * a.at(j, i))
                throw NotSymmetrizable("matrix is not symmetrizable");
    return out;
}

AffineMatrix construct_cartan_family(const GeneralizedCartan& a, const std::string& param) {
    std::vector<long long> d = cartan_symmetrizer(a);
    int n = a.rank();
    AffineMatrix m(n, std::vector<AffineExpr>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m[i][j] = AffineExpr::param(param, Rational(d[i] * a.at(i, j)));
    return m;
}

namespace {

// Is rho in the rational span of gamma and delta?
bool in_span(const RootVector& rho, const RootVector& gamma, const RootVector& delta) {
    // solve x*gamma + y*delta = rho
    int n = static_cast<int>(rho.size());
    std::vector<AffineExpr> eqs;
    for (int t = 0; t < n; ++t)
        eqs.push_back(AffineExpr::param("x", Rational(gamma[t])) +
                      AffineExpr::param("y", Rational(delta[t])) - AffineExpr(Rational(rho[t])));
    return !solve_linear(eqs).infeasible();
}

AffineExpr normalized(AffineExpr e) {
    if (e.coeffs().empty()) return e;
    Rational lead = e.coeffs().begin()->second;
    return e * (Rational(1) / lead);
}

} // namespace

SuperLieFamily construct_superlie_family(const SuperLieDatum& datum) {
    int n = static_cast<int>(datum.gram.size());
    int f = datum.fermion;
    if (f < 0 || f >= n) throw MalformedDatum("fermion index out of range");
    for (int i = 0; i < n; ++i)
        if (static_cast<int>(datum.gram[i].size()) != n)
            throw MalformedDatum("gram matrix is not square");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (datum.gram[i][j] != datum.gram[j][i])
                throw MalformedDatum("gram matrix is not symmetric");
    if (datum.gram[f][f] != 0)
        throw MalformedDatum("the fermionic simple root must be isotropic");
    for (int i = 0; i < f; ++i)
        for (int j = f + 1; j < n; ++j)
            if (datum.gram[i][j] != 0)
                throw MalformedDatum("sectors are connected across the fermion");

    bool left = f > 0, right = f + 1 < n;
    std::string p1 = left && right ? datum.sector1 : "r";
    std::string p2 = left && right ? datum.sector2 : "r";

    // sector split: (.,.)_{g'} lives on indices <= f, (.,.)_{g''} on >= f,
    // with the (f,f) entry belonging to neither
    auto g1 = [&](int i, int j) -> Rational {
        if (i <= f && j <= f && !(i == f && j == f)) return datum.gram[i][j];
        return 0;
    };
    auto g2 = [&](int i, int j) -> Rational {
        if (i >= f && j >= f && !(i == f && j == f)) return datum.gram[i][j];
        return 0;
    };

    SuperLieFamily fam;
    fam.m.assign(n, std::vector<AffineExpr>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            AffineExpr e = AffineExpr::param(p1, g1(i, j)) + AffineExpr::param(p2, g2(i, j));
            if (i == f && j == f) e += AffineExpr(Rational(1));
            fam.m[i][j] = e;
        }
    if (left) fam.params.push_back(p1);
    if (right && p2 != p1) fam.params.push_back(p2);
    if (fam.params.empty()) fam.params.push_back("r");

    // braiding exponents of the family
    {
        std::vector<AffineExpr> diag(n);
        std::vector<std::vector<AffineExpr>> edges(n, std::vector<AffineExpr>(n));
        for (int i = 0; i < n; ++i) {
            diag[i] = fam.m[i][i].constant_mod2();
            for (int j = i + 1; j < n; ++j)
                edges[i][j] = edges[j][i] = (fam.m[i][j] * 2).constant_mod2();
        }
        fam.diagram = BraidingDiagram(n, std::move(diag), std::move(edges));
    }

    // Positive roots from a probe point of large order.  With two sectors
    // the probe must sit on the compatible locus r' + r'' = 1 (where
    // q_{g'} q_{g''} = 1): away from it the diagram deforms into the
    // three-parameter triangle family with a larger root system.
    {
        Assignment probe;
        probe[p1] = Rational(1, 53);
        probe[p2] = Rational(52, 53);
        GroupoidGraph g = enumerate_groupoid(fam.diagram.instantiated(probe));
        fam.positive_roots = positive_roots(g).positive_roots;
    }

    // strong-orthogonality constraints between fermionic roots
    auto fmult = [&](const RootVector& v) { return v[f]; };
    auto pairing = [&](const RootVector& a, const RootVector& b) {
        Rational s1 = 0, s2 = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                s1 += Rational(a[i] * b[j]) * g1(i, j);
                s2 += Rational(a[i] * b[j]) * g2(i, j);
            }
        return AffineExpr::param(p1, s1) + AffineExpr::param(p2, s2) +
               AffineExpr(Rational(fmult(a) * fmult(b)));
    };
    auto add_pair = [&](const RootVector& a2, const RootVector& b2) {
        fam.orthogonal_pairs.emplace_back(a2, b2);
        AffineExpr c = normalized(pairing(a2, b2));
        for (const auto& e : fam.constraints)
            if (e == c) return;
        if (!c.is_zero()) fam.constraints.push_back(std::move(c));
    };
    std::vector<RootVector> fermions;
    for (const auto& v : fam.positive_roots)
        if (fmult(v) % 2 != 0) fermions.push_back(v);
    for (std::size_t x = 0; x < fermions.size(); ++x) {
        for (std::size_t y = x + 1; y < fermions.size(); ++y) {
            bool strong = true;
            for (const auto& rho : fam.positive_roots) {
                if (rho == fermions[x] || rho == fermions[y]) continue;
                if (in_span(rho, fermions[x], fermions[y])) {
                    strong = false;
                    break;
                }
            }
            if (strong) add_pair(fermions[x], fermions[y]);
        }
    }
    for (const auto& [a2, b2] : datum.extra_pairs) add_pair(a2, b2);
    return fam;
}

namespace {
Rational safe_div(const Rational& a, const Rational& b) {
    if (b == 0) throw DivisionByZero("vanishing denominator in rank-2 formula");
    return a / b;
}
} // namespace

Rational rank2_classification_value(Rank2Pattern pattern, long long a_ij, long long a_ji,
                                    long long a_beta) {
    Rational a(a_ij), b(a_ji), c(a_beta);
    switch (pattern) {
    case Rank2Pattern::TRTR_TR:
        return safe_div(a, 1 - a) - safe_div(1, a * (1 - c)) + safe_div(1, a * (1 - b));
    case Rank2Pattern::TRTR_CA:
        return safe_div(a, 1 - a) +
               safe_div(safe_div(1, 1 - b) - safe_div(a, (1 - a) * c), a - safe_div(1, c));
    case Rank2Pattern::CATR_TR:
        return safe_div(a, 1 - a * b) * (safe_div(1, 1 - c) - safe_div(b * b, 1 - b));
    case Rank2Pattern::CATR_CA:
        return safe_div(a * b, 1 - b) * safe_div(b * c - 2, b * a * c - c - a);
    }
    throw InternalError("unknown rank-2 pattern");
}

} // namespace latreal
