#include "latreal/oracle.hpp"

#include "latreal/errors.hpp"

#include <algorithm>
#include <numeric>

namespace latreal {

namespace {

// reduced word of the permutation sorting `perm` to identity; each swap
// removes exactly one inversion, so any descent strategy is reduced
std::vector<int> reduced_word(std::vector<int> perm, WordStrategy strategy) {
    std::vector<int> word;
    while (true) {
        int pos = -1;
        if (strategy == WordStrategy::BubbleSort) {
            for (std::size_t i = 0; i + 1 < perm.size(); ++i)
                if (perm[i] > perm[i + 1]) {
                    pos = static_cast<int>(i);
                    break;
                }
        } else {
            for (std::size_t i = perm.size() - 1; i-- > 0;)
                if (perm[i] > perm[i + 1]) {
                    pos = static_cast<int>(i);
                    break;
                }
        }
        if (pos < 0) break;
        std::swap(perm[pos], perm[pos + 1]);
        word.push_back(pos);
    }
    return word;
}

} // namespace

QuantumSymmetrizer::QuantumSymmetrizer(const BraidingDiagram& q, int degree_cap)
    : rank_(q.rank()), degree_cap_(degree_cap), field_(1) {
    if (!q.concrete()) throw DomainError("symmetrizer needs a concrete diagram");
    // choose N with every gauge exponent an integer multiple of 2/N
    long long N = 2;
    auto lcm_den = [&](const Rational& e) {
        BigInt den = denominator(e / 2); // e^{iπ e} = ζ_N^{e N / 2}
        N = boost::multiprecision::lcm(BigInt(N), den).convert_to<long long>();
    };
    for (int i = 0; i < rank_; ++i) {
        lcm_den(q.node_exponent(i).constant());
        for (int j = i + 1; j < rank_; ++j)
            lcm_den(q.edge_exponent(i, j).constant() / 2); // halved gauge exponent
    }
    field_ = CyclotomicField(N);
    q_power_.assign(rank_, std::vector<long long>(rank_, 0));
    auto power_of = [&](const Rational& e) {
        Rational k = e / 2 * N;
        if (!is_integer(k)) throw InternalError("gauge exponent not integral");
        BigInt v = numerator(k) % N;
        long long p = v.convert_to<long long>();
        return p < 0 ? p + N : p;
    };
    for (int i = 0; i < rank_; ++i) {
        q_power_[i][i] = power_of(q.node_exponent(i).constant());
        for (int j = i + 1; j < rank_; ++j)
            q_power_[i][j] = q_power_[j][i] = power_of(q.edge_exponent(i, j).constant() / 2);
    }
}

std::vector<std::vector<int>> QuantumSymmetrizer::words(
    const std::vector<long long>& degree) const {
    std::vector<int> base;
    for (int i = 0; i < rank_; ++i)
        for (long long k = 0; k < degree[i]; ++k) base.push_back(i);
    std::vector<std::vector<int>> out;
    std::sort(base.begin(), base.end());
    do {
        out.push_back(base);
    } while (std::next_permutation(base.begin(), base.end()));
    return out;
}

std::vector<std::vector<CyclotomicField::Elem>> QuantumSymmetrizer::block(
    const std::vector<long long>& degree, WordStrategy strategy) const {
    long long total = std::accumulate(degree.begin(), degree.end(), 0LL);
    if (total > degree_cap_)
        throw DegreeCapExceeded("total degree " + std::to_string(total) + " exceeds cap " +
                                std::to_string(degree_cap_));
    auto basis = words(degree);
    std::map<std::vector<int>, int> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = static_cast<int>(i);

    std::size_t dim = basis.size();
    std::vector<std::vector<CyclotomicField::Elem>> m(
        dim, std::vector<CyclotomicField::Elem>(dim, field_.zero()));

    int len = static_cast<int>(total);
    std::vector<int> perm(len);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::vector<int> word = reduced_word(perm, strategy);
        for (std::size_t col = 0; col < dim; ++col) {
            std::vector<int> w = basis[col];
            long long power = 0;
            // apply the rightmost braiding factor first
            for (auto it = word.rbegin(); it != word.rend(); ++it) {
                int pos = *it;
                power += q_power_[w[pos]][w[pos + 1]];
                std::swap(w[pos], w[pos + 1]);
            }
            int row = index.at(w);
            m[row][col] =
                field_.add(m[row][col], field_.root_power(power));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return m;
}

long long QuantumSymmetrizer::block_rank(const std::vector<long long>& degree,
                                         WordStrategy strategy) const {
    return cyclotomic_rank(field_, block(degree, strategy));
}

GradedDimensions graded_dimensions(const BraidingDiagram& q, int max_degree, int degree_cap) {
    if (max_degree > degree_cap)
        throw DegreeCapExceeded("max degree exceeds the configured cap");
    QuantumSymmetrizer sym(q, degree_cap);
    GradedDimensions out;
    out.by_total_degree.assign(max_degree + 1, 0);
    out.by_total_degree[0] = 1;
    int n = q.rank();
    std::vector<long long> degree(n, 0);
    // iterate all multidegrees with total in 1..max_degree
    while (true) {
        int i = 0;
        while (i < n) {
            ++degree[i];
            if (std::accumulate(degree.begin(), degree.end(), 0LL) <= max_degree) break;
            degree[i++] = 0;
        }
        if (i == n) break;
        long long r = sym.block_rank(degree);
        out.by_multidegree[degree] = r;
        out.by_total_degree[std::accumulate(degree.begin(), degree.end(), 0LL)] += r;
    }
    return out;
}

namespace {
long long pbw_count_rec(const std::vector<RootVector>& roots,
                        const std::vector<long long>& orders, std::size_t k,
                        std::vector<long long> remaining) {
    if (k == roots.size()) {
        for (long long x : remaining)
            if (x != 0) return 0;
        return 1;
    }
    long long count = 0;
    for (long long e = 0; orders[k] <= 0 || e < orders[k]; ++e) {
        if (e > 0) {
            bool fits = true;
            for (std::size_t t = 0; t < remaining.size(); ++t) {
                remaining[t] -= roots[k][t];
                if (remaining[t] < 0) fits = false;
            }
            if (!fits) break;
        }
        count += pbw_count_rec(roots, orders, k + 1, remaining);
    }
    return count;
}
} // namespace

long long pbw_monomial_count(const std::vector<RootVector>& roots,
                             const std::vector<long long>& truncation_orders,
                             const std::vector<long long>& degree) {
    return pbw_count_rec(roots, truncation_orders, 0, degree);
}

std::vector<long long> truncation_orders(const BraidingDiagram& q,
                                         const std::vector<RootVector>& roots) {
    std::vector<long long> out;
    out.reserve(roots.size());
    for (const auto& root : roots)
        out.push_back(unit_root_order(UnitRoot(q.pullback_node(root).constant())));
    return out;
}

} // namespace latreal
