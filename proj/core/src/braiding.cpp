#include "latreal/braiding.hpp"

#include "latreal/errors.hpp"

#include <set>
#include <sstream>

namespace latreal {

GeneralizedCartan::GeneralizedCartan(std::vector<std::vector<long long>> entries)
    : entries_(std::move(entries)) {
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i].size() != entries_.size())
            throw InternalError("Cartan matrix is not square");
        if (entries_[i][i] != 2) throw InternalError("Cartan diagonal entry != 2");
        for (std::size_t j = 0; j < entries_.size(); ++j)
            if (i != j && entries_[i][j] > 0)
                throw InternalError("positive off-diagonal Cartan entry");
    }
}

GeneralizedCartan GeneralizedCartan::permuted(const std::vector<int>& perm) const {
    int n = rank();
    std::vector<std::vector<long long>> out(n, std::vector<long long>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out[i][j] = entries_[perm[i]][perm[j]];
    return GeneralizedCartan(out);
}

std::string to_string(RootClass c) {
    switch (c) {
    case RootClass::CartanOnly: return "cartan";
    case RootClass::TruncationOnly: return "truncation";
    case RootClass::Both: return "both";
    case RootClass::Mixed: return "mixed";
    }
    return "?";
}

BraidingDiagram::BraidingDiagram(int rank, std::vector<AffineExpr> diag,
                                 std::vector<std::vector<AffineExpr>> edges)
    : rank_(rank), diag_(std::move(diag)), edges_(std::move(edges)) {
    if (static_cast<int>(diag_.size()) != rank_) throw InternalError("diag size mismatch");
    if (static_cast<int>(edges_.size()) != rank_) throw InternalError("edges size mismatch");
    for (int i = 0; i < rank_; ++i) {
        if (static_cast<int>(edges_[i].size()) != rank_) throw InternalError("edges row mismatch");
        for (int j = 0; j < rank_; ++j)
            if (!(edges_[i][j] == edges_[j][i])) throw InternalError("edge matrix not symmetric");
    }
}

bool BraidingDiagram::concrete() const {
    for (const auto& e : diag_)
        if (!e.is_constant()) return false;
    for (const auto& row : edges_)
        for (const auto& e : row)
            if (!e.is_constant()) return false;
    return true;
}

UnitRoot BraidingDiagram::node(int i) const {
    if (!diag_[i].is_constant()) throw DomainError("node exponent is not concrete");
    return UnitRoot(diag_[i].constant());
}

UnitRoot BraidingDiagram::edge_product(int i, int j) const {
    if (!edges_[i][j].is_constant()) throw DomainError("edge exponent is not concrete");
    return UnitRoot(edges_[i][j].constant());
}

AffineExpr BraidingDiagram::pullback_node(const std::vector<long long>& v) const {
    AffineExpr e;
    for (int s = 0; s < rank_; ++s) {
        if (v[s] == 0) continue;
        e += diag_[s] * Rational(v[s] * v[s]);
        for (int t = s + 1; t < rank_; ++t)
            if (v[t] != 0) e += edges_[s][t] * Rational(v[s] * v[t]);
    }
    return e;
}

AffineExpr BraidingDiagram::pullback_edge(const std::vector<long long>& v,
                                          const std::vector<long long>& w) const {
    AffineExpr e;
    for (int s = 0; s < rank_; ++s) {
        e += diag_[s] * Rational(2 * v[s] * w[s]);
        for (int t = s + 1; t < rank_; ++t)
            e += edges_[s][t] * Rational(v[s] * w[t] + v[t] * w[s]);
    }
    return e;
}

BraidingDiagram BraidingDiagram::canonical() const {
    BraidingDiagram d = *this;
    for (auto& e : d.diag_) e = e.constant_mod2();
    for (auto& row : d.edges_)
        for (auto& e : row) e = e.constant_mod2();
    return d;
}

BraidingDiagram BraidingDiagram::permuted(const std::vector<int>& perm) const {
    std::vector<AffineExpr> diag(rank_);
    std::vector<std::vector<AffineExpr>> edges(rank_, std::vector<AffineExpr>(rank_));
    for (int i = 0; i < rank_; ++i) {
        diag[i] = diag_[perm[i]];
        for (int j = 0; j < rank_; ++j) edges[i][j] = edges_[perm[i]][perm[j]];
    }
    BraidingDiagram d(rank_, std::move(diag), std::move(edges));
    d.validity_ = validity_;
    return d;
}

BraidingDiagram BraidingDiagram::instantiated(const Assignment& assignment) const {
    std::vector<AffineExpr> diag(rank_);
    std::vector<std::vector<AffineExpr>> edges(rank_, std::vector<AffineExpr>(rank_));
    for (int i = 0; i < rank_; ++i) {
        diag[i] = AffineExpr(reduce_mod2(diag_[i].evaluate(assignment)));
        for (int j = 0; j < rank_; ++j)
            if (i != j) edges[i][j] = AffineExpr(reduce_mod2(edges_[i][j].evaluate(assignment)));
    }
    return BraidingDiagram(rank_, std::move(diag), std::move(edges));
}

namespace {
bool exponents_equal_mod2(const AffineExpr& a, const AffineExpr& b) {
    AffineExpr d = a - b;
    if (!d.is_constant()) return false;
    Rational c = d.constant();
    return is_integer(c / 2);
}
} // namespace

bool BraidingDiagram::equivalent_mod2(const BraidingDiagram& other) const {
    if (rank_ != other.rank_) return false;
    for (int i = 0; i < rank_; ++i) {
        if (!exponents_equal_mod2(diag_[i], other.diag_[i])) return false;
        for (int j = i + 1; j < rank_; ++j)
            if (!exponents_equal_mod2(edges_[i][j], other.edges_[i][j])) return false;
    }
    return true;
}

bool BraidingDiagram::operator==(const BraidingDiagram& o) const {
    return rank_ == o.rank_ && diag_ == o.diag_ && edges_ == o.edges_;
}

std::vector<std::string> BraidingDiagram::params() const {
    std::set<std::string, ParamLess> names;
    for (const auto& e : diag_)
        for (const auto& n : e.params()) names.insert(n);
    for (const auto& row : edges_)
        for (const auto& e : row)
            for (const auto& n : e.params()) names.insert(n);
    return {names.begin(), names.end()};
}

std::string BraidingDiagram::key() const { return format_diagram(canonical()); }

GeneralizedCartan cartan_matrix(const BraidingDiagram& q) {
    if (!q.concrete()) throw DomainError("cartan_matrix needs a concrete diagram");
    int n = q.rank();
    std::vector<std::vector<long long>> a(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i) {
        a[i][i] = 2;
        Rational eii = reduce_mod2(q.node_exponent(i).constant());
        long long order = unit_root_order(UnitRoot(eii));
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            Rational eij = q.edge_exponent(i, j).constant();
            if (eii == 0) {
                if (!congruent(eij, 0, 2))
                    throw NotFiniteType("q_ii = 1 with a nontrivial edge at (" +
                                        std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
                a[i][j] = 0;
                continue;
            }
            bool found = false;
            for (long long m = 0; m < order; ++m) {
                if (congruent(-m * eii, eij, 2) || congruent((1 + m) * eii, 0, 2)) {
                    a[i][j] = -m;
                    found = true;
                    break;
                }
            }
            if (!found) throw NotFiniteType("no Cartan entry exists"); // unreachable: m = order-1 truncates
        }
    }
    return GeneralizedCartan(std::move(a));
}

PairClass classify_pair(const BraidingDiagram& q, const GeneralizedCartan& a, int i, int j) {
    Rational eii = q.node_exponent(i).constant();
    Rational eij = q.edge_exponent(i, j).constant();
    PairClass c;
    c.cartan = congruent(Rational(a.at(i, j)) * eii, eij, 2);
    c.truncation = congruent(Rational(1 - a.at(i, j)) * eii, 0, 2);
    return c;
}

RootClass classify_root_lenient(const BraidingDiagram& q, const GeneralizedCartan& a, int i) {
    bool cartan = true, truncation = true;
    for (int j = 0; j < q.rank(); ++j) {
        if (j == i) continue;
        PairClass c = classify_pair(q, a, i, j);
        if (!c.cartan) cartan = false;
        bool connected = a.at(i, j) != 0 || !congruent(q.edge_exponent(i, j).constant(), 0, 2);
        if (connected && !c.truncation) truncation = false;
    }
    if (cartan && truncation) return RootClass::Both;
    if (cartan) return RootClass::CartanOnly;
    if (truncation) return RootClass::TruncationOnly;
    return RootClass::Mixed;
}

RootClass classify_root(const BraidingDiagram& q, const GeneralizedCartan& a, int i) {
    RootClass c = classify_root_lenient(q, a, i);
    if (c == RootClass::Mixed)
        throw Inconsistent("root " + std::to_string(i + 1) +
                           " satisfies neither classification identity uniformly");
    return c;
}

std::vector<RootClass> classify_all(const BraidingDiagram& q, const GeneralizedCartan& a) {
    std::vector<RootClass> out;
    out.reserve(q.rank());
    for (int i = 0; i < q.rank(); ++i) out.push_back(classify_root_lenient(q, a, i));
    return out;
}

namespace {
[[noreturn]] void parse_fail(const std::string& text, std::size_t pos, const std::string& what) {
    std::size_t line = 1, col = 1;
    for (std::size_t k = 0; k < pos && k < text.size(); ++k) {
        if (text[k] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    throw ParseError("diagram parse error at line " + std::to_string(line) + ", column " +
                     std::to_string(col) + ": " + what);
}
} // namespace

BraidingDiagram parse_diagram(const std::string& text) {
    // split on ';'
    std::vector<std::pair<std::string, std::size_t>> stmts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t next = text.find(';', pos);
        if (next == std::string::npos) next = text.size();
        std::string stmt = text.substr(pos, next - pos);
        if (stmt.find_first_not_of(" \t\r\n") != std::string::npos) stmts.emplace_back(stmt, pos);
        pos = next + 1;
        if (next == text.size()) break;
    }
    if (stmts.empty()) parse_fail(text, 0, "empty input");

    auto strip = [](std::string s) {
        std::size_t b = s.find_first_not_of(" \t\r\n");
        std::size_t e = s.find_last_not_of(" \t\r\n");
        return s.substr(b, e - b + 1);
    };

    int rank = -1;
    {
        auto [stmt, at] = stmts[0];
        std::string s = strip(stmt);
        if (s.rfind("rank", 0) != 0) parse_fail(text, at, "expected 'rank=<n>' first");
        std::size_t eq = s.find('=');
        if (eq == std::string::npos) parse_fail(text, at, "expected '=' after rank");
        try {
            rank = std::stoi(strip(s.substr(eq + 1)));
        } catch (...) {
            parse_fail(text, at, "bad rank value");
        }
        if (rank < 1 || rank > 64) parse_fail(text, at, "rank out of range");
    }

    std::vector<AffineExpr> diag(rank);
    std::vector<bool> have_node(rank, false);
    std::vector<std::vector<AffineExpr>> edges(rank, std::vector<AffineExpr>(rank));

    for (std::size_t k = 1; k < stmts.size(); ++k) {
        auto [stmt, at] = stmts[k];
        std::string s = strip(stmt);
        if (s.rfind("q[", 0) != 0) parse_fail(text, at, "expected 'q[...]=...'");
        std::size_t close = s.find(']');
        std::size_t eq = s.find('=', close == std::string::npos ? 0 : close);
        if (close == std::string::npos || eq == std::string::npos)
            parse_fail(text, at, "malformed q[...] statement");
        std::string idx = s.substr(2, close - 2);
        auto expr = parse_affine(s.substr(eq + 1));
        if (!expr) parse_fail(text, at, "bad affine expression");
        for (const auto& p : expr->params())
            if (p != "r" && p != "r'" && p != "r''" && p != "r'''")
                parse_fail(text, at, "undeclared parameter '" + p + "'");
        std::size_t comma = idx.find(',');
        try {
            if (comma == std::string::npos) {
                int i = std::stoi(strip(idx));
                if (i < 1 || i > rank) parse_fail(text, at, "node index out of range");
                diag[i - 1] = expr->constant_mod2();
                have_node[i - 1] = true;
            } else {
                int i = std::stoi(strip(idx.substr(0, comma)));
                int j = std::stoi(strip(idx.substr(comma + 1)));
                if (i < 1 || j < 1 || i > rank || j > rank || i >= j)
                    parse_fail(text, at, "edge indices must satisfy 1 <= i < j <= rank");
                edges[i - 1][j - 1] = edges[j - 1][i - 1] = expr->constant_mod2();
            }
        } catch (const ParseError&) {
            throw;
        } catch (...) {
            parse_fail(text, at, "bad index");
        }
    }
    for (int i = 0; i < rank; ++i)
        if (!have_node[i])
            throw ParseError("diagram parse error: node " + std::to_string(i + 1) + " missing");
    return BraidingDiagram(rank, std::move(diag), std::move(edges));
}

std::string format_diagram(const BraidingDiagram& d) {
    std::ostringstream out;
    out << "rank=" << d.rank();
    for (int i = 0; i < d.rank(); ++i)
        out << "; q[" << i + 1 << "]=" << d.node_exponent(i).constant_mod2().str();
    for (int i = 0; i < d.rank(); ++i)
        for (int j = i + 1; j < d.rank(); ++j) {
            AffineExpr e = d.edge_exponent(i, j).constant_mod2();
            if (!e.is_zero()) out << "; q[" << i + 1 << "," << j + 1 << "]=" << e.str();
        }
    return out.str();
}

} // namespace latreal
