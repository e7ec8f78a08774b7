#include "latreal/mfamily.hpp"

namespace latreal {

AffineMatrix seed_matrix(int rank, const std::string& prefix) {
    AffineMatrix m(rank, std::vector<AffineExpr>(rank));
    for (int i = 0; i < rank; ++i)
        for (int j = i; j < rank; ++j) {
            std::string name = prefix + std::to_string(i + 1) + std::to_string(j + 1);
            m[i][j] = m[j][i] = AffineExpr::param(name);
        }
    return m;
}

AffineMatrix constant_matrix(const std::vector<std::vector<Rational>>& values) {
    AffineMatrix m(values.size(), std::vector<AffineExpr>(values.size()));
    for (std::size_t i = 0; i < values.size(); ++i)
        for (std::size_t j = 0; j < values.size(); ++j) m[i][j] = AffineExpr(values[i][j]);
    return m;
}

bool matrix_equal(const AffineMatrix& a, const AffineMatrix& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            if (!(a[i][j] == b[i][j])) return false;
    return true;
}

AffineMatrix substitute(const AffineMatrix& m, const ConstraintSet& s) {
    AffineMatrix out = m;
    for (auto& row : out)
        for (auto& e : row) e = s.substitute(e);
    return out;
}

AffineMatrix permuted(const AffineMatrix& m, const std::vector<int>& perm) {
    int n = static_cast<int>(m.size());
    AffineMatrix out(n, std::vector<AffineExpr>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out[i][j] = m[perm[i]][perm[j]];
    return out;
}

std::vector<std::vector<Rational>> evaluate(const AffineMatrix& m, const Assignment& a) {
    std::vector<std::vector<Rational>> out(m.size(), std::vector<Rational>(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) out[i][j] = m[i][j].evaluate(a);
    return out;
}

AffineMatrix m_reflect(const AffineMatrix& m, const GeneralizedCartan& a, int k) {
    int n = static_cast<int>(m.size());
    std::vector<RootVector> cols(n, RootVector(n, 0));
    for (int i = 0; i < n; ++i) {
        if (i == k) {
            cols[i][k] = -1;
        } else {
            cols[i][i] = 1;
            cols[i][k] = -a.at(k, i);
        }
    }
    return transport(m, cols);
}

AffineMatrix transport(const AffineMatrix& m, const std::vector<RootVector>& basis) {
    int n = static_cast<int>(m.size());
    AffineMatrix out(n, std::vector<AffineExpr>(n));
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            AffineExpr e;
            for (int s = 0; s < n; ++s) {
                if (basis[i][s] == 0) continue;
                for (int t = 0; t < n; ++t) {
                    if (basis[j][t] == 0) continue;
                    e += m[s][t] * Rational(basis[i][s] * basis[j][t]);
                }
            }
            out[i][j] = out[j][i] = e;
        }
    return out;
}

std::vector<AffineExpr> cond7_residuals(const AffineMatrix& m, const GeneralizedCartan& a, int i,
                                        Cond7Choice choice) {
    std::vector<AffineExpr> r;
    int n = static_cast<int>(m.size());
    for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        long long aij = a.at(i, j);
        if (choice == Cond7Choice::A || aij == 0)
            r.push_back(m[i][j] * 2 - m[i][i] * Rational(aij));
        else
            r.push_back(m[i][i] * Rational(1 - aij) - AffineExpr(Rational(2)));
    }
    return r;
}

} // namespace latreal
