#include "latreal/charge.hpp"

#include "latreal/errors.hpp"

namespace latreal {

namespace {
// dense Gaussian elimination over Q for m x = rhs
std::vector<Rational> solve_dense(RationalMatrix m, std::vector<Rational> rhs) {
    int n = static_cast<int>(m.size());
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int row = col; row < n; ++row)
            if (m[row][col] != 0) {
                pivot = row;
                break;
            }
        if (pivot < 0) throw SingularGram("gram matrix is singular");
        std::swap(m[col], m[pivot]);
        std::swap(rhs[col], rhs[pivot]);
        for (int row = 0; row < n; ++row) {
            if (row == col || m[row][col] == 0) continue;
            Rational f = m[row][col] / m[col][col];
            for (int k = col; k < n; ++k) m[row][k] -= f * m[col][k];
            rhs[row] -= f * rhs[col];
        }
    }
    std::vector<Rational> x(n);
    for (int i = 0; i < n; ++i) x[i] = rhs[i] / m[i][i];
    return x;
}
} // namespace

std::vector<Rational> background_charge(const RationalMatrix& m) {
    int n = static_cast<int>(m.size());
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(m[i].size()) != n) throw DomainError("gram matrix is not square");
        for (int j = 0; j < n; ++j)
            if (m[i][j] != m[j][i]) throw DomainError("gram matrix is not symmetric");
    }
    std::vector<Rational> rhs(n);
    for (int i = 0; i < n; ++i) rhs[i] = m[i][i] / 2 - 1;
    return solve_dense(m, rhs);
}

Rational central_charge(const RationalMatrix& m) {
    int n = static_cast<int>(m.size());
    std::vector<Rational> a = background_charge(m);
    // (Q,Q) = aᵀ m a = aᵀ rhs since m a = rhs
    Rational qq = 0;
    for (int i = 0; i < n; ++i) qq += a[i] * (m[i][i] / 2 - 1);
    return Rational(n) - 12 * qq;
}

Rational central_charge_rank2(const RationalMatrix& m) {
    if (m.size() != 2) throw DomainError("central_charge_rank2 needs a 2x2 matrix");
    Rational det = m[0][0] * m[1][1] - m[0][1] * m[0][1];
    if (det == 0) throw SingularGram("gram matrix is singular");
    Rational a = m[1][1] - 2, b = m[0][0] - 2;
    Rational num = a * a * m[0][0] - 2 * a * b * m[0][1] + b * b * m[1][1];
    return 2 - 3 * num / det;
}

} // namespace latreal
