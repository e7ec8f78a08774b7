#include "latreal/cyclotomic.hpp"

#include "latreal/errors.hpp"

namespace latreal {

long long euler_phi(long long n) {
    long long result = n;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

namespace {

// exact division of integer polynomials, quotient known to be integral
std::vector<BigInt> poly_divide_exact(std::vector<BigInt> num, const std::vector<BigInt>& den) {
    std::vector<BigInt> q(num.size() - den.size() + 1, BigInt(0));
    for (long long i = static_cast<long long>(q.size()) - 1; i >= 0; --i) {
        BigInt c = num[i + den.size() - 1] / den.back();
        q[i] = c;
        for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
    }
    return q;
}

} // namespace

std::vector<BigInt> cyclotomic_polynomial(long long N) {
    // Φ_N = (x^N - 1) / Π_{d | N, d < N} Φ_d
    std::vector<BigInt> poly(N + 1, BigInt(0));
    poly[0] = -1;
    poly[N] = 1;
    for (long long d = 1; d < N; ++d) {
        if (N % d != 0) continue;
        poly = poly_divide_exact(std::move(poly), cyclotomic_polynomial(d));
    }
    return poly;
}

CyclotomicField::CyclotomicField(long long N) : order_(N) {
    if (N < 1) throw DomainError("cyclotomic order must be positive");
    auto phi = cyclotomic_polynomial(N);
    modulus_.reserve(phi.size());
    for (const auto& c : phi) modulus_.emplace_back(c);
}

CyclotomicField::Elem CyclotomicField::one() const { return from_rational(1); }

CyclotomicField::Elem CyclotomicField::from_rational(const Rational& x) const {
    Elem e = zero();
    e[0] = x;
    return e;
}

CyclotomicField::Elem CyclotomicField::root_power(long long k) const {
    k %= order_;
    if (k < 0) k += order_;
    // reduce x^k mod Φ_N
    Elem e = zero();
    if (k < degree()) {
        e[k] = 1;
        return e;
    }
    std::vector<Rational> acc(k + 1, Rational(0));
    acc[k] = 1;
    for (long long i = k; i >= degree(); --i) {
        if (acc[i] == 0) continue;
        Rational c = acc[i]; // modulus is monic
        acc[i] = 0;
        for (int j = 0; j < degree(); ++j) acc[i - degree() + j] -= c * modulus_[j];
    }
    for (int j = 0; j < degree(); ++j) e[j] = acc[j];
    return e;
}

bool CyclotomicField::is_zero(const Elem& a) const {
    for (const auto& c : a)
        if (c != 0) return false;
    return true;
}

CyclotomicField::Elem CyclotomicField::add(const Elem& a, const Elem& b) const {
    Elem e = a;
    for (int i = 0; i < degree(); ++i) e[i] += b[i];
    return e;
}

CyclotomicField::Elem CyclotomicField::sub(const Elem& a, const Elem& b) const {
    Elem e = a;
    for (int i = 0; i < degree(); ++i) e[i] -= b[i];
    return e;
}

CyclotomicField::Elem CyclotomicField::neg(const Elem& a) const {
    Elem e = a;
    for (auto& c : e) c = -c;
    return e;
}

CyclotomicField::Elem CyclotomicField::mul(const Elem& a, const Elem& b) const {
    int n = degree();
    std::vector<Rational> acc(2 * n - 1, Rational(0));
    for (int i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < n; ++j) {
            if (b[j] == 0) continue;
            acc[i + j] += a[i] * b[j];
        }
    }
    for (int i = 2 * n - 2; i >= n; --i) {
        if (acc[i] == 0) continue;
        Rational c = acc[i];
        acc[i] = 0;
        for (int j = 0; j < n; ++j) acc[i - n + j] -= c * modulus_[j];
    }
    Elem e = zero();
    for (int i = 0; i < n; ++i) e[i] = acc[i];
    return e;
}

CyclotomicField::Elem CyclotomicField::mul_scalar(const Elem& a, const Rational& s) const {
    Elem e = a;
    for (auto& c : e) c *= s;
    return e;
}

CyclotomicField::Elem CyclotomicField::inverse(const Elem& a) const {
    if (is_zero(a)) throw DomainError("division by zero in cyclotomic field");
    // extended Euclid over Q[x] against the modulus
    using Poly = std::vector<Rational>;
    auto deg = [](const Poly& p) {
        for (long long i = static_cast<long long>(p.size()) - 1; i >= 0; --i)
            if (p[i] != 0) return i;
        return static_cast<long long>(-1);
    };
    auto trim = [&](Poly& p) { p.resize(std::max<long long>(deg(p) + 1, 1)); };
    Poly r0 = modulus_, r1(a.begin(), a.end());
    trim(r1);
    Poly t0(1, Rational(0)), t1(1, Rational(1));
    while (deg(r1) > 0) {
        // divide r0 by r1
        Poly q(deg(r0) - deg(r1) + 1, Rational(0));
        Poly rem = r0;
        while (deg(rem) >= deg(r1)) {
            long long shift = deg(rem) - deg(r1);
            Rational c = rem[deg(rem)] / r1[deg(r1)];
            q[shift] += c;
            for (long long j = 0; j <= deg(r1); ++j) rem[j + shift] -= c * r1[j];
            trim(rem);
            if (deg(rem) < 0) break;
        }
        // (r0, r1) <- (r1, rem); (t0, t1) <- (t1, t0 - q t1)
        Poly qt(q.size() + t1.size() - 1, Rational(0));
        for (std::size_t i = 0; i < q.size(); ++i)
            for (std::size_t j = 0; j < t1.size(); ++j) qt[i + j] += q[i] * t1[j];
        Poly t2(std::max(t0.size(), qt.size()), Rational(0));
        for (std::size_t i = 0; i < t0.size(); ++i) t2[i] += t0[i];
        for (std::size_t i = 0; i < qt.size(); ++i) t2[i] -= qt[i];
        trim(t2);
        r0 = std::move(r1);
        r1 = std::move(rem);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (deg(r1) != 0) throw InternalError("element and cyclotomic modulus share a factor");
    Rational scale = Rational(1) / r1[0];
    Elem inv = zero();
    for (std::size_t i = 0; i < t1.size() && i < static_cast<std::size_t>(degree()); ++i)
        inv[i] = t1[i] * scale;
    // t1 may exceed the basis size only via cancelled leading zeros
    return inv;
}

long long cyclotomic_rank(const CyclotomicField& field,
                          std::vector<std::vector<CyclotomicField::Elem>> matrix) {
    if (matrix.empty()) return 0;
    std::size_t rows = matrix.size(), cols = matrix[0].size();
    long long rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = rows;
        for (std::size_t r = row; r < rows; ++r)
            if (!field.is_zero(matrix[r][col])) {
                pivot = r;
                break;
            }
        if (pivot == rows) continue;
        std::swap(matrix[row], matrix[pivot]);
        auto inv = field.inverse(matrix[row][col]);
        for (std::size_t c = col; c < cols; ++c) matrix[row][c] = field.mul(matrix[row][c], inv);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row || field.is_zero(matrix[r][col])) continue;
            auto f = matrix[r][col];
            for (std::size_t c = col; c < cols; ++c)
                matrix[r][c] = field.sub(matrix[r][c], field.mul(f, matrix[row][c]));
        }
        ++row;
        ++rank;
    }
    return rank;
}

} // namespace latreal
