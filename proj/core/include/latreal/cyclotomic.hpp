#pragma once

#include "latreal/rational.hpp"

#include <vector>

namespace latreal {

long long euler_phi(long long n);

// Coefficients of the N-th cyclotomic polynomial (monic, integer).
std::vector<BigInt> cyclotomic_polynomial(long long N);

// Exact arithmetic in Q(ζ_N) represented in the power basis
// {ζ^0, ..., ζ^{φ(N)-1}} modulo Φ_N.
class CyclotomicField {
public:
    using Elem = std::vector<Rational>; // dense, size = degree()

    explicit CyclotomicField(long long N);

    long long order() const { return order_; }
    int degree() const { return static_cast<int>(modulus_.size()) - 1; }

    Elem zero() const { return Elem(degree(), Rational(0)); }
    Elem one() const;
    Elem from_rational(const Rational& x) const;
    Elem root_power(long long k) const; // ζ^k

    bool is_zero(const Elem& a) const;
    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem mul_scalar(const Elem& a, const Rational& s) const;
    Elem inverse(const Elem& a) const; // throws DomainError on zero

private:
    long long order_;
    std::vector<Rational> modulus_; // Φ_N with rational coefficients, monic
};

// Rank of a matrix over Q(ζ_N) by Gaussian elimination.
long long cyclotomic_rank(const CyclotomicField& field,
                          std::vector<std::vector<CyclotomicField::Elem>> matrix);

} // namespace latreal
