#pragma once

#include "latreal/rational.hpp"

namespace latreal {

// A root of unity q = e^{iπe}, stored purely as the rational exponent e
// reduced mod 2 into [0, 2).  All equality tests are exact; no floats.
class UnitRoot {
public:
    UnitRoot() : exponent_(0) {}
    explicit UnitRoot(const Rational& exponent) : exponent_(reduce_mod2(exponent)) {}

    const Rational& exponent() const { return exponent_; }

    bool operator==(const UnitRoot& other) const { return exponent_ == other.exponent_; }
    bool operator!=(const UnitRoot& other) const { return !(*this == other); }

    UnitRoot operator*(const UnitRoot& other) const { return UnitRoot(exponent_ + other.exponent_); }

    UnitRoot pow(long long k) const { return UnitRoot(exponent_ * k); }
    UnitRoot inverse() const { return UnitRoot(-exponent_); }

    bool is_one() const { return exponent_ == 0; }

private:
    Rational exponent_;
};

// Order of q = e^{iπe}: the least n ≥ 1 with n·e ≡ 0 (mod 2).
// For e = p/q in lowest terms this is 2q / gcd(p, 2q).
inline long long unit_root_order(const UnitRoot& u) {
    BigInt p = numerator(u.exponent());
    BigInt q = denominator(u.exponent());
    BigInt n = 2 * q / boost::multiprecision::gcd(p, 2 * q);
    return n.convert_to<long long>();
}

} // namespace latreal
