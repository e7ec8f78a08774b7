#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace latreal {

// Exact rational scalar. cpp_rational keeps values in lowest terms with a
// positive denominator, which is exactly the invariant we need.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rational rat(long long num, long long den = 1) { return Rational(num, den); }

inline BigInt numerator(const Rational& x) { return boost::multiprecision::numerator(x); }
inline BigInt denominator(const Rational& x) { return boost::multiprecision::denominator(x); }

bool is_integer(const Rational& x);

// floor(x) as a big integer.
BigInt floor_int(const Rational& x);

// Canonical representative of x modulo 2 in [0, 2).
Rational reduce_mod2(const Rational& x);

// x ≡ y (mod m), exact. m must be nonzero.
bool congruent(const Rational& x, const Rational& y, const Rational& m);

// True iff x ∈ -ℕ = {-1, -2, -3, ...}.
bool is_negative_integer(const Rational& x);

// Serialized as "p/q", or "p" when q = 1.
std::string to_string(const Rational& x);

// Parses "p", "p/q", with optional sign and surrounding whitespace.
std::optional<Rational> parse_rational(const std::string& text);

double to_double(const Rational& x);

} // namespace latreal
