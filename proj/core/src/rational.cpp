#include "latreal/rational.hpp"

#include <cctype>

namespace latreal {

bool is_integer(const Rational& x) { return denominator(x) == 1; }

BigInt floor_int(const Rational& x) {
    BigInt q = numerator(x) / denominator(x);
    // Integer division truncates toward zero; fix up negatives.
    if (x < 0 && q * denominator(x) != numerator(x)) --q;
    return q;
}

Rational reduce_mod2(const Rational& x) {
    Rational half = x / 2;
    Rational r = x - 2 * Rational(floor_int(half));
    if (r < 0) r += 2; // guard, floor should prevent this
    if (r >= 2) r -= 2;
    return r;
}

bool congruent(const Rational& x, const Rational& y, const Rational& m) {
    Rational d = (x - y) / m;
    return is_integer(d);
}

bool is_negative_integer(const Rational& x) { return x < 0 && is_integer(x); }

std::string to_string(const Rational& x) {
    if (is_integer(x)) return numerator(x).str();
    return numerator(x).str() + "/" + denominator(x).str();
}

std::optional<Rational> parse_rational(const std::string& text) {
    std::size_t i = 0, n = text.size();
    auto skip_ws = [&] { while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip_ws();
    bool neg = false;
    if (i < n && (text[i] == '+' || text[i] == '-')) neg = text[i++] == '-';
    skip_ws();
    std::size_t start = i;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start) return std::nullopt;
    BigInt num(text.substr(start, i - start));
    BigInt den = 1;
    skip_ws();
    if (i < n && text[i] == '/') {
        ++i;
        skip_ws();
        start = i;
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) return std::nullopt;
        den = BigInt(text.substr(start, i - start));
        if (den == 0) return std::nullopt;
        skip_ws();
    }
    if (i != n) return std::nullopt;
    Rational r(num, den);
    return neg ? Rational(-r) : r;
}

double to_double(const Rational& x) { return x.convert_to<double>(); }

} // namespace latreal
