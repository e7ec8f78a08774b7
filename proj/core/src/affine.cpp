#include "latreal/affine.hpp"

#include "latreal/errors.hpp"

#include <array>
#include <cctype>
#include <sstream>

namespace latreal {

namespace {
int family_param_rank(const std::string& name) {
    static const std::array<std::string, 4> kFamily = {"r", "r'", "r''", "r'''"};
    for (std::size_t i = 0; i < kFamily.size(); ++i)
        if (name == kFamily[i]) return static_cast<int>(i);
    return -1;
}
} // namespace

int param_rank_order(const std::string& a, const std::string& b) {
    int ra = family_param_rank(a), rb = family_param_rank(b);
    if (ra >= 0 && rb >= 0) return ra - rb;
    if (ra >= 0) return -1;
    if (rb >= 0) return 1;
    return a.compare(b);
}

AffineExpr AffineExpr::param(const std::string& name, Rational coeff) {
    AffineExpr e;
    if (coeff != 0) e.coeffs_[name] = std::move(coeff);
    return e;
}

Rational AffineExpr::coeff(const std::string& name) const {
    auto it = coeffs_.find(name);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

AffineExpr AffineExpr::operator+(const AffineExpr& o) const {
    AffineExpr r = *this;
    r += o;
    return r;
}

AffineExpr& AffineExpr::operator+=(const AffineExpr& o) {
    constant_ += o.constant_;
    for (const auto& [name, c] : o.coeffs_) {
        Rational v = coeff(name) + c;
        if (v == 0)
            coeffs_.erase(name);
        else
            coeffs_[name] = v;
    }
    return *this;
}

AffineExpr AffineExpr::operator-(const AffineExpr& o) const { return *this + (-o); }

AffineExpr AffineExpr::operator-() const { return *this * Rational(-1); }

AffineExpr AffineExpr::operator*(const Rational& s) const {
    AffineExpr r;
    if (s == 0) return r;
    r.constant_ = constant_ * s;
    for (const auto& [name, c] : coeffs_) r.coeffs_[name] = c * s;
    return r;
}

AffineExpr AffineExpr::substituted(const std::string& name, const AffineExpr& value) const {
    auto it = coeffs_.find(name);
    if (it == coeffs_.end()) return *this;
    Rational c = it->second;
    AffineExpr r = *this;
    r.coeffs_.erase(name);
    return r + value * c;
}

Rational AffineExpr::evaluate(const Assignment& assignment) const {
    Rational v = constant_;
    for (const auto& [name, c] : coeffs_) {
        auto it = assignment.find(name);
        if (it == assignment.end()) throw UnboundParameter("parameter '" + name + "' is unbound");
        v += c * it->second;
    }
    return v;
}

AffineExpr AffineExpr::partial_evaluate(const Assignment& assignment) const {
    AffineExpr r;
    r.constant_ = constant_;
    for (const auto& [name, c] : coeffs_) {
        auto it = assignment.find(name);
        if (it == assignment.end())
            r.coeffs_[name] = c;
        else
            r.constant_ += c * it->second;
    }
    return r;
}

AffineExpr AffineExpr::constant_mod2() const {
    AffineExpr r = *this;
    r.constant_ = reduce_mod2(r.constant_);
    return r;
}

std::vector<std::string> AffineExpr::params() const {
    std::vector<std::string> v;
    v.reserve(coeffs_.size());
    for (const auto& [name, c] : coeffs_) v.push_back(name);
    return v;
}

std::string AffineExpr::str() const {
    std::ostringstream out;
    bool first = true;
    if (constant_ != 0 || coeffs_.empty()) {
        out << to_string(constant_);
        first = false;
    }
    for (const auto& [name, c] : coeffs_) {
        if (!first) out << (c >= 0 ? " + " : " - ");
        Rational a = (!first && c < 0) ? Rational(-c) : c;
        if (first && a == -1)
            out << "-";
        else if (a != 1)
            out << to_string(a);
        out << name;
        first = false;
    }
    return out.str();
}

std::optional<AffineExpr> parse_affine(const std::string& text) {
    std::size_t i = 0, n = text.size();
    auto skip_ws = [&] { while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    AffineExpr result;
    bool at_least_one = false;
    skip_ws();
    while (i < n) {
        Rational sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            if (text[i] == '-') sign = -1;
            ++i;
            skip_ws();
        } else if (at_least_one) {
            return std::nullopt; // terms must be joined by +/-
        }
        // optional rational coefficient
        bool have_coeff = false;
        Rational coeff = 1;
        if (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
            std::size_t start = i;
            while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            BigInt num(text.substr(start, i - start));
            BigInt den = 1;
            if (i < n && text[i] == '/') {
                ++i;
                start = i;
                while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
                if (i == start) return std::nullopt;
                den = BigInt(text.substr(start, i - start));
                if (den == 0) return std::nullopt;
            }
            coeff = Rational(num, den);
            have_coeff = true;
            skip_ws();
            if (i < n && text[i] == '*') {
                ++i;
                skip_ws();
            }
        }
        // optional parameter name: a letter, then alphanumerics, then primes
        std::size_t start = i;
        if (i < n && std::isalpha(static_cast<unsigned char>(text[i]))) {
            ++i;
            while (i < n && std::isalnum(static_cast<unsigned char>(text[i]))) ++i;
            while (i < n && text[i] == '\'') ++i;
        }
        std::string name = text.substr(start, i - start);
        if (name.empty()) {
            if (!have_coeff) return std::nullopt;
            result += AffineExpr(coeff * sign);
        } else {
            result += AffineExpr::param(name, coeff * sign);
        }
        at_least_one = true;
        skip_ws();
    }
    if (!at_least_one) return std::nullopt;
    return result;
}

} // namespace latreal
