#pragma once

#include "latreal/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace latreal {

// Parameters are plain names ("r", "r'", "r''", "r'''" for diagram families,
// "m11", "m12", ... for solver unknowns).  The canonical order puts the
// family parameters first; linear solving eliminates the highest-ranked
// parameter of each equation, which keeps family parameters free.
int param_rank_order(const std::string& a, const std::string& b); // <0, 0, >0

struct ParamLess {
    bool operator()(const std::string& a, const std::string& b) const {
        return param_rank_order(a, b) < 0;
    }
};

using Assignment = std::map<std::string, Rational, ParamLess>;

// Degree-≤1 expression c + Σ a_p · p over named parameters.
// No zero coefficients are stored.
class AffineExpr {
public:
    AffineExpr() = default;
    AffineExpr(Rational constant) : constant_(std::move(constant)) {} // NOLINT(implicit)
    AffineExpr(long long constant) : constant_(constant) {}           // NOLINT(implicit)

    static AffineExpr param(const std::string& name, Rational coeff = 1);

    const Rational& constant() const { return constant_; }
    const std::map<std::string, Rational, ParamLess>& coeffs() const { return coeffs_; }

    bool is_constant() const { return coeffs_.empty(); }
    bool is_zero() const { return coeffs_.empty() && constant_ == 0; }
    Rational coeff(const std::string& name) const;

    AffineExpr operator+(const AffineExpr& o) const;
    AffineExpr operator-(const AffineExpr& o) const;
    AffineExpr operator-() const;
    AffineExpr operator*(const Rational& s) const;
    AffineExpr& operator+=(const AffineExpr& o);

    bool operator==(const AffineExpr& o) const {
        return constant_ == o.constant_ && coeffs_ == o.coeffs_;
    }

    // Replaces one parameter by an expression.
    AffineExpr substituted(const std::string& name, const AffineExpr& value) const;

    // Evaluates with every parameter bound; throws UnboundParameter otherwise.
    Rational evaluate(const Assignment& assignment) const;

    // Evaluates binding only the given parameters; others stay symbolic.
    AffineExpr partial_evaluate(const Assignment& assignment) const;

    // Constant part reduced into [0,2); parameter part unchanged.  Exponent
    // expressions are mod-2 entities, so this is their canonical form.
    AffineExpr constant_mod2() const;

    std::vector<std::string> params() const;

    std::string str() const; // e.g. "2/3 - 2r"

private:
    Rational constant_ = 0;
    std::map<std::string, Rational, ParamLess> coeffs_;
};

inline AffineExpr operator*(const Rational& s, const AffineExpr& e) { return e * s; }

// Parses the affine grammar used in diagrams and catalog files:
// terms are rationals or (rational·)params joined by +/-;
// "2r", "-r", "8/3-2r", "1/2 r'" are accepted.
std::optional<AffineExpr> parse_affine(const std::string& text);

} // namespace latreal
