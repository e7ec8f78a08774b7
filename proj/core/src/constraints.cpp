#include "latreal/constraints.hpp"

#include <algorithm>
#include <iterator>
#include <sstream>

namespace latreal {

bool Exclusion::violated_by(const Assignment& a) const {
    Rational v = expr.evaluate(a);
    if (modulus == 0) return v == value;
    return congruent(v, value, modulus);
}

std::string Exclusion::str() const {
    if (modulus == 0) return expr.str() + " != " + to_string(value);
    return expr.str() + " !≡ " + to_string(value) + " (mod " + to_string(modulus) + ")";
}

bool Congruence::satisfied_by(const Assignment& a) const {
    return congruent(expr.evaluate(a), 0, modulus);
}

std::string Congruence::str() const {
    return expr.str() + " ≡ 0 (mod " + to_string(modulus) + ")";
}

bool ConstraintSet::add_equality(const AffineExpr& expr, const EquationTag& tag) {
    if (infeasible_) return false;
    AffineExpr e = substitute(expr);
    if (e.is_zero()) return true;
    if (e.is_constant()) {
        infeasible_ = true;
        // Build a witness: find a solved parameter p such that the original
        // equation, substituted for everything except p, pins p to a value
        // different from its solved value.  Prefer the most recently pinned.
        for (auto it = solved_.rbegin(); it != solved_.rend(); ++it) {
            const auto& [p, sol] = *it;
            if (!sol.is_constant()) continue;
            AffineExpr partial = expr;
            for (const auto& [q, qsol] : solved_) {
                if (q == p) continue;
                partial = partial.substituted(q, qsol);
            }
            Rational c = partial.coeff(p);
            if (c == 0) continue;
            AffineExpr rest = partial.substituted(p, AffineExpr(Rational(0)));
            if (!rest.is_constant()) continue;
            Rational alternative = -rest.constant() / c;
            ConflictWitness w;
            w.parameter = p;
            w.first_value = sol.constant();
            w.second_value = alternative;
            std::size_t idx = static_cast<std::size_t>(std::distance(it, solved_.rend())) - 1;
            w.first_tag = tags_[idx];
            w.second_tag = tag;
            conflict_ = std::move(w);
            break;
        }
        return false;
    }
    // Eliminate the highest-ranked parameter present.
    std::string pivot = e.coeffs().rbegin()->first;
    Rational c = e.coeff(pivot);
    AffineExpr sol = (e.substituted(pivot, AffineExpr(Rational(0)))) * (Rational(-1) / c);
    // Back-substitute into existing solutions.
    for (auto& [p, s] : solved_) s = s.substituted(pivot, sol);
    solved_.emplace_back(pivot, sol);
    tags_.push_back(tag);
    return true;
}

AffineExpr ConstraintSet::substitute(const AffineExpr& expr) const {
    AffineExpr e = expr;
    for (const auto& [p, sol] : solved_) e = e.substituted(p, sol);
    return e;
}

std::optional<AffineExpr> ConstraintSet::solution_for(const std::string& name) const {
    for (const auto& [p, sol] : solved_)
        if (p == name) return sol;
    return std::nullopt;
}

Assignment ConstraintSet::complete(const Assignment& free_values) const {
    Assignment a = free_values;
    for (auto it = solved_.rbegin(); it != solved_.rend(); ++it) {
        // solved_ entries are fully back-substituted, any order works
        a[it->first] = it->second.evaluate(free_values);
    }
    return a;
}

bool ConstraintSet::satisfied_by(const Assignment& a) const {
    if (infeasible_) return false;
    for (const auto& [p, sol] : solved_)
        if (a.at(p) != sol.evaluate(a)) return false;
    for (const auto& c : congruences_)
        if (!c.satisfied_by(a)) return false;
    for (const auto& x : exclusions_)
        if (x.violated_by(a)) return false;
    return true;
}

std::string ConstraintSet::canonical_key() const {
    if (infeasible_) return "<infeasible>";
    std::vector<std::pair<std::string, AffineExpr>> sorted = solved_;
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& a, const auto& b) { return ParamLess{}(a.first, b.first); });
    std::ostringstream out;
    for (const auto& [p, sol] : sorted) out << p << "=" << sol.str() << ";";
    return out.str();
}

ConstraintSet solve_linear(const std::vector<AffineExpr>& equalities) {
    ConstraintSet s;
    for (const auto& e : equalities)
        if (!s.add_equality(e)) break;
    return s;
}

} // namespace latreal
