#pragma once

#include "latreal/affine.hpp"

#include <optional>
#include <string>
#include <vector>

namespace latreal {

// expr ≢ value (mod modulus); modulus 0 means a plain forbidden value.
// Encodes diagram validity conditions such as "q² ≠ ±1".
struct Exclusion {
    AffineExpr expr;
    Rational value = 0;
    Rational modulus = 0;

    bool violated_by(const Assignment& a) const;
    std::string str() const;
};

// expr ≡ 0 (mod modulus).  Carried as metadata on parametric families and
// checked only at concrete assignments.
struct Congruence {
    AffineExpr expr;
    Rational modulus = 2;

    bool satisfied_by(const Assignment& a) const;
    std::string str() const;
};

// Source tag for an equality, used to build no-solution witnesses.
struct EquationTag {
    int chamber = -1;        // index into the solver's chamber list
    std::string description; // e.g. "root 2 truncation"
};

struct ConflictWitness {
    std::string parameter;
    Rational first_value;
    Rational second_value;
    EquationTag first_tag;
    EquationTag second_tag;
};

// A set of linear equalities over the rationals kept in solved
// (triangularized, back-substituted) form, plus congruences and exclusions.
// Equalities are added incrementally; each add eliminates the
// highest-ranked parameter of the incoming equation, so family parameters
// (r, r', ...) are the last to be pinned and stay free when possible.
class ConstraintSet {
public:
    ConstraintSet() = default;

    // expr = 0.  Returns false (and marks the set infeasible) on conflict.
    bool add_equality(const AffineExpr& expr, const EquationTag& tag = {});

    void add_congruence(Congruence c) { congruences_.push_back(std::move(c)); }
    void add_exclusion(Exclusion e) { exclusions_.push_back(std::move(e)); }

    bool infeasible() const { return infeasible_; }
    const std::optional<ConflictWitness>& conflict() const { return conflict_; }

    // Replaces solved parameters by their expressions over free parameters.
    AffineExpr substitute(const AffineExpr& expr) const;

    // True iff expr = 0 is already implied by the solved equalities.
    bool implies_zero(const AffineExpr& expr) const { return substitute(expr).is_zero(); }

    // Solved parameter -> expression over free parameters, in solve order.
    const std::vector<std::pair<std::string, AffineExpr>>& solved() const { return solved_; }
    std::optional<AffineExpr> solution_for(const std::string& name) const;

    const std::vector<Congruence>& congruences() const { return congruences_; }
    const std::vector<Exclusion>& exclusions() const { return exclusions_; }

    // Extends a partial assignment of the free parameters with the solved
    // ones, then checks congruences and exclusions.
    Assignment complete(const Assignment& free_values) const;
    bool satisfied_by(const Assignment& full_assignment) const;

    // For canonical comparison/deduplication of solver states.
    std::string canonical_key() const;

private:
    bool infeasible_ = false;
    std::optional<ConflictWitness> conflict_;
    std::vector<std::pair<std::string, AffineExpr>> solved_;
    std::vector<EquationTag> tags_; // parallel to solved_
    std::vector<Congruence> congruences_;
    std::vector<Exclusion> exclusions_;
};

// Solves a list of equalities (each asserted = 0) over the declared
// parameters.  Equivalent to folding add_equality over a fresh set.
ConstraintSet solve_linear(const std::vector<AffineExpr>& equalities);

} // namespace latreal
