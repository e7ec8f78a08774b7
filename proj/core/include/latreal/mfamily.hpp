#pragma once

#include "latreal/groupoid.hpp"

namespace latreal {

// Symmetric matrix of affine entries: a parametric family of Gram matrices.
using AffineMatrix = std::vector<std::vector<AffineExpr>>;

AffineMatrix seed_matrix(int rank, const std::string& prefix = "m");
AffineMatrix constant_matrix(const std::vector<std::vector<Rational>>& values);
bool matrix_equal(const AffineMatrix& a, const AffineMatrix& b);
AffineMatrix substitute(const AffineMatrix& m, const ConstraintSet& s);
AffineMatrix permuted(const AffineMatrix& m, const std::vector<int>& perm);
std::vector<std::vector<Rational>> evaluate(const AffineMatrix& m, const Assignment& a);

// m' = Rᵀ m R for the reflection at root k (α_k ↦ -α_k, α_i ↦ α_i - a_ki α_k).
// Constraints on the family are untouched by transport.
AffineMatrix m_reflect(const AffineMatrix& m, const GeneralizedCartan& a, int k);

// m expressed in the chamber with the given basis: Bᵀ m B.
AffineMatrix transport(const AffineMatrix& m, const std::vector<RootVector>& basis);

enum class Cond7Choice { A, B }; // A: m-Cartan, B: m-truncation

// Residuals that must vanish for root i to satisfy condition A or B
// against every other root.  Disconnected pairs (a_ij = 0) admit only the
// Cartan identity 2m_ij = 0, so choice B falls back to it there; this is
// where strong-orthogonality constraints like r' + r'' = 1 come from.
std::vector<AffineExpr> cond7_residuals(const AffineMatrix& m, const GeneralizedCartan& a, int i,
                                        Cond7Choice choice);

// One family of realising Gram matrices attached to a chamber.
struct MFamily {
    AffineMatrix entries;
    ConstraintSet constraints;
    int chamber_class = 0; // diagram-class id within a report
    int orbit = 0;
};

} // namespace latreal
