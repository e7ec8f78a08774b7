#pragma once

#include "latreal/rational.hpp"

#include <vector>

namespace latreal {

using RationalMatrix = std::vector<std::vector<Rational>>;

// Coefficients a with Q = Σ a_j v_j solving Σ_j a_j m_ij = m_ii/2 - 1 for
// every i.  Throws SingularGram on a degenerate lattice.
std::vector<Rational> background_charge(const RationalMatrix& m);

// c = rank - 12 (Q, Q) with Q the background charge.
Rational central_charge(const RationalMatrix& m);

// Rank-2 closed form
// c = 2 - 3 [(m22-2)² m11 - 2 (m22-2)(m11-2) m12 + (m11-2)² m22] / det m.
Rational central_charge_rank2(const RationalMatrix& m);

} // namespace latreal
