#pragma once

#include "latreal/braiding.hpp"

#include <map>
#include <set>
#include <vector>

namespace latreal {

using RootVector = std::vector<long long>; // coordinates in the initial chamber's simple roots

// One Weyl-groupoid object: a basis (column k = k-th simple root of this
// chamber in initial coordinates, det ±1), the pulled-back braiding, its
// Cartan matrix and per-root classes.
struct Chamber {
    std::vector<RootVector> basis; // basis[k] is a column
    BraidingDiagram diagram;
    GeneralizedCartan cartan;
    std::vector<RootClass> classes;

    int rank() const { return static_cast<int>(basis.size()); }
};

// Reflection at the k-th simple root: α_k ↦ -α_k, α_i ↦ α_i - a_ki α_k,
// braiding transported by bilinear pullback of the exponent form, Cartan and
// classes recomputed.  Concrete diagrams only.
Chamber reflect(const Chamber& c, int k);

// Basis/diagram part of a reflection given the Cartan matrix; works on
// parametric diagrams too (no reclassification).
void reflect_basis_and_diagram(const std::vector<RootVector>& basis, const BraidingDiagram& diagram,
                               const GeneralizedCartan& cartan, int k,
                               std::vector<RootVector>& basis_out, BraidingDiagram& diagram_out);

struct GroupoidGraph {
    std::vector<Chamber> chambers;
    std::map<std::pair<int, int>, int> edges; // (chamber, k) -> chamber
    int initial = 0;
};

// Closure of the initial chamber under all reflections, breadth-first.
// Chambers are deduplicated by the pair (multiset of signed basis columns,
// braiding permuted accordingly).  Throws BudgetExceeded when more than
// `budget` chambers appear, which in practice signals a non-finite type.
GroupoidGraph enumerate_groupoid(const BraidingDiagram& q0, int budget = 10000);

struct RootSystem {
    std::vector<RootVector> positive_roots; // sorted, positive representatives
};

// All simple-root images over all chambers, normalized so the first nonzero
// coordinate is positive.
RootSystem positive_roots(const GroupoidGraph& g);

// Distinct Cartan matrices appearing among the chambers.
std::vector<GeneralizedCartan> distinct_cartans(const GroupoidGraph& g);

Chamber initial_chamber(const BraidingDiagram& q0);

} // namespace latreal
