#pragma once

#include "latreal/constraints.hpp"
#include "latreal/unit_root.hpp"

#include <string>
#include <vector>

namespace latreal {

// Generalized Cartan matrix: a_ii = 2, a_ij ≤ 0 off-diagonal.
class GeneralizedCartan {
public:
    GeneralizedCartan() = default;
    explicit GeneralizedCartan(std::vector<std::vector<long long>> entries);

    int rank() const { return static_cast<int>(entries_.size()); }
    long long at(int i, int j) const { return entries_[i][j]; }
    const std::vector<std::vector<long long>>& entries() const { return entries_; }

    bool operator==(const GeneralizedCartan& o) const { return entries_ == o.entries_; }

    GeneralizedCartan permuted(const std::vector<int>& perm) const;

private:
    std::vector<std::vector<long long>> entries_;
};

// A root may satisfy the Cartan identity toward one neighbour and the
// truncation identity toward another (Mixed); the realisation conditions
// are taken pairwise throughout.
enum class RootClass { CartanOnly, TruncationOnly, Both, Mixed };

std::string to_string(RootClass c);

// Diagonal braiding recorded through its exponents: node i carries e_ii with
// q_ii = e^{iπ e_ii}, the edge (i,j) carries the exponent of the product
// q_ij q_ji.  Entries may be affine in the family parameters; a diagram is
// "concrete" when no parameter appears.  Only the symmetrized products are
// ever stored: every operation used here (Cartan matrices, root classes,
// reflections) depends on q_ii and q_ij q_ji alone, and that class of
// diagrams is closed under reflection.
class BraidingDiagram {
public:
    BraidingDiagram() = default;
    BraidingDiagram(int rank, std::vector<AffineExpr> diag,
                    std::vector<std::vector<AffineExpr>> edges);

    int rank() const { return rank_; }
    const AffineExpr& node_exponent(int i) const { return diag_[i]; }
    const AffineExpr& edge_exponent(int i, int j) const { return edges_[i][j]; }

    bool concrete() const;

    // Concrete accessors.
    UnitRoot node(int i) const;
    UnitRoot edge_product(int i, int j) const;

    // Pullbacks of the symmetrized bilinear exponent form ê
    // (ê_ii = e_ii, ê_ij = e_ij/2): node exponent of Σ v_s α_s and edge
    // exponent of a pair of integer vectors.  Not reduced mod 2.
    AffineExpr pullback_node(const std::vector<long long>& v) const;
    AffineExpr pullback_edge(const std::vector<long long>& v, const std::vector<long long>& w) const;

    // Canonical form: every exponent's constant part reduced into [0,2).
    BraidingDiagram canonical() const;
    BraidingDiagram permuted(const std::vector<int>& perm) const;
    BraidingDiagram instantiated(const Assignment& assignment) const;

    // Mod-2 equality of exponents: equal parameter parts, even integer
    // difference of constants.
    bool equivalent_mod2(const BraidingDiagram& other) const;
    bool operator==(const BraidingDiagram& o) const;

    ConstraintSet& validity() { return validity_; }
    const ConstraintSet& validity() const { return validity_; }

    std::vector<std::string> params() const;

    std::string key() const; // canonical serialized form

private:
    int rank_ = 0;
    std::vector<AffineExpr> diag_;
    std::vector<std::vector<AffineExpr>> edges_;
    ConstraintSet validity_;
};

// a_ij = -min{ m ≥ 0 : q_ii^{-m} = q_ij q_ji  or  q_ii^{1+m} = 1 }.
// Concrete diagrams only.  Throws NotFiniteType when q_ii = 1 meets a
// nontrivial edge.
GeneralizedCartan cartan_matrix(const BraidingDiagram& q);

// Single-pair classification per the defining identities
// q_ii^{a_ij} = q_ij q_ji (Cartan) and q_ii^{1-a_ij} = 1 (truncation).
struct PairClass {
    bool cartan = false;
    bool truncation = false;
};
PairClass classify_pair(const BraidingDiagram& q, const GeneralizedCartan& a, int i, int j);

// Aggregates over all j ≠ i; the truncation condition quantifies over
// connected pairs only (disconnected pairs satisfy the Cartan identity
// trivially and say nothing about truncation).  Rank-1 roots are Both.
// Throws Inconsistent on a pairwise-mixed root.
RootClass classify_root(const BraidingDiagram& q, const GeneralizedCartan& a, int i);

// As classify_root but reports pairwise-mixed roots as Mixed.
RootClass classify_root_lenient(const BraidingDiagram& q, const GeneralizedCartan& a, int i);

std::vector<RootClass> classify_all(const BraidingDiagram& q, const GeneralizedCartan& a);

// Text grammar: `rank=<n>;` then `q[i]=<affine>` per node and
// `q[i,j]=<affine>` per edge with i<j; omitted edges are disconnected.
BraidingDiagram parse_diagram(const std::string& text);
std::string format_diagram(const BraidingDiagram& d);

} // namespace latreal
