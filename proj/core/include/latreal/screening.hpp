#pragma once

#include "latreal/charge.hpp"
#include "latreal/groupoid.hpp"

#include <string>
#include <vector>

namespace latreal {

// Gram data of the screening vectors plus the pairings m_i = (v_i, λ)
// against a module weight (zero for the vacuum).
struct WeightContext {
    RationalMatrix m;
    std::vector<Rational> weights;
};

enum class SmallnessMode { Subsets, Submultisets };

// The smallness inequality for a relation of multidegree d:
//   Σ_{i<j∈J} d_i d_j m_ij + Σ_{i∈J} C(d_i,2) m_ii > 1 - Σ_{i∈J} d_i
// quantified over index subsets J (default) or over sub-multisets d' ≤ d.
// Monomials of total degree ≤ 1 are single screenings and count as small.
bool smallness_holds(const WeightContext& ctx, const std::vector<long long>& degree,
                     SmallnessMode mode = SmallnessMode::Subsets);

// Continued smallness for n equal screenings: k·m_vv/2 ∉ -ℕ for k = 1..n.
bool continued_smallness_a(const Rational& m_vv, long long n);

// Continued smallness with one distinguished screening:
//   k·m_ij/2 ∉ -ℕ (k = 1..n-1)  and  m_1j + k·m_ij/2 ∉ -ℕ (k = 0..n-2).
bool continued_smallness_b(const Rational& m_1j, const Rational& m_ij, long long n);

struct RelationSpec {
    enum class Kind { Truncation, Serre, Extra };
    Kind kind = Kind::Truncation;
    RootVector root;             // truncation: positive root in simple coordinates
    long long power = 0;         // truncation: ord(q_γγ)
    bool simple = false;         // truncation of a simple root
    int serre_i = -1;            // Serre: repeated generator
    int serre_j = -1;            // Serre: closing generator
    bool required = true;        // Serre with q_ii^{1-a_ij} = 1 is not defining
    std::string tag;             // extra-relation identifier
    std::vector<long long> degree;
};

enum class RelationStatus {
    HoldsBySmallness,
    HoldsByContinuedSmallness,
    HoldsByIdentity,
    ExpectedFail,
    Undetermined,
};

std::string to_string(RelationStatus s);

struct RelationReportEntry {
    RelationSpec spec;
    RelationStatus status = RelationStatus::Undetermined;
    std::string note; // condition instance that produced the status
};

// Truncations for every positive root, Serre relations for every ordered
// pair (flagged not-required when q_ii^{1-a_ij} = 1), and the extra
// relations of the small-order exceptional subdiagrams.
std::vector<RelationSpec> defining_relations(const BraidingDiagram& q, int budget = 10000);

// Per-relation status of the screening algebra for a concrete realising
// matrix m of the braiding q.
std::vector<RelationReportEntry> relation_report(const RationalMatrix& m,
                                                 const BraidingDiagram& q,
                                                 SmallnessMode mode = SmallnessMode::Subsets,
                                                 int budget = 10000);

} // namespace latreal
