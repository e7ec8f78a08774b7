#pragma once

#include "latreal/braiding.hpp"
#include "latreal/cyclotomic.hpp"
#include "latreal/groupoid.hpp"

#include <map>

namespace latreal {

enum class WordStrategy { BubbleSort, Lexicographic };

// Quantum symmetrizer of a concrete diagonal braiding, acting degreewise on
// tensor words.  The braiding needs individual q_ij; the symmetric gauge
// q_ij = q_ji = (q_ij q_ji)^{1/2} is realized exactly by halving exponents
// inside a cyclotomic field of doubled order (dimension counts only depend
// on q_ii and the products, by twist equivalence).
class QuantumSymmetrizer {
public:
    explicit QuantumSymmetrizer(const BraidingDiagram& q, int degree_cap = 6);

    const CyclotomicField& field() const { return field_; }
    int degree_cap() const { return degree_cap_; }

    // Basis words of a multidegree block, in lexicographic order.
    std::vector<std::vector<int>> words(const std::vector<long long>& degree) const;

    // Ш restricted to the multidegree block.
    std::vector<std::vector<CyclotomicField::Elem>> block(
        const std::vector<long long>& degree,
        WordStrategy strategy = WordStrategy::BubbleSort) const;

    long long block_rank(const std::vector<long long>& degree,
                         WordStrategy strategy = WordStrategy::BubbleSort) const;

private:
    int rank_;
    int degree_cap_;
    CyclotomicField field_;
    std::vector<std::vector<long long>> q_power_; // q_ij = ζ^{q_power_[i][j]}
};

struct GradedDimensions {
    std::map<std::vector<long long>, long long> by_multidegree;
    std::vector<long long> by_total_degree; // index = total degree, [0] = 1
};

// rank of Ш per multidegree for all total degrees 1..max_degree
GradedDimensions graded_dimensions(const BraidingDiagram& q, int max_degree, int degree_cap = 6);

// Number of PBW monomials Π γ_k^{e_k} with 0 ≤ e_k < ℓ_k of a given
// multidegree; ℓ_k ≤ 0 means untruncated.
long long pbw_monomial_count(const std::vector<RootVector>& roots,
                             const std::vector<long long>& truncation_orders,
                             const std::vector<long long>& degree);

// Truncation orders ord(q_γγ) for a root list under a concrete braiding.
std::vector<long long> truncation_orders(const BraidingDiagram& q,
                                         const std::vector<RootVector>& roots);

} // namespace latreal
