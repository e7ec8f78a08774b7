#pragma once

#include "latreal/mfamily.hpp"

namespace latreal {

// Smallest positive integers d_i with d_i a_ij = d_j a_ji.
// Throws NotSymmetrizable if none exist.
std::vector<long long> cartan_symmetrizer(const GeneralizedCartan& a);

// Rescaled root lattice of a finite-type Cartan matrix: m_ij = d_i a_ij r.
// The admissibility condition r/2 = k/ℓ with (k, ℓ) = 1 stays metadata.
AffineMatrix construct_cartan_family(const GeneralizedCartan& a, const std::string& param = "r");

// Standard-chamber datum of a basic Lie superalgebra: the inner-product
// matrix of the simple roots and the index of the single isotropic
// (fermionic) simple root.  The two bosonic sectors sit strictly before and
// after the fermion.
struct SuperLieDatum {
    std::vector<std::vector<Rational>> gram;
    int fermion = 0;
    std::string sector1 = "r'";
    std::string sector2 = "r''";
    // strongly orthogonal fermion pairs that the root-span test cannot see
    // (their sum is itself a root), listed with the datum as for F(4)
    std::vector<std::pair<RootVector, RootVector>> extra_pairs;
};

struct SuperLieFamily {
    AffineMatrix m;                      // standard-chamber family
    BraidingDiagram diagram;             // its braiding (parametric exponents)
    std::vector<AffineExpr> constraints; // strong-orthogonality conditions, each = 0
    std::vector<RootVector> positive_roots;
    std::vector<std::pair<RootVector, RootVector>> orthogonal_pairs;
    std::vector<std::string> params;
};

// m^S = (.,.)_{g'} r' + (.,.)_{g''} r'' with m_ff = 1, plus the constraint
// m_{γδ} = 0 for every strongly orthogonal pair of fermionic roots
// (no root lies in their real span).  Positive roots are read off the Weyl
// groupoid at a generic probe value of the parameters.
SuperLieFamily construct_superlie_family(const SuperLieDatum& datum);

enum class Rank2Pattern { TRTR_TR, TRTR_CA, CATR_TR, CATR_CA };

// The four closed-form expressions for m_ij obtained by comparing a
// truncation/Cartan chamber with its reflection.  a_beta is the Cartan
// entry of the reflected simple root toward the negated one.
Rational rank2_classification_value(Rank2Pattern pattern, long long a_ij, long long a_ji,
                                    long long a_beta);

} // namespace latreal
