#pragma once

#include "latreal/mfamily.hpp"

#include <optional>

namespace latreal {

// A chamber as the catalog stores it: the displayed diagram (possibly
// parametric) with its Cartan matrix, root classes, and the reflection
// path from chamber 0 (1-based indices).
struct DiagramClass {
    BraidingDiagram diagram;
    GeneralizedCartan cartan;
    std::vector<RootClass> classes;
    std::vector<int> path;
};

struct FamilyForm {
    int chamber_class = 0;
    BraidingDiagram diagram; // representative chamber diagram
    AffineMatrix m;
};

// One orbit of realising families: all distinct transported matrix forms,
// free parameters, and the congruences tying them to the braiding exponents.
struct Family {
    std::vector<FamilyForm> forms; // forms[0] is the initial chamber's
    std::vector<std::string> free_params;
    std::vector<Congruence> congruences;
    ConstraintSet solution; // solved equalities over the seed parameters
};

struct NoSolutionWitness {
    int chamber_a = 0;
    int chamber_b = 0;
    Rational value_a;
    Rational value_b;
    std::string detail;
};

struct RealisationReport {
    bool has_solutions = false;
    std::vector<Family> families;
    std::optional<NoSolutionWitness> witness;
    std::vector<BraidingDiagram> class_diagrams; // per chamber-class id
    int chambers = 0;
    long long branches_explored = 0;
};

struct SolveOptions {
    int chamber_budget = 10000;
    long long branch_cap = 1 << 16;
};

// Realisation solver over the displayed chamber representatives: seeds a
// symbolic Gram matrix in chamber 0, transports it along each stored
// reflection path, and imposes the per-pair condition (7) there, branching
// where a pair admits both the Cartan and the truncation identity.  The
// exponent congruence e^{iπ m} = q is checked over the full reflection
// closure; on parametric diagrams it is carried as metadata on the
// surviving families.  This mirrors how the classification tables are
// derived: condition (7) anchors the displayed chambers, deeper chambers
// constrain only through the braiding.
RealisationReport solve_realisation(const BraidingDiagram& q,
                                    const std::vector<DiagramClass>& chambers,
                                    const SolveOptions& options = {});

// Closure-based variant for a standalone concrete diagram: every chamber of
// the groupoid closure is imposed, with condition (7) taken pairwise on
// connected pairs everywhere and on disconnected pairs at the first chamber
// of each diagram class.
RealisationReport solve_realisation(const BraidingDiagram& q, const SolveOptions& options = {});

// Checks a concrete Gram matrix against a concrete diagram: the exponent
// congruence e^{iπ m_ij} = q_ij over the whole reflection closure, and the
// pairwise condition (7) in the matrix's own chamber.
bool verify_concrete_realisation(const std::vector<std::vector<Rational>>& m,
                                 const BraidingDiagram& q, std::string* why = nullptr,
                                 int chamber_budget = 10000);

// True iff an invertible affine reparametrization over Q maps the
// parameters of `a` so that it equals `b` entrywise.
bool affine_equivalent(const AffineMatrix& a, const AffineMatrix& b);

// True iff every instance of `special` is an instance of `general`
// (an affine map of parameters sends `general` onto `special`).
bool affine_specializes(const AffineMatrix& special, const AffineMatrix& general);

} // namespace latreal
