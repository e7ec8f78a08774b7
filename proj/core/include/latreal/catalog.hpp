#pragma once

#include "latreal/families.hpp"
#include "latreal/solver.hpp"

#include <optional>
#include <string>
#include <vector>

namespace latreal {

// Expected realisation data transcribed from the classification tables.
// Forms are stored as a parametric template plus the solved constraint
// values; substituting the solved values yields the displayed matrices.
struct ExpectedFamily {
    std::vector<std::string> params;
    std::vector<std::pair<int, AffineMatrix>> forms; // (chamber index, template matrix)
    Assignment solved;                               // e.g. r = 1/3
    std::vector<Congruence> congruences;

    AffineMatrix solved_form(std::size_t k) const;
};

struct RowEntry {
    std::string id;    // e.g. "r2/row9", "r3/row13a"
    std::string label; // table label, e.g. "9", "13'"
    int rank = 0;
    std::vector<std::string> params;       // diagram parameters, empty if concrete
    std::vector<DiagramClass> chambers;    // chamber classes as displayed
    std::vector<std::vector<int>> reached_by; // reflection sequences from chamber 0 (1-based)
    ConstraintSet validity;                // exclusions and congruences on the parameters
    bool expect_solutions = true;
    std::vector<ExpectedFamily> families;
    std::optional<std::pair<Rational, Rational>> witness;
    std::optional<Rational> charge; // central charge of family 0, chamber 0
    std::vector<std::string> notes;

    bool concrete() const { return params.empty(); }
    BraidingDiagram initial_diagram() const; // chamber 0 with validity attached
};

// Loads and validates a catalog file; schema violations carry a JSON path.
std::vector<RowEntry> load_catalog(const std::string& path);

// Both bundled tables (rank2.json, rank3.json) from a data directory.
std::vector<RowEntry> load_bundled_catalog(const std::string& data_dir);

// Resolves the bundled data directory: LATREAL_DATA_DIR, then the source
// tree location compiled in.
std::string default_data_dir();

const RowEntry* find_row(const std::vector<RowEntry>& rows, const std::string& id);

// Concrete diagrams of a row at a parameter assignment; validates the
// exclusions and cross-checks recomputed Cartan matrices against the
// stored ones.
std::vector<BraidingDiagram> instantiate(const RowEntry& row, const Assignment& assignment);

// Runs solve_realisation with the row's chamber data (parametric rows) or
// in concrete mode.
RealisationReport solve_row(const RowEntry& row, const SolveOptions& options = {});

// Checks a report against the row's expected families/verdict,
// up to affine reparametrization and node permutations.
bool matches_expected(const RowEntry& row, const RealisationReport& report,
                      std::string* why = nullptr);

// Named generators for the infinite families.
std::vector<std::string> generator_names();
bool is_cartan_generator(const std::string& name);
GeneralizedCartan cartan_generator(const std::string& name);   // e.g. "A3", "G2"
SuperLieDatum superlie_generator(const std::string& name);     // e.g. "A(1,1)", "F(4)"

} // namespace latreal
