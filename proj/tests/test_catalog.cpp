#include "doctest.h"

#include "latreal/catalog.hpp"
#include "latreal/charge.hpp"
#include "latreal/errors.hpp"

#include <fstream>
#include <numeric>
#include <set>

using namespace latreal;

namespace {

const std::vector<RowEntry>& catalog() {
    static std::vector<RowEntry> rows = load_bundled_catalog(default_data_dir());
    return rows;
}

// admissible sample values per free parameter of a fixture family
std::vector<Assignment> sample_points(const RowEntry& row, const ExpectedFamily& fam) {
    std::vector<std::string> frees;
    {
        AffineMatrix m0 = fam.solved_form(0);
        for (const auto& r : m0)
            for (const auto& e : r)
                for (const auto& p : e.params())
                    if (std::find(frees.begin(), frees.end(), p) == frees.end())
                        frees.push_back(p);
    }
    std::vector<Assignment> points{Assignment{}};
    for (const auto& p : frees) {
        std::vector<Assignment> next;
        for (Rational v : {Rational(1, 5), Rational(3, 7), Rational(-4, 11)}) {
            for (Assignment a : points) {
                a[p] = v;
                next.push_back(a);
            }
        }
        points = next;
    }
    // filter by the family congruences and the row validity where they bind
    std::vector<Assignment> ok;
    for (const auto& a : points) {
        bool good = true;
        for (const auto& c : fam.congruences)
            if (!c.satisfied_by(a)) good = false;
        if (good) ok.push_back(a);
    }
    return ok.empty() ? points : ok;
}

} // namespace

TEST_CASE("bundled catalog loads with the expected row counts") {
    const auto& rows = catalog();
    int r2 = 0, r3 = 0;
    std::set<std::string> numbers2, numbers3;
    for (const auto& r : rows) {
        if (r.id.rfind("r2/", 0) == 0) {
            ++r2;
            std::string digits;
            for (char c : r.label)
                if (isdigit(static_cast<unsigned char>(c)))
                    digits += c;
                else
                    break;
            numbers2.insert(digits);
        }
        if (r.id.rfind("r3/", 0) == 0) ++r3;
    }
    CHECK(r2 == 20);            // entries, with primed sub-rows
    CHECK(numbers2.size() == 17); // primary rows 1..17
    CHECK(r3 == 19);
    CHECK(find_row(rows, "r2/row9") != nullptr);
    CHECK(find_row(rows, "r3/row13a") != nullptr);
    CHECK(find_row(rows, "nope") == nullptr);
}

TEST_CASE("schema violations are rejected with precise paths") {
    // non-symmetric expected matrix
    std::string bad = R"({"rows":[{"id":"x","rank":2,
      "chambers":[{"diagram":"rank=2; q[1]=1; q[2]=1; q[1,2]=1"}],
      "expected":{"verdict":"solutions","families":[
        {"forms":[{"chamber":0,"m":[["1","0"],["1","1"]]}]}]}}]})";
    std::ofstream("/tmp/latreal_bad.json") << bad;
    try {
        load_catalog("/tmp/latreal_bad.json");
        FAIL("expected SchemaError");
    } catch (const SchemaError& e) {
        CHECK(std::string(e.what()).find("$.rows[0]") != std::string::npos);
        CHECK(std::string(e.what()).find("not symmetric") != std::string::npos);
    }
    // empty file -> empty list
    std::ofstream("/tmp/latreal_empty.json") << R"({"rows":[]})";
    CHECK(load_catalog("/tmp/latreal_empty.json").empty());
    CHECK_THROWS_AS(load_catalog("/tmp/does_not_exist.json"), IoError);
}

TEST_CASE("instantiate validates exclusions and cross-checks Cartan matrices") {
    const auto& rows = catalog();
    const RowEntry* row11 = find_row(rows, "r2/row11");
    REQUIRE(row11 != nullptr);
    auto diagrams = instantiate(*row11, {{"r", Rational(1, 5)}});
    REQUIRE(diagrams.size() == 1);
    CHECK(cartan_matrix(diagrams[0]) == GeneralizedCartan({{2, -3}, {-1, 2}}));
    // row 5 excludes q in R4, i.e. r = 1/2
    const RowEntry* row5 = find_row(rows, "r2/row5");
    REQUIRE(row5 != nullptr);
    CHECK_THROWS_AS(instantiate(*row5, {{"r", Rational(1, 2)}}), ValidityViolated);
    // concrete rows need no assignment
    const RowEntry* row9 = find_row(rows, "r2/row9");
    CHECK(instantiate(*row9, {}).size() == 3);
}

TEST_CASE("every stored chamber is reachable from chamber I") {
    for (const auto& row : catalog()) {
        // instantiate parameters at an admissible generic point
        Assignment a;
        for (const auto& p : row.params) a[p] = Rational(2, 23);
        if (row.id == "r3/row9") {
            a["r'"] = Rational(2, 23);
            a["r''"] = Rational(4, 23);
            a["r'''"] = Rational(2) - a["r'"] - a["r''"];
        }
        std::vector<BraidingDiagram> stored;
        for (const auto& c : row.chambers) stored.push_back(c.diagram.instantiated(a));
        GroupoidGraph g;
        try {
            g = enumerate_groupoid(stored[0]);
        } catch (const BudgetExceeded&) {
            FAIL("row ", row.id, " closure exceeded the budget");
            continue;
        }
        for (std::size_t c = 0; c < stored.size(); ++c) {
            // stored reflection sequence, when given, must land on the diagram
            if (!row.reached_by[c].empty()) {
                Chamber current = initial_chamber(stored[0]);
                for (int k : row.reached_by[c]) current = reflect(current, k - 1);
                CHECK(current.diagram == stored[c]);
            }
            bool found = false;
            for (const auto& chamber : g.chambers) {
                for (int perm_i = 0; perm_i < 1 && !found; ++perm_i) {
                    // compare up to node permutation
                    std::vector<int> perm(row.rank);
                    std::iota(perm.begin(), perm.end(), 0);
                    do {
                        if (chamber.diagram.permuted(perm) == stored[c]) {
                            found = true;
                            break;
                        }
                    } while (std::next_permutation(perm.begin(), perm.end()));
                }
                if (found) break;
            }
            CHECK_MESSAGE(found, row.id, " chamber ", c, " not reachable");
        }
    }
}

TEST_CASE("fixture families verify under the realisation checker") {
    for (const auto& row : catalog()) {
        for (std::size_t fi = 0; fi < row.families.size(); ++fi) {
            const ExpectedFamily& fam = row.families[fi];
            AffineMatrix m0 = fam.solved_form(0);
            for (const auto& point : sample_points(row, fam)) {
                RationalMatrix m(row.rank, std::vector<Rational>(row.rank));
                bool bound = true;
                try {
                    for (int i = 0; i < row.rank; ++i)
                        for (int j = 0; j < row.rank; ++j) m[i][j] = m0[i][j].evaluate(point);
                } catch (const UnboundParameter&) {
                    bound = false;
                }
                if (!bound) continue;
                // braiding exponents come from the family itself
                std::vector<AffineExpr> diag(row.rank);
                std::vector<std::vector<AffineExpr>> edges(row.rank,
                                                           std::vector<AffineExpr>(row.rank));
                for (int i = 0; i < row.rank; ++i) {
                    diag[i] = AffineExpr(reduce_mod2(m[i][i]));
                    for (int j = i + 1; j < row.rank; ++j)
                        edges[i][j] = edges[j][i] = AffineExpr(reduce_mod2(2 * m[i][j]));
                }
                BraidingDiagram q(row.rank, diag, edges);
                std::string why;
                bool ok = verify_concrete_realisation(m, q, &why);
                CHECK_MESSAGE(ok, row.id, " family ", fi, ": ", why);
            }
        }
    }
}

TEST_CASE("super-Lie generators produce the advertised constraints") {
    struct Case {
        const char* name;
        const char* constraint; // nullptr = none
    };
    for (const Case& c : std::initializer_list<Case>{{"A(1,0)", nullptr},
                                                     {"A(2,0)", nullptr},
                                                     {"A(1,1)", "r' + r'' - 1"},
                                                     {"A(2,1)", "r' + r'' - 1"},
                                                     {"B(1,1)", nullptr},
                                                     {"B(2,1)", nullptr},
                                                     {"B(1,2)", "r' + r'' - 1"},
                                                     {"B(2,2)", "r' + r'' - 1"},
                                                     {"C(3)", nullptr},
                                                     {"C(4)", nullptr},
                                                     {"G(3)", nullptr},
                                                     {"F(4)", "r - 1/3"}}) {
        SuperLieFamily fam = construct_superlie_family(superlie_generator(c.name));
        if (c.constraint == nullptr) {
            CHECK_MESSAGE(fam.constraints.empty(), c.name, " expected no constraint");
        } else {
            REQUIRE_MESSAGE(fam.constraints.size() >= 1, c.name, " expected a constraint");
            AffineExpr want = *parse_affine(c.constraint);
            // normalize sign
            bool hit = false;
            for (auto e : fam.constraints) {
                if (e == want || e == -want) hit = true;
                if (!e.coeffs().empty()) {
                    Rational lead = e.coeffs().begin()->second;
                    e = e * (Rational(1) / lead);
                    if (e == want || e == -want) hit = true;
                }
            }
            CHECK_MESSAGE(hit, c.name, " constraint mismatch");
            CHECK(fam.constraints.size() == 1);
        }
    }
}

TEST_CASE("Cartan generators are symmetrizable with the expected families") {
    CHECK(matrix_equal(construct_cartan_family(cartan_generator("A2")),
                       construct_cartan_family(GeneralizedCartan({{2, -1}, {-1, 2}}))));
    auto g2 = construct_cartan_family(cartan_generator("G2"));
    CHECK(g2[0][0] == *parse_affine("2r"));
    CHECK(g2[0][1] == *parse_affine("-3r"));
    CHECK(g2[1][1] == *parse_affine("6r"));
    auto b3 = cartan_generator("B3");
    CHECK(b3.at(1, 2) == -2);
    CHECK(b3.at(2, 1) == -1);
}
