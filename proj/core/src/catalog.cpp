#include "latreal/catalog.hpp"

#include "latreal/errors.hpp"
#include "latreal/json_io.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <numeric>

namespace latreal {

AffineMatrix ExpectedFamily::solved_form(std::size_t k) const {
    AffineMatrix m = forms.at(k).second;
    for (auto& row : m)
        for (auto& e : row) e = e.partial_evaluate(solved);
    return m;
}

BraidingDiagram RowEntry::initial_diagram() const {
    BraidingDiagram d = chambers.at(0).diagram;
    d.validity() = validity;
    return d;
}

namespace {

RootClass root_class_from(const std::string& s, const std::string& path) {
    if (s == "cartan") return RootClass::CartanOnly;
    if (s == "truncation") return RootClass::TruncationOnly;
    if (s == "both") return RootClass::Both;
    throw SchemaError(path + ": unknown root class '" + s + "'");
}

GeneralizedCartan cartan_from_json(const Json& j, int rank, const std::string& path) {
    if (!j.is_array() || static_cast<int>(j.size()) != rank)
        throw SchemaError(path + ": cartan must be a " + std::to_string(rank) + "-row matrix");
    std::vector<std::vector<long long>> rows;
    for (const auto& row : j) {
        if (!row.is_array() || static_cast<int>(row.size()) != rank)
            throw SchemaError(path + ": cartan row has wrong length");
        rows.push_back(row.get<std::vector<long long>>());
    }
    try {
        return GeneralizedCartan(rows);
    } catch (const Error& e) {
        throw SchemaError(path + ": " + e.what());
    }
}

AffineMatrix matrix_from_json(const Json& j, int rank, const std::string& path) {
    if (!j.is_array() || static_cast<int>(j.size()) != rank)
        throw SchemaError(path + ": matrix must have " + std::to_string(rank) + " rows");
    AffineMatrix m(rank, std::vector<AffineExpr>(rank));
    for (int i = 0; i < rank; ++i) {
        if (!j[i].is_array() || static_cast<int>(j[i].size()) != rank)
            throw SchemaError(path + ": matrix row " + std::to_string(i) + " has wrong length");
        for (int k = 0; k < rank; ++k)
            m[i][k] = affine_from_json(j[i][k], path + "[" + std::to_string(i) + "][" +
                                                    std::to_string(k) + "]");
    }
    for (int i = 0; i < rank; ++i)
        for (int k = 0; k < rank; ++k)
            if (!(m[i][k] == m[k][i])) throw SchemaError(path + ": matrix is not symmetric");
    return m;
}

RowEntry row_from_json(const Json& j, const std::string& path) {
    RowEntry row;
    auto need = [&](const char* key) -> const Json& {
        if (!j.contains(key)) throw SchemaError(path + ": missing key '" + std::string(key) + "'");
        return j.at(key);
    };
    row.id = need("id").get<std::string>();
    row.label = j.value("label", row.id);
    row.rank = need("rank").get<int>();
    if (row.rank < 1 || row.rank > 8) throw SchemaError(path + ".rank: out of range");
    if (j.contains("params")) row.params = j.at("params").get<std::vector<std::string>>();

    if (j.contains("validity")) {
        const Json& v = j.at("validity");
        for (std::size_t k = 0; k < v.value("exclusions", Json::array()).size(); ++k) {
            const Json& ex = v.at("exclusions")[k];
            std::string p = path + ".validity.exclusions[" + std::to_string(k) + "]";
            Exclusion e;
            e.expr = affine_from_json(ex.at("expr"), p + ".expr");
            e.value = rational_from_json(ex.value("value", Json("0")), p + ".value");
            e.modulus = rational_from_json(ex.value("mod", Json("0")), p + ".mod");
            row.validity.add_exclusion(std::move(e));
        }
        for (std::size_t k = 0; k < v.value("congruences", Json::array()).size(); ++k) {
            const Json& cg = v.at("congruences")[k];
            std::string p = path + ".validity.congruences[" + std::to_string(k) + "]";
            Congruence c;
            c.expr = affine_from_json(cg.at("expr"), p + ".expr");
            c.modulus = rational_from_json(cg.value("mod", Json("2")), p + ".mod");
            row.validity.add_congruence(std::move(c));
        }
    }

    const Json& chambers = need("chambers");
    if (!chambers.is_array() || chambers.empty())
        throw SchemaError(path + ".chambers: expected a nonempty array");
    for (std::size_t c = 0; c < chambers.size(); ++c) {
        std::string p = path + ".chambers[" + std::to_string(c) + "]";
        const Json& jc = chambers[c];
        DiagramClass klass;
        try {
            klass.diagram = parse_diagram(jc.at("diagram").get<std::string>());
        } catch (const Error& e) {
            throw SchemaError(p + ".diagram: " + e.what());
        }
        if (klass.diagram.rank() != row.rank) throw SchemaError(p + ".diagram: rank mismatch");
        for (const auto& name : klass.diagram.params()) {
            if (std::find(row.params.begin(), row.params.end(), name) == row.params.end())
                throw SchemaError(p + ".diagram: undeclared parameter '" + name + "'");
        }
        if (jc.contains("cartan")) {
            klass.cartan = cartan_from_json(jc.at("cartan"), row.rank, p + ".cartan");
        } else if (klass.diagram.concrete()) {
            klass.cartan = cartan_matrix(klass.diagram);
        } else {
            throw SchemaError(p + ": parametric chamber needs a stored cartan matrix");
        }
        if (jc.contains("classes")) {
            const Json& cls = jc.at("classes");
            if (static_cast<int>(cls.size()) != row.rank)
                throw SchemaError(p + ".classes: wrong length");
            for (const auto& s : cls)
                klass.classes.push_back(root_class_from(s.get<std::string>(), p + ".classes"));
        } else if (klass.diagram.concrete()) {
            klass.classes = classify_all(klass.diagram, klass.cartan);
        } else {
            throw SchemaError(p + ": parametric chamber needs stored root classes");
        }
        klass.path = jc.value("reached_by", std::vector<int>{});
        row.reached_by.push_back(klass.path);
        row.chambers.push_back(std::move(klass));
    }

    const Json& expected = need("expected");
    std::string verdict = expected.at("verdict").get<std::string>();
    if (verdict == "solutions")
        row.expect_solutions = true;
    else if (verdict == "no_solution")
        row.expect_solutions = false;
    else
        throw SchemaError(path + ".expected.verdict: unknown verdict '" + verdict + "'");
    if (expected.contains("families")) {
        const Json& fams = expected.at("families");
        for (std::size_t k = 0; k < fams.size(); ++k) {
            std::string p = path + ".expected.families[" + std::to_string(k) + "]";
            const Json& jf = fams[k];
            ExpectedFamily f;
            if (jf.contains("params")) f.params = jf.at("params").get<std::vector<std::string>>();
            const Json& forms = jf.at("forms");
            for (std::size_t t = 0; t < forms.size(); ++t) {
                std::string fp = p + ".forms[" + std::to_string(t) + "]";
                int chamber = forms[t].value("chamber", 0);
                if (chamber < 0 || chamber >= static_cast<int>(row.chambers.size()))
                    throw SchemaError(fp + ".chamber: index out of range");
                f.forms.emplace_back(chamber,
                                     matrix_from_json(forms[t].at("m"), row.rank, fp + ".m"));
            }
            if (jf.contains("solved"))
                for (const auto& [name, value] : jf.at("solved").items())
                    f.solved[name] = rational_from_json(value, p + ".solved." + name);
            if (jf.contains("congruences")) {
                for (const auto& cg : jf.at("congruences")) {
                    Congruence c;
                    c.expr = affine_from_json(cg.at("expr"), p + ".congruences.expr");
                    c.modulus = rational_from_json(cg.value("mod", Json("2")), p + ".congruences.mod");
                    f.congruences.push_back(std::move(c));
                }
            }
            row.families.push_back(std::move(f));
        }
    }
    if (row.expect_solutions && row.families.empty())
        throw SchemaError(path + ".expected: verdict 'solutions' needs at least one family");
    if (expected.contains("witness")) {
        const Json& w = expected.at("witness");
        if (!w.is_array() || w.size() != 2)
            throw SchemaError(path + ".expected.witness: expected a pair");
        row.witness = {rational_from_json(w[0], path + ".witness[0]"),
                       rational_from_json(w[1], path + ".witness[1]")};
    }
    if (expected.contains("charge") && !expected.at("charge").is_null())
        row.charge = rational_from_json(expected.at("charge"), path + ".expected.charge");
    if (j.contains("notes")) row.notes = j.at("notes").get<std::vector<std::string>>();
    return row;
}

} // namespace

std::vector<RowEntry> load_catalog(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open catalog file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw SchemaError(path + ": invalid JSON: " + e.what());
    }
    if (!j.contains("rows") || !j.at("rows").is_array())
        throw SchemaError(path + ": missing 'rows' array");
    std::vector<RowEntry> rows;
    for (std::size_t k = 0; k < j.at("rows").size(); ++k)
        rows.push_back(row_from_json(j.at("rows")[k], "$.rows[" + std::to_string(k) + "]"));
    return rows;
}

std::vector<RowEntry> load_bundled_catalog(const std::string& data_dir) {
    std::vector<RowEntry> rows = load_catalog(data_dir + "/rank2.json");
    std::vector<RowEntry> r3 = load_catalog(data_dir + "/rank3.json");
    rows.insert(rows.end(), std::make_move_iterator(r3.begin()), std::make_move_iterator(r3.end()));
    return rows;
}

std::string default_data_dir() {
    if (const char* env = std::getenv("LATREAL_DATA_DIR")) return env;
#ifdef LATREAL_SOURCE_DATA_DIR
    return LATREAL_SOURCE_DATA_DIR;
#else
    return "data";
#endif
}

const RowEntry* find_row(const std::vector<RowEntry>& rows, const std::string& id) {
    for (const auto& r : rows)
        if (r.id == id) return &r;
    return nullptr;
}

std::vector<BraidingDiagram> instantiate(const RowEntry& row, const Assignment& assignment) {
    for (const auto& name : row.params)
        if (!assignment.count(name))
            throw UsageError("missing parameter '" + name + "' for row " + row.id);
    for (const auto& ex : row.validity.exclusions())
        if (ex.violated_by(assignment))
            throw ValidityViolated("row " + row.id + " excludes " + ex.str());
    for (const auto& cg : row.validity.congruences())
        if (!cg.satisfied_by(assignment))
            throw ValidityViolated("row " + row.id + " requires " + cg.str());
    std::vector<BraidingDiagram> out;
    for (std::size_t c = 0; c < row.chambers.size(); ++c) {
        BraidingDiagram d = row.chambers[c].diagram.instantiated(assignment);
        GeneralizedCartan a = cartan_matrix(d);
        if (!(a == row.chambers[c].cartan))
            throw CartanMismatch("row " + row.id + " chamber " + std::to_string(c) +
                                 ": recomputed Cartan matrix differs from the stored one");
        out.push_back(std::move(d));
    }
    return out;
}

RealisationReport solve_row(const RowEntry& row, const SolveOptions& options) {
    return solve_realisation(row.initial_diagram(), row.chambers, options);
}

namespace {

std::vector<std::vector<int>> all_permutations(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

} // namespace

bool matches_expected(const RowEntry& row, const RealisationReport& report, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = row.id + ": " + msg;
        return false;
    };
    if (report.has_solutions != row.expect_solutions)
        return fail(std::string("verdict mismatch: got ") +
                    (report.has_solutions ? "solutions" : "no_solution"));
    if (!row.expect_solutions) {
        if (row.witness) {
            if (!report.witness) return fail("missing conflict witness");
            Rational a = report.witness->value_a, b = report.witness->value_b;
            Rational wa = row.witness->first, wb = row.witness->second;
            if (!((a == wa && b == wb) || (a == wb && b == wa)))
                return fail("witness pair {" + to_string(a) + ", " + to_string(b) +
                            "} differs from expected {" + to_string(wa) + ", " + to_string(wb) +
                            "}");
        }
        return true;
    }
    if (report.families.size() != row.families.size())
        return fail("expected " + std::to_string(row.families.size()) + " families, got " +
                    std::to_string(report.families.size()));
    auto perms = all_permutations(row.rank);
    // each expected family must match a distinct solver family
    std::vector<bool> used(report.families.size(), false);
    for (std::size_t fi = 0; fi < row.families.size(); ++fi) {
        const ExpectedFamily& want = row.families[fi];
        bool matched = false;
        for (std::size_t gi = 0; gi < report.families.size() && !matched; ++gi) {
            if (used[gi]) continue;
            const Family& got = report.families[gi];
            // free-parameter counts must agree after solving constraints
            std::size_t want_params = 0;
            {
                std::vector<std::string> frees;
                AffineMatrix m0 = want.solved_form(0);
                for (const auto& r : m0)
                    for (const auto& e : r)
                        for (const auto& p : e.params())
                            if (std::find(frees.begin(), frees.end(), p) == frees.end())
                                frees.push_back(p);
                want_params = frees.size();
            }
            if (want_params != got.free_params.size()) continue;
            bool all_forms = true;
            for (std::size_t t = 0; t < want.forms.size() && all_forms; ++t) {
                AffineMatrix target = want.solved_form(t);
                bool found = false;
                for (const auto& form : got.forms) {
                    for (const auto& perm : perms) {
                        if (affine_equivalent(permuted(form.m, perm), target)) {
                            found = true;
                            break;
                        }
                    }
                    if (found) break;
                }
                if (!found) all_forms = false;
            }
            if (all_forms) {
                matched = true;
                used[gi] = true;
            }
        }
        if (!matched) return fail("expected family " + std::to_string(fi) + " not found");
    }
    return true;
}

bool is_cartan_generator(const std::string& name) {
    return !name.empty() && name.find('(') == std::string::npos;
}

std::vector<std::string> generator_names() {
    return {"A2",     "A3",     "B2",     "B3",     "C3",     "G2",     "A(1,0)", "A(2,0)",
            "A(1,1)", "A(2,1)", "B(1,1)", "B(2,1)", "B(1,2)", "B(2,2)", "C(3)",   "C(4)",
            "D(2,1)", "D(2,2)", "G(3)",   "F(4)"};
}

GeneralizedCartan cartan_generator(const std::string& name) {
    if (name.size() == 2 && name[1] >= '2' && name[1] <= '9') {
        int n = name[1] - '0';
        char type = name[0];
        std::vector<std::vector<long long>> a(n, std::vector<long long>(n, 0));
        for (int i = 0; i < n; ++i) a[i][i] = 2;
        for (int i = 0; i + 1 < n; ++i) a[i][i + 1] = a[i + 1][i] = -1;
        if (type == 'A') return GeneralizedCartan(a);
        if (type == 'B' && n >= 2) {
            a[n - 2][n - 1] = -2; // short last root
            return GeneralizedCartan(a);
        }
        if (type == 'C' && n >= 2) {
            a[n - 1][n - 2] = -2;
            return GeneralizedCartan(a);
        }
        if (type == 'G' && n == 2) {
            a[0][1] = -3;
            return GeneralizedCartan(a);
        }
        if (type == 'D' && n >= 3) {
            a[n - 2][n - 1] = a[n - 1][n - 2] = 0;
            a[n - 3][n - 1] = a[n - 1][n - 3] = -1;
            return GeneralizedCartan(a);
        }
    }
    throw UsageError("unknown Cartan generator '" + name + "'");
}

SuperLieDatum superlie_generator(const std::string& name) {
    auto parse_two = [&](std::size_t open) {
        std::size_t comma = name.find(',', open);
        std::size_t close = name.find(')', open);
        if (comma == std::string::npos || close == std::string::npos)
            throw UsageError("bad generator name '" + name + "'");
        int m = std::stoi(name.substr(open + 1, comma - open - 1));
        int n = std::stoi(name.substr(comma + 1, close - comma - 1));
        return std::pair<int, int>{m, n};
    };
    SuperLieDatum d;
    auto grid = [&](int rank) {
        d.gram.assign(rank, std::vector<Rational>(rank, 0));
    };
    if (name.rfind("A(", 0) == 0) {
        auto [m, n] = parse_two(1);
        int rank = m + n + 1;
        grid(rank);
        for (int i = 0; i < rank; ++i) d.gram[i][i] = 2;
        for (int i = 0; i + 1 < rank; ++i) d.gram[i][i + 1] = d.gram[i + 1][i] = -1;
        d.fermion = m;
        d.gram[m][m] = 0;
        return d;
    }
    if (name.rfind("B(", 0) == 0) {
        // halved normalization (short last root of norm 1), so the
        // strong-orthogonality condition comes out as r' + r'' = 1
        auto [m, n] = parse_two(1);
        int rank = m + n;
        grid(rank);
        for (int i = 0; i < rank; ++i) d.gram[i][i] = 2;
        for (int i = 0; i + 1 < rank; ++i) d.gram[i][i + 1] = d.gram[i + 1][i] = -1;
        d.gram[rank - 1][rank - 1] = 1;
        d.fermion = n - 1;
        d.gram[n - 1][n - 1] = 0;
        return d;
    }
    if (name.rfind("C(", 0) == 0) {
        int n = std::stoi(name.substr(2, name.find(')') - 2));
        grid(n);
        for (int i = 0; i < n; ++i) d.gram[i][i] = 2;
        for (int i = 0; i + 1 < n; ++i) d.gram[i][i + 1] = d.gram[i + 1][i] = -1;
        d.gram[n - 1][n - 1] = 4;
        d.gram[n - 2][n - 1] = d.gram[n - 1][n - 2] = -2;
        d.fermion = 0;
        d.gram[0][0] = 0;
        return d;
    }
    if (name.rfind("D(", 0) == 0) {
        auto [m, n] = parse_two(1);
        int rank = m + n;
        if (m < 2) throw UsageError("D(m,n) needs m >= 2");
        grid(rank);
        for (int i = 0; i < rank; ++i) d.gram[i][i] = 2;
        for (int i = 0; i + 1 < rank - 1; ++i) d.gram[i][i + 1] = d.gram[i + 1][i] = -1;
        d.gram[rank - 3][rank - 1] = d.gram[rank - 1][rank - 3] = -1;
        d.fermion = n - 1;
        d.gram[n - 1][n - 1] = 0;
        return d;
    }
    if (name == "G(3)") {
        d.gram = {{0, -1, 0}, {-1, 2, -3}, {0, -3, 6}};
        d.fermion = 0;
        return d;
    }
    if (name == "F(4)") {
        d.gram = {{4, -2, 0, 0}, {-2, 4, -2, 0}, {0, -2, 2, -1}, {0, 0, -1, 0}};
        d.fermion = 3;
        // the strongly orthogonal fermion pairs; their sums equal the
        // doubled-fermion boson, so they are listed with the datum
        d.extra_pairs = {{{0, 0, 1, 1}, {1, 2, 2, 1}}, {{0, 1, 1, 1}, {1, 1, 2, 1}}};
        return d;
    }
    throw UsageError("unknown super-Lie generator '" + name + "'");
}

} // namespace latreal
