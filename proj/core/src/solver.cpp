#include "latreal/solver.hpp"

#include "latreal/errors.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

namespace latreal {

namespace {

std::vector<std::vector<int>> permutations_of(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

// d must be ≡ 0 (mod 2) identically, allowing integer multiples of the
// validity congruences (each ≡ 0 mod 2 on admissible parameters).
bool exponent_diff_even(const AffineExpr& d, const std::vector<Congruence>& validity) {
    auto plain_even = [](const AffineExpr& e) {
        return e.is_constant() && is_integer(e.constant() / 2);
    };
    if (plain_even(d)) return true;
    if (validity.empty()) return false;
    std::vector<AffineExpr> exprs;
    for (const auto& c : validity)
        if (c.modulus == 2) exprs.push_back(c.expr);
    if (exprs.empty()) return false;
    const int kRange = 3;
    std::vector<int> lambda(exprs.size(), -kRange);
    while (true) {
        AffineExpr e = d;
        for (std::size_t k = 0; k < exprs.size(); ++k) e += exprs[k] * Rational(lambda[k]);
        if (plain_even(e)) return true;
        std::size_t k = 0;
        while (k < lambda.size() && lambda[k] == kRange) lambda[k++] = -kRange;
        if (k == lambda.size()) return false;
        ++lambda[k];
    }
}

bool diagram_matches_class_mod2(const BraidingDiagram& d, const BraidingDiagram& stored,
                                const std::vector<int>& perm,
                                const std::vector<Congruence>& validity) {
    int n = d.rank();
    for (int i = 0; i < n; ++i) {
        if (!exponent_diff_even(d.node_exponent(i) - stored.node_exponent(perm[i]), validity))
            return false;
        for (int j = i + 1; j < n; ++j)
            if (!exponent_diff_even(d.edge_exponent(i, j) - stored.edge_exponent(perm[i], perm[j]),
                                    validity))
                return false;
    }
    return true;
}

constexpr unsigned kChoiceA = 1, kChoiceB = 2;

struct SolverChamber {
    std::vector<RootVector> basis;
    BraidingDiagram diagram;
    GeneralizedCartan cartan;
    // allowed condition-(7) choices per ordered pair (i,j); bitmask of
    // kChoiceA/kChoiceB, 0 = no condition imposed on this pair
    std::vector<std::vector<unsigned>> pair_options;
    int klass = 0;
    AffineMatrix m; // transported seed matrix
};

std::vector<std::vector<unsigned>> concrete_pair_options(const BraidingDiagram& d,
                                                         const GeneralizedCartan& a) {
    int n = d.rank();
    std::vector<std::vector<unsigned>> opts(n, std::vector<unsigned>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            PairClass c = classify_pair(d, a, i, j);
            if (c.cartan) opts[i][j] |= kChoiceA;
            if (c.truncation) opts[i][j] |= kChoiceB;
            if (!opts[i][j]) throw Inconsistent("pair satisfies neither defining identity");
        }
    return opts;
}

std::vector<std::vector<unsigned>> pair_options_from_classes(const std::vector<RootClass>& classes,
                                                             const GeneralizedCartan& a) {
    int n = static_cast<int>(classes.size());
    std::vector<std::vector<unsigned>> opts(n, std::vector<unsigned>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            bool connected = a.at(i, j) != 0;
            switch (classes[i]) {
            case RootClass::CartanOnly: opts[i][j] = kChoiceA; break;
            case RootClass::TruncationOnly: opts[i][j] = connected ? kChoiceB : kChoiceA; break;
            case RootClass::Both: opts[i][j] = connected ? (kChoiceA | kChoiceB) : kChoiceA; break;
            case RootClass::Mixed:
                throw DomainError("stored chamber classes must be pairwise uniform");
            }
        }
    return opts;
}

std::string generic_chamber_key(const std::vector<RootVector>& basis,
                                const BraidingDiagram& diagram) {
    int n = static_cast<int>(basis.size());
    auto oriented = [&](const std::vector<RootVector>& b) {
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::sort(perm.begin(), perm.end(), [&](int x, int y) { return b[x] < b[y]; });
        std::ostringstream out;
        for (int i : perm) {
            for (long long x : b[i]) out << x << ",";
            out << "|";
        }
        out << diagram.permuted(perm).key();
        return out.str();
    };
    std::vector<RootVector> neg = basis;
    for (auto& col : neg)
        for (auto& x : col) x = -x;
    std::string a = oriented(basis), b = oriented(neg);
    return a < b ? a : b;
}

std::string canonical_diagram_key(const BraidingDiagram& d) {
    std::string best;
    for (const auto& perm : permutations_of(d.rank())) {
        std::string k = d.permuted(perm).key();
        if (best.empty() || k < best) best = k;
    }
    return best;
}

struct CongruenceChamber {
    AffineMatrix m;
    BraidingDiagram diagram;
    int klass = 0;
};

struct Problem {
    std::vector<SolverChamber> chambers;            // condition (7) imposed here
    std::vector<CongruenceChamber> closure;         // exponent congruence imposed here
    std::vector<BraidingDiagram> class_diagrams;
    std::vector<Congruence> validity_congruences;
    int rank = 0;
};

// Full-closure congruence chambers for a concrete diagram.
void concrete_closure(const BraidingDiagram& q, int budget, Problem& p) {
    GroupoidGraph g = enumerate_groupoid(q, budget);
    AffineMatrix seed = seed_matrix(p.rank);
    for (const auto& c : g.chambers)
        p.closure.push_back({transport(seed, c.basis), c.diagram, -1});
}

// Full-closure congruence chambers for a parametric diagram; Cartan
// matrices along the way are looked up from the stored chamber classes.
void parametric_closure(const BraidingDiagram& q, const std::vector<DiagramClass>& stored,
                        int budget, Problem& p) {
    auto perms = permutations_of(p.rank);
    auto lookup_cartan = [&](const BraidingDiagram& d) -> GeneralizedCartan {
        for (const auto& klass : stored)
            for (const auto& perm : perms)
                if (diagram_matches_class_mod2(d, klass.diagram, perm, p.validity_congruences)) {
                    std::vector<std::vector<long long>> a(p.rank, std::vector<long long>(p.rank));
                    for (int i = 0; i < p.rank; ++i)
                        for (int j = 0; j < p.rank; ++j)
                            a[i][j] = klass.cartan.at(perm[i], perm[j]);
                    return GeneralizedCartan(a);
                }
        throw CartanMismatch("reflected diagram matches no stored chamber class: " + d.key());
    };
    AffineMatrix seed = seed_matrix(p.rank);
    std::map<std::string, int> index;
    std::deque<std::pair<std::vector<RootVector>, BraidingDiagram>> queue;
    std::vector<RootVector> id_basis(p.rank, RootVector(p.rank, 0));
    for (int i = 0; i < p.rank; ++i) id_basis[i][i] = 1;
    BraidingDiagram start = q.canonical();
    index[generic_chamber_key(id_basis, start)] = 0;
    p.closure.push_back({transport(seed, id_basis), start, -1});
    queue.emplace_back(id_basis, start);
    while (!queue.empty()) {
        auto [basis, diagram] = queue.front();
        queue.pop_front();
        GeneralizedCartan cartan = lookup_cartan(diagram);
        for (int k = 0; k < p.rank; ++k) {
            std::vector<RootVector> nb;
            BraidingDiagram nd;
            reflect_basis_and_diagram(basis, diagram, cartan, k, nb, nd);
            std::string key = generic_chamber_key(nb, nd);
            if (index.count(key)) continue;
            if (static_cast<int>(index.size()) >= budget)
                throw BudgetExceeded("chamber budget exceeded in parametric closure");
            index[key] = static_cast<int>(p.closure.size());
            p.closure.push_back({transport(seed, nb), nd, -1});
            queue.emplace_back(nb, nd);
        }
    }
}

// Chambers for the stored-representative mode: replay each stored path.
Problem build_from_stored(const BraidingDiagram& q, const std::vector<DiagramClass>& stored,
                          const SolveOptions& options) {
    Problem p;
    p.rank = q.rank();
    p.validity_congruences = q.validity().congruences();
    bool concrete = q.concrete();
    for (const auto& klass : stored) p.class_diagrams.push_back(klass.diagram);

    auto perms = permutations_of(p.rank);
    auto lookup = [&](const BraidingDiagram& d) -> std::pair<const DiagramClass*, std::vector<int>> {
        for (const auto& klass : stored)
            for (const auto& perm : perms)
                if (diagram_matches_class_mod2(d, klass.diagram, perm, p.validity_congruences))
                    return {&klass, perm};
        throw CartanMismatch("diagram along a stored path matches no chamber class: " + d.key());
    };
    auto cartan_of = [&](const BraidingDiagram& d) -> GeneralizedCartan {
        if (concrete) return cartan_matrix(d);
        auto [klass, perm] = lookup(d);
        std::vector<std::vector<long long>> a(p.rank, std::vector<long long>(p.rank));
        for (int i = 0; i < p.rank; ++i)
            for (int j = 0; j < p.rank; ++j) a[i][j] = klass->cartan.at(perm[i], perm[j]);
        return GeneralizedCartan(a);
    };

    AffineMatrix seed = seed_matrix(p.rank);
    std::vector<RootVector> id_basis(p.rank, RootVector(p.rank, 0));
    for (int i = 0; i < p.rank; ++i) id_basis[i][i] = 1;
    BraidingDiagram start = q.canonical();

    for (std::size_t ci = 0; ci < stored.size(); ++ci) {
        std::vector<RootVector> basis = id_basis;
        BraidingDiagram diagram = start;
        for (int step : stored[ci].path) {
            if (step < 1 || step > p.rank)
                throw DomainError("bad reflection index in a stored chamber path");
            GeneralizedCartan cartan = cartan_of(diagram);
            std::vector<RootVector> nb;
            BraidingDiagram nd;
            reflect_basis_and_diagram(basis, diagram, cartan, step - 1, nb, nd);
            basis = std::move(nb);
            diagram = std::move(nd);
        }
        if (!diagram_matches_class_mod2(diagram, stored[ci].diagram,
                                        perms[0], p.validity_congruences))
            throw CartanMismatch("stored path " + std::to_string(ci) +
                                 " does not reach its chamber: got " + diagram.key());
        SolverChamber sc;
        sc.basis = basis;
        sc.diagram = diagram;
        sc.cartan = cartan_of(diagram);
        sc.pair_options = concrete
                              ? concrete_pair_options(diagram, sc.cartan)
                              : pair_options_from_classes(stored[ci].classes, sc.cartan);
        sc.klass = static_cast<int>(ci);
        sc.m = transport(seed, sc.basis);
        p.chambers.push_back(std::move(sc));
    }
    if (concrete)
        concrete_closure(start, options.chamber_budget, p);
    else
        parametric_closure(start, stored, options.chamber_budget, p);
    return p;
}

// Chambers for the closure mode on a standalone concrete diagram:
// condition (7) on connected pairs everywhere, on disconnected pairs at the
// first chamber of each diagram class.
Problem build_closure(const BraidingDiagram& q, const SolveOptions& options) {
    if (!q.concrete())
        throw DomainError("closure-mode solving needs a concrete diagram "
                          "(parametric diagrams need stored chamber data)");
    Problem p;
    p.rank = q.rank();
    GroupoidGraph g = enumerate_groupoid(q.canonical(), options.chamber_budget);
    AffineMatrix seed = seed_matrix(p.rank);
    std::map<std::string, int> class_ids;
    for (const auto& c : g.chambers) {
        SolverChamber sc;
        sc.basis = c.basis;
        sc.diagram = c.diagram;
        sc.cartan = c.cartan;
        std::string key = canonical_diagram_key(c.diagram);
        auto it = class_ids.find(key);
        bool class_first = it == class_ids.end();
        if (class_first) {
            sc.klass = static_cast<int>(p.class_diagrams.size());
            class_ids[key] = sc.klass;
            p.class_diagrams.push_back(c.diagram);
        } else {
            sc.klass = it->second;
        }
        sc.pair_options = concrete_pair_options(c.diagram, c.cartan);
        if (!class_first) {
            for (int i = 0; i < p.rank; ++i)
                for (int j = 0; j < p.rank; ++j)
                    if (i != j && c.cartan.at(i, j) == 0) sc.pair_options[i][j] = 0;
        }
        sc.m = transport(seed, sc.basis);
        p.closure.push_back({sc.m, sc.diagram, sc.klass});
        p.chambers.push_back(std::move(sc));
    }
    return p;
}

// ---------------------------------------------------------------------------

struct Search {
    const Problem& p;
    const SolveOptions& options;
    long long branches = 0;
    std::unordered_set<std::string> memo;
    std::vector<Family> raw_families;
    std::optional<NoSolutionWitness> witness;

    explicit Search(const Problem& problem, const SolveOptions& opts)
        : p(problem), options(opts) {}

    void note_conflict(const ConstraintSet& s) {
        if (witness) return;
        if (!s.conflict()) return;
        const auto& c = *s.conflict();
        NoSolutionWitness w;
        w.chamber_a = c.first_tag.chamber >= 0 ? p.chambers[c.first_tag.chamber].klass : 0;
        w.chamber_b = c.second_tag.chamber >= 0 ? p.chambers[c.second_tag.chamber].klass : 0;
        w.value_a = c.first_value;
        w.value_b = c.second_value;
        w.detail =
            c.first_tag.description + " vs " + c.second_tag.description + " on " + c.parameter;
        witness = std::move(w);
    }

    int pairs_per_chamber() const { return p.rank * (p.rank - 1); }

    void run() {
        ConstraintSet s;
        descend(0, 0, s);
    }

    void descend(std::size_t chamber, int pair, ConstraintSet s) {
        if (++branches > options.branch_cap)
            throw BudgetExceeded("choice-branch cap exceeded in solve_realisation");
        while (chamber < p.chambers.size()) {
            if (pair == pairs_per_chamber()) {
                ++chamber;
                pair = 0;
                continue;
            }
            int i = pair / (p.rank - 1);
            int j = pair % (p.rank - 1);
            if (j >= i) ++j;
            const SolverChamber& c = p.chambers[chamber];
            unsigned options_ij = c.pair_options[i][j];
            if (options_ij == 0) {
                ++pair;
                continue;
            }
            if (options_ij == (kChoiceA | kChoiceB)) {
                std::string key =
                    std::to_string(chamber) + ":" + std::to_string(pair) + "|" + s.canonical_key();
                if (!memo.insert(key).second) return;
                for (Cond7Choice choice : {Cond7Choice::A, Cond7Choice::B}) {
                    ConstraintSet branch_s = s;
                    if (apply_choice(branch_s, chamber, i, j, choice))
                        descend(chamber, pair + 1, branch_s);
                    else
                        note_conflict(branch_s);
                }
                return;
            }
            Cond7Choice choice = options_ij == kChoiceA ? Cond7Choice::A : Cond7Choice::B;
            if (!apply_choice(s, chamber, i, j, choice)) {
                note_conflict(s);
                return;
            }
            ++pair;
        }
        leaf(s);
    }

    bool apply_choice(ConstraintSet& s, std::size_t chamber, int i, int j, Cond7Choice choice) {
        const SolverChamber& c = p.chambers[chamber];
        EquationTag tag{static_cast<int>(chamber),
                        "chamber " + std::to_string(c.klass + 1) + " pair (" +
                            std::to_string(i + 1) + "," + std::to_string(j + 1) +
                            (choice == Cond7Choice::A ? ") m-Cartan" : ") m-truncation")};
        AffineExpr residual =
            choice == Cond7Choice::A
                ? c.m[i][j] * 2 - c.m[i][i] * Rational(c.cartan.at(i, j))
                : c.m[i][i] * Rational(1 - c.cartan.at(i, j)) - AffineExpr(Rational(2));
        return s.add_equality(residual, tag);
    }

    void leaf(const ConstraintSet& s) {
        // exponent congruence layer over the closure:
        // m_ii ≡ e_ii and 2 m_ij ≡ e_ij (mod 2)
        std::vector<Congruence> congruences;
        auto push_congruence = [&](const AffineExpr& d) {
            for (const auto& c : congruences)
                if (c.expr == d || c.expr == -d) return;
            congruences.push_back(Congruence{d, 2});
        };
        for (const auto& c : p.closure) {
            for (int i = 0; i < p.rank; ++i) {
                for (int j = i; j < p.rank; ++j) {
                    AffineExpr mpart = s.substitute(c.m[i][j]);
                    if (i != j) mpart = mpart * 2;
                    AffineExpr target =
                        i == j ? c.diagram.node_exponent(i) : c.diagram.edge_exponent(i, j);
                    AffineExpr d = mpart - target;
                    if (d.is_constant()) {
                        if (!exponent_diff_even(d, p.validity_congruences)) {
                            if (!witness) {
                                NoSolutionWitness w;
                                w.chamber_a = w.chamber_b = std::max(c.klass, 0);
                                w.value_a = mpart.is_constant() ? mpart.constant() : Rational(0);
                                w.value_b = target.is_constant() ? target.constant() : Rational(0);
                                w.detail = "exponent congruence fails at entry (" +
                                           std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                           ")";
                                witness = std::move(w);
                            }
                            return; // congruence kills this branch
                        }
                    } else {
                        push_congruence(d);
                    }
                }
            }
        }
        Family f;
        f.solution = s;
        f.congruences = std::move(congruences);
        auto add_form = [&](int klass, const BraidingDiagram& diagram, const AffineMatrix& mat) {
            FamilyForm form;
            form.chamber_class = klass;
            form.diagram = diagram;
            form.m = substitute(mat, s);
            for (const auto& existing : f.forms) {
                for (const auto& perm : permutations_of(p.rank)) {
                    if (form.diagram.permuted(perm).equivalent_mod2(existing.diagram) &&
                        matrix_equal(permuted(form.m, perm), existing.m))
                        return;
                }
            }
            f.forms.push_back(std::move(form));
        };
        for (const auto& c : p.chambers) add_form(c.klass, c.diagram, c.m);
        // transported forms over the rest of the closure, for orbit
        // identification and reporting
        for (const auto& c : p.closure) add_form(c.klass, c.diagram, c.m);
        std::set<std::string, ParamLess> frees;
        for (const auto& form : f.forms)
            for (const auto& row : form.m)
                for (const auto& e : row)
                    for (const auto& name : e.params()) frees.insert(name);
        f.free_params.assign(frees.begin(), frees.end());
        raw_families.push_back(std::move(f));
    }
};

// renames leftover seed parameters (m11, ...) to presentation names
void rename_seed_params(Family& f, const std::vector<std::string>& reserved) {
    static const std::vector<std::string> pool = {"r", "r'", "r''", "r'''"};
    std::map<std::string, std::string> rename;
    std::vector<std::string> new_frees;
    std::size_t next = 0;
    int extra = 0;
    for (const auto& name : f.free_params) {
        if (name.rfind("m", 0) != 0) {
            new_frees.push_back(name);
            continue;
        }
        std::string fresh;
        while (true) {
            fresh = next < pool.size() ? pool[next++] : ("s" + std::to_string(++extra));
            if (std::find(reserved.begin(), reserved.end(), fresh) == reserved.end()) break;
        }
        rename[name] = fresh;
        new_frees.push_back(fresh);
    }
    if (rename.empty()) return;
    auto apply = [&](AffineExpr& e) {
        for (const auto& [from, to] : rename) e = e.substituted(from, AffineExpr::param(to));
    };
    for (auto& form : f.forms)
        for (auto& row : form.m)
            for (auto& e : row) apply(e);
    for (auto& c : f.congruences) apply(c.expr);
    f.free_params = std::move(new_frees);
}

RealisationReport run_search(const Problem& p, const SolveOptions& options) {
    Search search(p, options);
    search.run();

    RealisationReport report;
    report.class_diagrams = p.class_diagrams;
    report.chambers = static_cast<int>(p.chambers.size());
    report.branches_explored = search.branches;

    // keep maximal families only, then dedup orbits; forms are compared up
    // to node permutations that preserve the chamber diagram
    auto perms = permutations_of(p.rank);
    auto compatible_images = [&](const FamilyForm& g, const BraidingDiagram& target) {
        std::vector<AffineMatrix> out;
        for (const auto& perm : perms)
            if (g.diagram.permuted(perm).equivalent_mod2(target))
                out.push_back(permuted(g.m, perm));
        return out;
    };
    std::vector<Family> kept;
    auto strictly_special = [&](const Family& f, const Family& g) {
        for (const auto& form : g.forms)
            for (const auto& image : compatible_images(form, f.forms[0].diagram))
                if (affine_specializes(f.forms[0].m, image) &&
                    !affine_specializes(image, f.forms[0].m))
                    return true;
        return false;
    };
    auto same_orbit = [&](const Family& f, const Family& g) {
        for (const auto& form : g.forms)
            for (const auto& image : compatible_images(form, f.forms[0].diagram))
                if (affine_equivalent(f.forms[0].m, image)) return true;
        return false;
    };
    std::stable_sort(search.raw_families.begin(), search.raw_families.end(),
                     [](const Family& a, const Family& b) {
                         return a.free_params.size() > b.free_params.size();
                     });
    for (auto& f : search.raw_families) {
        if (f.forms.empty()) continue;
        bool drop = false;
        for (const auto& g : kept) {
            if (same_orbit(f, g) || strictly_special(f, g)) {
                drop = true;
                break;
            }
        }
        if (!drop) kept.push_back(std::move(f));
    }
    std::vector<std::string> reserved;
    for (const auto& f : kept)
        for (const auto& name : f.free_params)
            if (name.rfind("m", 0) != 0) reserved.push_back(name);
    for (auto& f : kept) rename_seed_params(f, reserved);

    report.families = std::move(kept);
    report.has_solutions = !report.families.empty();
    if (!report.has_solutions) report.witness = search.witness;
    return report;
}

} // namespace

bool affine_specializes(const AffineMatrix& special, const AffineMatrix& general) {
    if (special.size() != general.size()) return false;
    std::set<std::string, ParamLess> gp_set, sp_set;
    for (const auto& row : general)
        for (const auto& e : row)
            for (const auto& n : e.params()) gp_set.insert(n);
    for (const auto& row : special)
        for (const auto& e : row)
            for (const auto& n : e.params()) sp_set.insert(n);
    std::vector<std::string> gp(gp_set.begin(), gp_set.end());
    std::vector<std::string> sp(sp_set.begin(), sp_set.end());

    // unknown affine map: g = c0_g + sum_f cf_g_f * f
    auto c0 = [](const std::string& g) { return "c0[" + g + "]"; };
    auto cf = [](const std::string& g, const std::string& fparam) {
        return "cf[" + g + "][" + fparam + "]";
    };
    std::vector<AffineExpr> eqs;
    int n = static_cast<int>(special.size());
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            const AffineExpr& ge = general[i][j];
            const AffineExpr& se = special[i][j];
            AffineExpr const_eq(ge.constant() - se.constant());
            for (const auto& g : gp) const_eq += AffineExpr::param(c0(g), ge.coeff(g));
            eqs.push_back(const_eq);
            for (const auto& fparam : sp) {
                AffineExpr coeff_eq(-se.coeff(fparam));
                for (const auto& g : gp) coeff_eq += AffineExpr::param(cf(g, fparam), ge.coeff(g));
                eqs.push_back(coeff_eq);
            }
        }
    return !solve_linear(eqs).infeasible();
}

bool affine_equivalent(const AffineMatrix& a, const AffineMatrix& b) {
    return affine_specializes(a, b) && affine_specializes(b, a);
}

RealisationReport solve_realisation(const BraidingDiagram& q,
                                    const std::vector<DiagramClass>& chambers,
                                    const SolveOptions& options) {
    if (chambers.empty()) return solve_realisation(q, options);
    Problem p = build_from_stored(q.canonical(), chambers, options);
    return run_search(p, options);
}

RealisationReport solve_realisation(const BraidingDiagram& q, const SolveOptions& options) {
    Problem p = build_closure(q, options);
    return run_search(p, options);
}

bool verify_concrete_realisation(const std::vector<std::vector<Rational>>& m,
                                 const BraidingDiagram& q, std::string* why, int chamber_budget) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    int n = q.rank();
    if (static_cast<int>(m.size()) != n) return fail("rank mismatch");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (m[i][j] != m[j][i]) return fail("matrix not symmetric");
    // pairwise condition (7) in the matrix's own chamber
    GeneralizedCartan a = cartan_matrix(q);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            Rational cartan_residual = 2 * m[i][j] - Rational(a.at(i, j)) * m[i][i];
            Rational trunc_residual = Rational(1 - a.at(i, j)) * m[i][i] - 2;
            if (cartan_residual != 0 && trunc_residual != 0)
                return fail("condition (7) fails at pair (" + std::to_string(i + 1) + "," +
                            std::to_string(j + 1) + ")");
        }
    // exponent congruence over the whole closure
    GroupoidGraph g = enumerate_groupoid(q, chamber_budget);
    AffineMatrix m0 = constant_matrix(m);
    for (std::size_t ci = 0; ci < g.chambers.size(); ++ci) {
        const Chamber& c = g.chambers[ci];
        AffineMatrix mc = transport(m0, c.basis);
        for (int i = 0; i < n; ++i) {
            for (int j = i; j < n; ++j) {
                Rational target = i == j ? c.diagram.node_exponent(i).constant()
                                         : c.diagram.edge_exponent(i, j).constant();
                Rational value = i == j ? mc[i][j].constant() : 2 * mc[i][j].constant();
                if (!congruent(value, target, 2))
                    return fail("exponent congruence fails in chamber " + std::to_string(ci) +
                                " at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                ")");
            }
        }
    }
    return true;
}

} // namespace latreal
