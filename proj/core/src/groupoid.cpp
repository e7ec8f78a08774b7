#include "latreal/groupoid.hpp"

#include "latreal/errors.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

namespace latreal {

void reflect_basis_and_diagram(const std::vector<RootVector>& basis, const BraidingDiagram& diagram,
                               const GeneralizedCartan& cartan, int k,
                               std::vector<RootVector>& basis_out, BraidingDiagram& diagram_out) {
    int n = static_cast<int>(basis.size());
    // columns of the reflection matrix in current-chamber coordinates
    std::vector<std::vector<long long>> cols(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i) {
        if (i == k) {
            cols[i][k] = -1;
        } else {
            cols[i][i] = 1;
            cols[i][k] = -cartan.at(k, i);
        }
    }
    basis_out.assign(n, RootVector(n, 0));
    for (int i = 0; i < n; ++i)
        for (int s = 0; s < n; ++s)
            for (int t = 0; t < n; ++t) basis_out[i][t] += cols[i][s] * basis[s][t];

    std::vector<AffineExpr> diag(n);
    std::vector<std::vector<AffineExpr>> edges(n, std::vector<AffineExpr>(n));
    for (int i = 0; i < n; ++i) {
        diag[i] = diagram.pullback_node(cols[i]).constant_mod2();
        for (int j = i + 1; j < n; ++j)
            edges[i][j] = edges[j][i] = diagram.pullback_edge(cols[i], cols[j]).constant_mod2();
    }
    diagram_out = BraidingDiagram(n, std::move(diag), std::move(edges));
}

Chamber reflect(const Chamber& c, int k) {
    Chamber out;
    reflect_basis_and_diagram(c.basis, c.diagram, c.cartan, k, out.basis, out.diagram);
    out.cartan = cartan_matrix(out.diagram);
    out.classes = classify_all(out.diagram, out.cartan);
    return out;
}

Chamber initial_chamber(const BraidingDiagram& q0) {
    Chamber c;
    int n = q0.rank();
    c.basis.assign(n, RootVector(n, 0));
    for (int i = 0; i < n; ++i) c.basis[i][i] = 1;
    c.diagram = q0.canonical();
    c.cartan = cartan_matrix(c.diagram);
    c.classes = classify_all(c.diagram, c.cartan);
    return c;
}

namespace {

std::string oriented_key(const std::vector<RootVector>& basis, const BraidingDiagram& diagram) {
    int n = static_cast<int>(basis.size());
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](int a, int b) { return basis[a] < basis[b]; });
    std::ostringstream out;
    for (int i : perm) {
        for (long long x : basis[i]) out << x << ",";
        out << "|";
    }
    out << diagram.permuted(perm).key();
    return out.str();
}

// Dedup key: sorted signed columns plus the braiding carried along the
// sorting permutation.  A chamber and its global antipode (all simple roots
// negated) carry the same braiding and are identified; this is what makes a
// rank-1 groupoid a single chamber with one self-inverse edge.
std::string chamber_key(const Chamber& c) {
    std::vector<RootVector> negated = c.basis;
    for (auto& col : negated)
        for (auto& x : col) x = -x;
    std::string a = oriented_key(c.basis, c.diagram);
    std::string b = oriented_key(negated, c.diagram);
    return a < b ? a : b;
}

} // namespace

GroupoidGraph enumerate_groupoid(const BraidingDiagram& q0, int budget) {
    if (budget < 1) throw UsageError("budget must be >= 1");
    GroupoidGraph g;
    std::map<std::string, int> index;
    std::deque<int> queue;

    Chamber first = initial_chamber(q0);
    index[chamber_key(first)] = 0;
    g.chambers.push_back(std::move(first));
    queue.push_back(0);

    while (!queue.empty()) {
        int ci = queue.front();
        queue.pop_front();
        int n = g.chambers[ci].rank();
        for (int k = 0; k < n; ++k) {
            Chamber next = reflect(g.chambers[ci], k);
            // involution sanity check: reflecting back restores basis and braiding
            {
                Chamber back = reflect(next, k);
                if (back.basis != g.chambers[ci].basis ||
                    !(back.diagram == g.chambers[ci].diagram))
                    throw Inconsistent("reflection is not involutive");
            }
            std::string key = chamber_key(next);
            auto it = index.find(key);
            int ni;
            if (it == index.end()) {
                ni = static_cast<int>(g.chambers.size());
                if (ni >= budget)
                    throw BudgetExceeded("groupoid budget of " + std::to_string(budget) +
                                         " chambers exceeded (not finite type?)");
                index[key] = ni;
                g.chambers.push_back(std::move(next));
                queue.push_back(ni);
            } else {
                ni = it->second;
            }
            g.edges[{ci, k}] = ni;
        }
    }
    return g;
}

RootSystem positive_roots(const GroupoidGraph& g) {
    std::set<RootVector> roots;
    for (const auto& c : g.chambers) {
        for (const auto& col : c.basis) {
            RootVector v = col;
            for (long long x : v) {
                if (x != 0) {
                    if (x < 0)
                        for (auto& y : v) y = -y;
                    break;
                }
            }
            roots.insert(v);
        }
    }
    RootSystem rs;
    rs.positive_roots.assign(roots.begin(), roots.end());
    return rs;
}

namespace {
// canonical representative under simultaneous row/column permutation
GeneralizedCartan cartan_canonical(const GeneralizedCartan& a) {
    int n = a.rank();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    GeneralizedCartan best = a;
    do {
        GeneralizedCartan p = a.permuted(perm);
        if (p.entries() < best.entries()) best = p;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}
} // namespace

std::vector<GeneralizedCartan> distinct_cartans(const GroupoidGraph& g) {
    std::vector<GeneralizedCartan> out;
    for (const auto& c : g.chambers) {
        GeneralizedCartan canon = cartan_canonical(c.cartan);
        bool seen = false;
        for (const auto& a : out)
            if (a == canon) {
                seen = true;
                break;
            }
        if (!seen) out.push_back(canon);
    }
    return out;
}

} // namespace latreal
