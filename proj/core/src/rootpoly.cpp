#include "gperm/rootpoly.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "gperm/errors.hpp"

namespace gperm {

namespace {

struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(int k) : p(k) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        p[b] = a;
        return true;
    }
};

void check_edges(int m, int n, const std::vector<BipartiteEdge>& edges) {
    require_domain(m >= 1 && n >= 1 && m <= 20 && n <= 20, "bipartite graph sizes out of range");
    for (auto [i, j] : edges)
        require_domain(i >= 1 && i <= m && j >= 1 && j <= n, "bipartite edge out of range");
}

}  // namespace

BipartiteGraph::BipartiteGraph(int m_, int n_, std::vector<BipartiteEdge> edges_) : m(m_), n(n_), edges(std::move(edges_)) {
    check_edges(m, n, edges);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

BipartiteGraph BipartiteGraph::complete(int m, int n) {
    std::vector<BipartiteEdge> e;
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j) e.emplace_back(i, j);
    return BipartiteGraph(m, n, e);
}

BipartiteGraph BipartiteGraph::from_family(const SubsetFamily& f) {
    std::vector<BipartiteEdge> e;
    for (int i = 0; i < f.m(); ++i)
        for (int j : elements_of(f.subsets[i])) e.emplace_back(i + 1, j);
    return BipartiteGraph(f.m(), f.n, e);
}

SubsetFamily BipartiteGraph::family() const {
    std::vector<Mask> s(m, 0);
    for (auto [i, j] : edges) s[i - 1] |= Mask(1) << (j - 1);
    return SubsetFamily(n, s);
}

BipartiteGraph BipartiteGraph::mirror() const {
    std::vector<BipartiteEdge> e;
    for (auto [i, j] : edges) e.emplace_back(j, i);
    return BipartiteGraph(n, m, e);
}

bool BipartiteGraph::connected() const {
    UnionFind uf(m + n);
    int comps = m + n;
    for (auto [i, j] : edges) comps -= uf.unite(i - 1, m + j - 1);
    return comps == 1;
}

BipartiteGraph BipartiteGraph::from_json(const nlohmann::json& j) {
    try {
        return BipartiteGraph(j.at("m").get<int>(), j.at("n").get<int>(),
                              j.at("edges").get<std::vector<BipartiteEdge>>());
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("malformed bipartite graph JSON: ") + e.what());
    }
}

nlohmann::json BipartiteGraph::to_json() const { return {{"m", m}, {"n", n}, {"edges", edges}}; }

std::vector<int> BipartiteSpanningTree::left_degrees() const { return degree_vectors(*this).first; }
std::vector<int> BipartiteSpanningTree::right_degrees() const { return degree_vectors(*this).second; }

nlohmann::json BipartiteSpanningTree::to_json() const {
    auto [ld, rd] = degree_vectors(*this);
    return {{"edges", edges}, {"LD", ld}, {"RD", rd}};
}

bool is_spanning_tree(int m, int n, const std::vector<BipartiteEdge>& edges) {
    if (static_cast<int>(edges.size()) != m + n - 1) return false;
    UnionFind uf(m + n);
    for (auto [i, j] : edges) {
        if (i < 1 || i > m || j < 1 || j > n) return false;
        if (!uf.unite(i - 1, m + j - 1)) return false;
    }
    return true;
}

std::pair<std::vector<int>, std::vector<int>> degree_vectors(const BipartiteSpanningTree& t) {
    require_domain(is_spanning_tree(t.m, t.n, t.edges), "degree vectors need a spanning tree");
    std::vector<int> ld(t.m, -1), rd(t.n, -1);
    for (auto [i, j] : t.edges) {
        ++ld[i - 1];
        ++rd[j - 1];
    }
    return {ld, rd};
}

bool trees_compatible(const BipartiteSpanningTree& a, const BipartiteSpanningTree& b) {
    require_domain(a.m == b.m && a.n == b.n, "trees on different vertex sets");
    const int m = a.m, v = a.m + a.n;
    std::vector<BipartiteEdge> common;
    std::set_intersection(a.edges.begin(), a.edges.end(), b.edges.begin(), b.edges.end(), std::back_inserter(common));
    UnionFind uf(v);
    for (auto [i, j] : common) uf.unite(i - 1, m + j - 1);
    std::vector<std::vector<int>> out(v);
    std::vector<int> indeg(v, 0);
    auto arc = [&](int from, int to) {
        from = uf.find(from);
        to = uf.find(to);
        out[from].push_back(to);
        ++indeg[to];
    };
    for (auto [i, j] : a.edges)
        if (!std::binary_search(common.begin(), common.end(), BipartiteEdge{i, j})) arc(i - 1, m + j - 1);
    for (auto [i, j] : b.edges)
        if (!std::binary_search(common.begin(), common.end(), BipartiteEdge{i, j})) arc(m + j - 1, i - 1);
    std::vector<int> queue;
    int nodes = 0;
    for (int x = 0; x < v; ++x)
        if (uf.find(x) == x) {
            ++nodes;
            if (indeg[x] == 0) queue.push_back(x);
        }
    int seen = 0;
    while (!queue.empty()) {
        int x = queue.back();
        queue.pop_back();
        ++seen;
        for (int y : out[x])
            if (--indeg[y] == 0) queue.push_back(y);
    }
    return seen == nodes;
}

std::vector<BipartiteSpanningTree> spanning_trees(const BipartiteGraph& g, std::size_t limit) {
    const int need = g.m + g.n - 1;
    const int e = static_cast<int>(g.edges.size());
    std::vector<BipartiteSpanningTree> out;
    std::vector<BipartiteEdge> chosen;
    std::function<void(int, UnionFind&)> rec = [&](int k, UnionFind& uf) {
        if (static_cast<int>(chosen.size()) == need) {
            if (out.size() >= limit)
                throw ResourceLimitError("spanning tree enumeration exceeds " + std::to_string(limit) + " trees");
            out.push_back({g.m, g.n, chosen});
            return;
        }
        if (e - k < need - static_cast<int>(chosen.size())) return;
        auto [i, j] = g.edges[k];
        int a = uf.find(i - 1), b = uf.find(g.m + j - 1);
        if (a != b) {
            UnionFind next = uf;
            next.unite(a, b);
            chosen.push_back(g.edges[k]);
            rec(k + 1, next);
            chosen.pop_back();
        }
        rec(k + 1, uf);
    };
    UnionFind uf(g.m + g.n);
    rec(0, uf);
    return out;
}

nlohmann::json Triangulation::to_json() const {
    nlohmann::json trees_json = nlohmann::json::array();
    for (const auto& t : trees) trees_json.push_back(t.to_json());
    return {{"m", m}, {"n", n}, {"trees", trees_json}};
}

Triangulation triangulate(const BipartiteGraph& g) {
    require_domain(g.connected(), "triangulate: graph must be connected without isolated vertices");
    const auto trees = spanning_trees(g);
    const std::size_t target = lattice_points(g.family(), true, true).get_ui();
    const std::size_t k = trees.size();

    std::map<std::pair<std::size_t, std::size_t>, bool> memo;
    auto compatible = [&](std::size_t a, std::size_t b) {
        auto key = std::minmax(a, b);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        return memo[key] = trees_compatible(trees[a], trees[b]);
    };
    auto fits = [&](const std::vector<std::size_t>& acc, std::size_t c) {
        return std::all_of(acc.begin(), acc.end(), [&](std::size_t a) { return compatible(a, c); });
    };

    std::vector<std::size_t> accepted;
    for (std::size_t c = 0; c < k && accepted.size() < target; ++c)
        if (fits(accepted, c)) accepted.push_back(c);

    if (accepted.size() != target) {
        accepted.clear();
        std::function<bool(std::size_t)> search = [&](std::size_t c) {
            if (accepted.size() == target) return true;
            if (accepted.size() + (k - c) < target) return false;
            if (fits(accepted, c)) {
                accepted.push_back(c);
                if (search(c + 1)) return true;
                accepted.pop_back();
            }
            return search(c + 1);
        };
        require_consistent(search(0), "triangulate: no compatible family of the required size found");
    }

    Triangulation t{g.m, g.n, {}};
    for (std::size_t c : accepted) t.trees.push_back(trees[c]);
    return t;
}

bool is_triangulation(const BipartiteGraph& g, const Triangulation& t) {
    if (t.m != g.m || t.n != g.n) return false;
    for (const auto& tree : t.trees) {
        if (!is_spanning_tree(t.m, t.n, tree.edges)) return false;
        for (const auto& e : tree.edges)
            if (!std::binary_search(g.edges.begin(), g.edges.end(), e)) return false;
    }
    for (std::size_t a = 0; a < t.trees.size(); ++a)
        for (std::size_t b = a + 1; b < t.trees.size(); ++b)
            if (!trees_compatible(t.trees[a], t.trees[b])) return false;
    std::map<std::vector<int>, int> rd, ld;
    for (const auto& tree : t.trees) {
        auto [l, r] = degree_vectors(tree);
        if (ld[l]++ || rd[r]++) return false;
    }
    return Integer(static_cast<unsigned long>(t.trees.size())) == lattice_points(g.family(), true, true);
}

Rational volume_root_polytope(const BipartiteGraph& g) {
    require_domain(g.connected(), "root polytope volume: graph must be connected");
    return Rational(lattice_points(g.family(), true, true)) / Rational(factorial(g.m + g.n - 2));
}

std::map<std::vector<int>, std::vector<int>> rd_ld_bijection(const Triangulation& t) {
    std::map<std::vector<int>, std::vector<int>> phi;
    std::map<std::vector<int>, int> images;
    for (const auto& tree : t.trees) {
        auto [ld, rd] = degree_vectors(tree);
        require_consistent(phi.emplace(rd, ld).second, "rd_ld_bijection: repeated right degree vector");
        require_consistent(images[ld]++ == 0, "rd_ld_bijection: repeated left degree vector");
    }
    return phi;
}

RootGraph::RootGraph(int n_, std::vector<std::pair<int, int>> edges_) : n(n_), edges(std::move(edges_)) {
    require_domain(n >= 2 && n <= 20, "root graph size out of range");
    for (auto& [i, j] : edges) {
        if (i > j) std::swap(i, j);
        require_domain(i >= 1 && j <= n && i != j, "root graph edge out of range");
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

RootGraph RootGraph::complete(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) e.emplace_back(i, j);
    return RootGraph(n, e);
}

bool RootGraph::has_edge(int i, int j) const {
    if (i > j) std::swap(i, j);
    return std::binary_search(edges.begin(), edges.end(), std::pair<int, int>{i, j});
}

std::vector<CentralPart> central_decomposition(const RootGraph& g) {
    const int n = g.n;
    for (auto [i, j] : g.edges)
        for (int k = j + 1; k <= n; ++k)
            if (g.has_edge(j, k) && !g.has_edge(i, k))
                throw DomainError("graph lacks the transitivity property: (" + std::to_string(i) + "," +
                                  std::to_string(j) + "), (" + std::to_string(j) + "," + std::to_string(k) +
                                  ") present but (" + std::to_string(i) + "," + std::to_string(k) + ") missing");
    UnionFind uf(n);
    int comps = n;
    for (auto [i, j] : g.edges) comps -= uf.unite(i - 1, j - 1);
    require_domain(comps == 1, "central decomposition needs a connected graph");

    std::vector<CentralPart> parts;
    const int middle = n - 2;
    for (Mask pick = 0; pick < (Mask(1) << middle); ++pick) {
        Mask left = 1u | (pick << 1);
        Mask right = full_mask(n) & ~left;
        std::vector<int> lpos(n + 1, 0), rpos(n + 1, 0);
        int lc = 0, rc = 0;
        for (int v = 1; v <= n; ++v) {
            if (left >> (v - 1) & 1u) lpos[v] = ++lc;
            else rpos[v] = ++rc;
        }
        std::vector<BipartiteEdge> e;
        for (auto [i, j] : g.edges)
            if (lpos[i] && rpos[j]) e.emplace_back(lpos[i], rpos[j]);
        BipartiteGraph bg(lc, rc, e);
        if (bg.connected()) parts.push_back({left, right, bg});
    }
    return parts;
}

Rational volume_root_polytope_tilde(const RootGraph& g) {
    Rational total;
    for (const auto& part : central_decomposition(g)) total += Rational(lattice_points(part.graph.family(), true, true));
    return total / Rational(factorial(g.n - 1));
}

bool is_alternating_tree(int n, const std::vector<std::pair<int, int>>& edges) {
    if (static_cast<int>(edges.size()) != n - 1) return false;
    UnionFind uf(n);
    std::vector<char> lower(n + 1, 0), upper(n + 1, 0);
    for (auto [a, b] : edges) {
        int i = std::min(a, b), j = std::max(a, b);
        if (i < 1 || j > n || i == j || !uf.unite(i - 1, j - 1)) return false;
        upper[i] = 1;  // i has a neighbour above it
        lower[j] = 1;  // j has a neighbour below it
    }
    for (int v = 1; v <= n; ++v)
        if (lower[v] && upper[v]) return false;
    return true;
}

bool is_noncrossing(const std::vector<std::pair<int, int>>& edges) {
    for (auto [a1, b1] : edges)
        for (auto [a2, b2] : edges) {
            int i = std::min(a1, b1), k = std::max(a1, b1);
            int j = std::min(a2, b2), l = std::max(a2, b2);
            if (i < j && j < k && k < l) return false;
        }
    return true;
}

std::vector<std::vector<std::pair<int, int>>> noncrossing_spanning_trees(const CentralPart& part) {
    std::vector<int> lv = elements_of(part.left), rv = elements_of(part.right);
    std::vector<std::vector<std::pair<int, int>>> out;
    for (const auto& t : spanning_trees(part.graph)) {
        std::vector<std::pair<int, int>> e;
        for (auto [i, j] : t.edges) e.emplace_back(lv[i - 1], rv[j - 1]);
        std::sort(e.begin(), e.end());
        if (is_noncrossing(e)) out.push_back(e);
    }
    return out;
}

std::vector<std::vector<std::pair<int, int>>> noncrossing_alternating_trees(int n) {
    std::vector<std::vector<std::pair<int, int>>> out;
    for (const auto& part : central_decomposition(RootGraph::complete(n)))
        for (auto& t : noncrossing_spanning_trees(part)) out.push_back(std::move(t));
    return out;
}

std::vector<MixedCell> fine_mixed_subdivision(const SubsetFamily& f, const Triangulation& t) {
    require_domain(t.m == f.m() && t.n == f.n, "triangulation does not match the family");
    std::vector<MixedCell> cells;
    for (const auto& tree : t.trees) {
        MixedCell c;
        c.J.assign(f.m(), 0);
        for (auto [i, j] : tree.edges) {
            require_domain(f.subsets[i - 1] >> (j - 1) & 1u, "tree edge not in the family's graph");
            c.J[i - 1] |= Mask(1) << (j - 1);
        }
        std::tie(c.left_degrees, c.right_degrees) = degree_vectors(tree);
        c.volume = Rational(1);
        for (int i = 0; i < f.m(); ++i) {
            unsigned d = static_cast<unsigned>(c.left_degrees[i]);
            if (d) c.volume *= pow(f.weights[i], d) / Rational(factorial(d));
        }
        cells.push_back(std::move(c));
    }
    return cells;
}

bool cell_contains_shift(int n, const std::vector<Mask>& J, const std::vector<long>& a) {
    require_domain(static_cast<int>(a.size()) == n, "shift vector has wrong length");
    SubsetMap y;
    for (Mask s : J) y[s] += Rational(1);
    auto z = z_from_y(y, n);
    const Mask top = full_mask(n);
    for (int j = 0; j < n; ++j) {
        std::vector<long> p = a;
        ++p[j];
        for (Mask u = 1; u <= top; ++u) {
            long sum = 0;
            for (int k = 0; k < n; ++k)
                if (u >> k & 1u) sum += p[k];
            const Rational& bound = z.at(u);
            if (u == top ? Rational(sum) != bound : Rational(sum) < bound) return false;
        }
    }
    return true;
}

}  // namespace gperm
