#include "doctest.h"

#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "gperm/errors.hpp"
#include "gperm/rootpoly.hpp"
#include "oracles.hpp"

using namespace gperm;

namespace {

BipartiteGraph random_connected(std::mt19937& rng, int m, int n) {
    std::bernoulli_distribution coin(0.55);
    for (;;) {
        std::vector<BipartiteEdge> e;
        for (int i = 1; i <= m; ++i)
            for (int j = 1; j <= n; ++j)
                if (coin(rng)) e.emplace_back(i, j);
        BipartiteGraph g(m, n, e);
        if (g.connected()) return g;
    }
}

// Incompatibility as a cycle condition: U(T,T') has a simple directed cycle of length >= 4.
bool long_directed_cycle(const BipartiteSpanningTree& a, const BipartiteSpanningTree& b) {
    const int m = a.m, v = a.m + a.n;
    std::vector<std::vector<int>> out(v);
    for (auto [i, j] : a.edges) out[i - 1].push_back(m + j - 1);
    for (auto [i, j] : b.edges) out[m + j - 1].push_back(i - 1);
    std::vector<char> on(v, 0);
    bool found = false;
    std::function<void(int, int, int)> dfs = [&](int start, int x, int len) {
        if (found) return;
        for (int y : out[x]) {
            if (y == start && len >= 4) found = true;
            if (y > start && !on[y]) {
                on[y] = 1;
                dfs(start, y, len + 1);
                on[y] = 0;
            }
        }
    };
    for (int s = 0; s < v && !found; ++s) {
        on[s] = 1;
        dfs(s, s, 1);
        on[s] = 0;
    }
    return found;
}

// Vertices e_i - e_j̄ projected by dropping the last left and last right coordinates.
std::vector<Rational> root_vertex(int m, int n, BipartiteEdge e) {
    std::vector<Rational> p(m + n - 2);
    if (e.first < m) p[e.first - 1] = 1;
    if (e.second < n) p[m - 1 + e.second - 1] = -1;
    return p;
}

std::set<std::vector<int>> oracle_trimmed(const SubsetFamily& f) {
    std::vector<std::vector<int>> sets;
    for (Mask s : f.subsets) sets.push_back(elements_of(s));
    std::set<std::vector<int>> out;
    for (const auto& p : oracle::trim_points(f.n, oracle::minkowski_points(f.n, sets, std::vector<long>(f.m(), 1))))
        out.insert(std::vector<int>(p.begin(), p.end()));
    return out;
}

BipartiteSpanningTree tree(int m, int n, std::vector<BipartiteEdge> e) {
    std::sort(e.begin(), e.end());
    return {m, n, e};
}

}  // namespace

TEST_CASE("degree vectors") {
    auto [ld, rd] = degree_vectors(tree(2, 2, {{1, 1}, {2, 1}, {2, 2}}));
    CHECK(ld == std::vector<int>{0, 1});
    CHECK(rd == std::vector<int>{1, 0});
    auto star = tree(1, 4, {{1, 1}, {1, 2}, {1, 3}, {1, 4}});
    CHECK(star.left_degrees() == std::vector<int>{3});
    CHECK(star.right_degrees() == std::vector<int>{0, 0, 0, 0});
    CHECK_THROWS_AS(degree_vectors(tree(2, 2, {{1, 1}, {2, 2}})), DomainError);

    std::mt19937 rng(1);
    int checked = 0;
    for (int trial = 0; trial < 30; ++trial) {
        int m = 1 + trial % 4, n = 1 + (trial / 4) % 4;
        auto g = random_connected(rng, m, n);
        for (const auto& t : spanning_trees(g)) {
            auto [l, r] = degree_vectors(t);
            CHECK(std::accumulate(l.begin(), l.end(), 0) == n - 1);
            CHECK(std::accumulate(r.begin(), r.end(), 0) == m - 1);
            if (++checked > 200) break;
        }
    }
}

TEST_CASE("spanning trees and simplices") {
    CHECK(spanning_trees(BipartiteGraph::complete(2, 2)).size() == 4);
    // K_{m,n} has m^{n-1} n^{m-1} spanning trees
    CHECK(spanning_trees(BipartiteGraph::complete(3, 3)).size() == 81);
    CHECK(spanning_trees(BipartiteGraph::complete(2, 4)).size() == 32);
    CHECK_THROWS_AS(spanning_trees(BipartiteGraph::complete(3, 3), 10), ResourceLimitError);

    // each tree simplex has unit normalized volume
    for (auto [m, n] : {std::pair{2, 3}, std::pair{3, 3}, std::pair{2, 4}}) {
        for (const auto& t : spanning_trees(BipartiteGraph::complete(m, n))) {
            std::vector<std::vector<Rational>> rows;
            auto v0 = root_vertex(m, n, t.edges[0]);
            for (size_t k = 1; k < t.edges.size(); ++k) {
                auto v = root_vertex(m, n, t.edges[k]);
                for (size_t c = 0; c < v.size(); ++c) v[c] -= v0[c];
                rows.push_back(v);
            }
            CHECK(abs(oracle::determinant(rows)) == 1);
        }
    }

    // affinely independent vertex sets are exactly the forests
    const int m = 2, n = 3;
    auto g = BipartiteGraph::complete(m, n);
    for (unsigned pick = 1; pick < (1u << g.edges.size()); ++pick) {
        std::vector<BipartiteEdge> e;
        for (size_t k = 0; k < g.edges.size(); ++k)
            if (pick >> k & 1u) e.push_back(g.edges[k]);
        std::vector<std::vector<Rational>> diffs;
        auto v0 = root_vertex(m, n, e[0]);
        for (size_t k = 1; k < e.size(); ++k) {
            auto v = root_vertex(m, n, e[k]);
            for (size_t c = 0; c < v.size(); ++c) v[c] -= v0[c];
            diffs.push_back(v);
        }
        bool independent = diffs.empty() || oracle::rank(diffs) == static_cast<int>(diffs.size());
        std::vector<int> comp(m + n);
        std::iota(comp.begin(), comp.end(), 0);
        bool forest = true;
        for (auto [i, j] : e) {
            int a = comp[i - 1], b = comp[m + j - 1];
            if (a == b) forest = false;
            for (auto& c : comp)
                if (c == b) c = a;
        }
        CHECK(independent == forest);
    }
}

TEST_CASE("tree compatibility") {
    auto a = tree(2, 2, {{1, 2}, {2, 1}, {2, 2}});  // omits (1,1)
    auto b = tree(2, 2, {{1, 1}, {1, 2}, {2, 1}});  // omits (2,2)
    auto c = tree(2, 2, {{1, 1}, {2, 1}, {2, 2}});  // omits (1,2)
    CHECK(trees_compatible(a, a));
    CHECK(trees_compatible(a, b));
    CHECK_FALSE(trees_compatible(b, c));
    // the two crossing matchings plus a pendant third right vertex
    auto p = tree(2, 3, {{1, 1}, {2, 2}, {1, 2}, {2, 3}});
    auto q = tree(2, 3, {{1, 2}, {2, 1}, {1, 1}, {2, 3}});
    CHECK_FALSE(trees_compatible(p, q));

    std::mt19937 rng(8);
    for (int trial = 0; trial < 12; ++trial) {
        auto g = random_connected(rng, 2 + trial % 2, 2 + (trial / 2) % 3);
        auto trees = spanning_trees(g);
        for (size_t i = 0; i < trees.size(); ++i)
            for (size_t j = i; j < trees.size(); ++j)
                CHECK(trees_compatible(trees[i], trees[j]) == !long_directed_cycle(trees[i], trees[j]));
    }
}

TEST_CASE("triangulations and degree vectors") {
    CHECK(triangulate(BipartiteGraph::complete(2, 2)).trees.size() == 2);
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 4; ++n) {
            auto t = triangulate(BipartiteGraph::complete(m, n));
            CHECK(Integer(static_cast<unsigned long>(t.trees.size())) == binomial(m + n - 2, m - 1));
        }
    CHECK(volume_root_polytope(BipartiteGraph::complete(2, 2)) == 1);
    CHECK(volume_root_polytope(BipartiteGraph::complete(3, 3)) == Rational(6, 24));

    std::mt19937 rng(12);
    for (int trial = 0; trial < 20; ++trial) {
        int m = 1 + trial % 4, n = 1 + (trial / 3) % 4;
        auto g = random_connected(rng, m, n);
        auto t = triangulate(g);
        CHECK(is_triangulation(g, t));
        std::set<std::vector<int>> rds, lds;
        for (const auto& tr : t.trees) {
            auto [l, r] = degree_vectors(tr);
            rds.insert(r);
            lds.insert(l);
        }
        CHECK(rds == oracle_trimmed(g.family()));
        CHECK(lds == oracle_trimmed(g.mirror().family()));
        auto phi = rd_ld_bijection(t);
        CHECK(phi.size() == t.trees.size());
    }
}

TEST_CASE("degree bijection on K_{2,3}") {
    auto t = triangulate(BipartiteGraph::complete(2, 3));
    auto phi = rd_ld_bijection(t);
    REQUIRE(phi.size() == 3);
    std::set<std::vector<int>> dom, img;
    for (const auto& [r, l] : phi) {
        dom.insert(r);
        img.insert(l);
    }
    CHECK(dom == std::set<std::vector<int>>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(img == std::set<std::vector<int>>{{2, 0}, {1, 1}, {0, 2}});
}

TEST_CASE("central decompositions") {
    auto k3 = central_decomposition(RootGraph::complete(3));
    CHECK(k3.size() == 2);
    CHECK(volume_root_polytope_tilde(RootGraph::complete(3)) * 2 == 2);
    for (int n = 2; n <= 7; ++n) {
        CHECK(volume_root_polytope_tilde(RootGraph::complete(n)) == Rational(catalan(n - 1)) / Rational(factorial(n - 1)));
        auto trees = noncrossing_alternating_trees(n);
        CHECK(Integer(static_cast<unsigned long>(trees.size())) == catalan(n - 1));
        for (const auto& t : trees) {
            CHECK(is_alternating_tree(n, t));
            CHECK(is_noncrossing(t));
        }
    }
    Integer total = 0;
    for (const auto& part : central_decomposition(RootGraph::complete(4))) {
        auto nc = noncrossing_spanning_trees(part);
        CHECK(Integer(static_cast<unsigned long>(nc.size())) == lattice_points(part.graph.family(), true));
        total += static_cast<unsigned long>(nc.size());
        if (part.left == mask_of({1, 3})) CHECK(nc.size() == 1);
        // noncrossing trees of each part form a triangulation of it
        std::vector<int> lv = elements_of(part.left), rv = elements_of(part.right);
        Triangulation t{part.graph.m, part.graph.n, {}};
        for (const auto& e : nc) {
            std::vector<BipartiteEdge> rel;
            for (auto [i, j] : e)
                rel.emplace_back(std::find(lv.begin(), lv.end(), i) - lv.begin() + 1,
                                 std::find(rv.begin(), rv.end(), j) - rv.begin() + 1);
            t.trees.push_back(tree(part.graph.m, part.graph.n, rel));
        }
        CHECK(is_triangulation(part.graph, t));
    }
    CHECK(total == 5);

    // a transitive non-complete graph
    RootGraph g(4, {{1, 2}, {1, 3}, {1, 4}, {3, 4}});
    Rational v;
    for (const auto& part : central_decomposition(g)) v += volume_root_polytope(part.graph) / Rational(3);
    CHECK(v == volume_root_polytope_tilde(g));
    CHECK_THROWS_AS(central_decomposition(RootGraph(3, {{1, 2}, {2, 3}})), DomainError);
    CHECK_FALSE(is_alternating_tree(3, {{1, 2}, {2, 3}}));
}

TEST_CASE("alternating tree simplices have equal volume") {
    const int n = 5;
    for (const auto& t : noncrossing_alternating_trees(n)) {
        std::vector<std::vector<Rational>> rows;
        for (auto [i, j] : t) {
            std::vector<Rational> r(n - 1);
            if (i < n) r[i - 1] = 1;
            if (j < n) r[j - 1] = -1;
            rows.push_back(r);
        }
        CHECK(abs(oracle::determinant(rows)) == 1);
    }
}

TEST_CASE("fine mixed subdivisions") {
    auto ps = SubsetFamily::pitman_stanley(3);
    auto cells = fine_mixed_subdivision(ps, triangulate(BipartiteGraph::from_family(ps)));
    REQUIRE(cells.size() == 2);
    std::multiset<Rational> vols{cells[0].volume, cells[1].volume};
    CHECK(vols == std::multiset<Rational>{Rational(1, 2), Rational(1)});

    auto square = fine_mixed_subdivision(SubsetFamily::complete_bipartite(2, 2),
                                         triangulate(BipartiteGraph::complete(2, 2)));
    CHECK(square.size() == 2);

    std::mt19937 rng(21);
    std::uniform_int_distribution<int> wd(1, 4);
    for (int trial = 0; trial < 20; ++trial) {
        int m = 1 + trial % 4, n = 1 + (trial / 2) % 4;
        auto g = random_connected(rng, m, n);
        auto t = triangulate(g);
        auto unit = g.family();
        auto weighted = unit;
        for (auto& w : weighted.weights) w = Rational(wd(rng));

        Rational total;
        for (const auto& c : fine_mixed_subdivision(weighted, t)) total += c.volume;
        CHECK(total == volume(weighted));

        auto lattice = oracle_trimmed(unit);
        for (const auto& c : fine_mixed_subdivision(unit, t)) {
            std::vector<long> rd(c.right_degrees.begin(), c.right_degrees.end());
            CHECK(cell_contains_shift(n, c.J, rd));
            for (const auto& p : lattice)
                if (p != c.right_degrees) CHECK_FALSE(cell_contains_shift(n, c.J, std::vector<long>(p.begin(), p.end())));
        }
    }
}

TEST_CASE("semi-simplex decomposition counts") {
    // With I_1 = [n], counting lattice points cell by cell with raising powers reproduces the untrimmed count.
    std::mt19937 rng(4);
    std::uniform_int_distribution<int> wd(0, 3);
    for (int trial = 0; trial < 15; ++trial) {
        int m = 2 + trial % 3, n = 1 + (trial / 3) % 3;
        auto g = random_connected(rng, m, n);
        std::vector<BipartiteEdge> e = g.edges;
        for (int j = 1; j <= n; ++j) e.emplace_back(1, j);
        g = BipartiteGraph(m, n, e);
        auto f = g.family();
        for (auto& w : f.weights) w = Rational(wd(rng));
        Rational sum;
        for (const auto& c : fine_mixed_subdivision(f, triangulate(g))) {
            Rational term(1);
            for (int i = 0; i < m; ++i) {
                Rational y = f.weights[i] + (i == 0 ? 1 : 0);
                term *= rising_factorial(y, c.left_degrees[i]) / Rational(factorial(c.left_degrees[i]));
            }
            sum += term;
        }
        CHECK(sum == Rational(lattice_points(f, false)));
    }
}

TEST_CASE("graph JSON") {
    auto g = BipartiteGraph::from_json(nlohmann::json::parse(R"({"m":2,"n":2,"edges":[[1,1],[1,2],[2,1],[2,2]]})"));
    CHECK(g.edges.size() == 4);
    CHECK(BipartiteGraph::from_json(g.to_json()).edges == g.edges);
    CHECK_THROWS_AS(BipartiteGraph::from_json(nlohmann::json::parse(R"({"m":2,"n":2,"edges":[[3,1]]})")), DomainError);
    auto t = triangulate(g).to_json();
    CHECK(t["trees"].size() == 2);
    CHECK(t["trees"][0].contains("LD"));
}
