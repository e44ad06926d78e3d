#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "gperm/combinatorics.hpp"
#include "gperm/minkowski.hpp"
#include "gperm/rational.hpp"

namespace gperm {

/// Edge (i, j̄) with i in [m] on the left and j in [n] on the right.
using BipartiteEdge = std::pair<int, int>;

/// Bipartite graph G ⊆ K_{m,n}; edges are kept sorted and unique.
struct BipartiteGraph {
    int m = 0;
    int n = 0;
    std::vector<BipartiteEdge> edges;

    BipartiteGraph() = default;
    BipartiteGraph(int m, int n, std::vector<BipartiteEdge> edges);

    static BipartiteGraph complete(int m, int n);
    /// Edge (i, j̄) for each j in I_i.
    static BipartiteGraph from_family(const SubsetFamily& f);
    /// I_i = neighbours of left vertex i, unit weights.
    SubsetFamily family() const;
    /// Left and right parts swapped.
    BipartiteGraph mirror() const;
    /// Connected with no isolated vertices.
    bool connected() const;

    static BipartiteGraph from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;
};

/// Spanning tree of a bipartite graph, as a sorted edge list.
struct BipartiteSpanningTree {
    int m = 0;
    int n = 0;
    std::vector<BipartiteEdge> edges;

    /// Left degrees minus one (length m) and right degrees minus one (length n).
    std::vector<int> left_degrees() const;
    std::vector<int> right_degrees() const;
    nlohmann::json to_json() const;
};

bool is_spanning_tree(int m, int n, const std::vector<BipartiteEdge>& edges);

/// (LD, RD); throws DomainError unless the edges form a spanning tree of K_{m,n}.
std::pair<std::vector<int>, std::vector<int>> degree_vectors(const BipartiteSpanningTree& t);

/// Simplices Δ_T and Δ_T' meet in a common face: after contracting T ∩ T', the graph with T-edges
/// oriented left to right and T'-edges right to left is acyclic.
bool trees_compatible(const BipartiteSpanningTree& a, const BipartiteSpanningTree& b);

/// Spanning trees in lexicographic order of their sorted edge lists; refuses beyond `limit`.
std::vector<BipartiteSpanningTree> spanning_trees(const BipartiteGraph& g, std::size_t limit = 1000000);

struct Triangulation {
    int m = 0;
    int n = 0;
    std::vector<BipartiteSpanningTree> trees;

    nlohmann::json to_json() const;
};

/// A triangulation of Q_G by pairwise compatible spanning trees. The target size is the trimmed
/// lattice count of P_G; a greedy pass is followed by backtracking if it falls short.
Triangulation triangulate(const BipartiteGraph& g);

/// Checks pairwise compatibility, the simplex count, and distinctness of RD and LD vectors.
bool is_triangulation(const BipartiteGraph& g, const Triangulation& t);

/// (m+n-2)-dimensional volume of Q_G from the trimmed lattice count of P_G.
Rational volume_root_polytope(const BipartiteGraph& g);

/// RD(T) -> LD(T) over the trees of a triangulation; throws ConsistencyError if not injective.
std::map<std::vector<int>, std::vector<int>> rd_ld_bijection(const Triangulation& t);

/// Simple graph on [n] given by pairs i < j, used for the root polytope of conv(0, e_i - e_j).
struct RootGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;

    RootGraph() = default;
    RootGraph(int n, std::vector<std::pair<int, int>> edges);
    static RootGraph complete(int n);
    bool has_edge(int i, int j) const;
};

/// Part G_{L,R} of the central decomposition; `graph` relabels L and R to 1..|L| and 1..|R| in order.
struct CentralPart {
    Mask left = 0;
    Mask right = 0;
    BipartiteGraph graph;
};

/// Splits [n] = L ∪ R with 1 ∈ L, n ∈ R and G_{L,R} connected; throws DomainError with a
/// witness triple if G lacks the transitivity property.
std::vector<CentralPart> central_decomposition(const RootGraph& g);

/// (n-1)-dimensional volume of conv(0, e_i - e_j : (i,j) ∈ G) via the central decomposition.
Rational volume_root_polytope_tilde(const RootGraph& g);

/// Trees on [n] with no i < j < k such that (i,j) and (j,k) are both edges.
bool is_alternating_tree(int n, const std::vector<std::pair<int, int>>& edges);
/// No two edges (i,k), (j,l) with i < j < k < l.
bool is_noncrossing(const std::vector<std::pair<int, int>>& edges);

/// Noncrossing spanning trees of a central part, in original labels.
std::vector<std::vector<std::pair<int, int>>> noncrossing_spanning_trees(const CentralPart& part);
/// Noncrossing alternating spanning trees of K_n (a central triangulation).
std::vector<std::vector<std::pair<int, int>>> noncrossing_alternating_trees(int n);

/// Fine mixed cell Π_T = y_1 Δ_{J_1} × ... × y_m Δ_{J_m}.
struct MixedCell {
    std::vector<Mask> J;
    std::vector<int> left_degrees;
    std::vector<int> right_degrees;
    Rational volume;
};

/// Cells of the fine mixed subdivision of P_G(y) matching a triangulation of Q_G.
std::vector<MixedCell> fine_mixed_subdivision(const SubsetFamily& f, const Triangulation& t);

/// Is a + Δ_[n] inside the unit-weight cell Δ_{J_1} + ... + Δ_{J_m}?
bool cell_contains_shift(int n, const std::vector<Mask>& J, const std::vector<long>& a);

}  // namespace gperm
