#ifndef PERMFOREST_GRAPH_HPP
#define PERMFOREST_GRAPH_HPP

#include <optional>
#include <utility>
#include <vector>

#include "permforest/permutation.hpp"

namespace permforest {

using Edge = std::pair<int, int>;  // (i, j) with i < j, 1-based vertices

// Graph on {1..n} whose edges join i < j exactly when p(i) < p(j) and no k
// strictly between has p(i) < p(k) < p(j). These are the cover relations of
// the point poset {(i, p(i))}; orienting every edge low label -> high label
// gives a DAG.
struct PermGraph {
    int n = 0;
    std::vector<Edge> edges;  // sorted lexicographically

    std::vector<std::vector<int>> adjacency() const;
    std::vector<int> degrees() const;  // index 1..n, [0] unused
};

// Horizontal projections of the graph edges: bar (i, j) spans the vertical
// dividers i .. j-1 of an n-column diagram. Bars are kept in lexicographic
// (start, end) order.
struct BarDiagram {
    int n = 0;
    std::vector<Edge> bars;
};

PermGraph build_graph(const Permutation& p);
BarDiagram build_bar_diagram(const Permutation& p);

int edge_count(const Permutation& p);

bool is_acyclic(const PermGraph& g);
bool is_connected(const PermGraph& g);

// A cycle as a vertex list (first found by DFS from the smallest vertex with
// neighbors scanned in increasing order), or nothing if the graph is a forest.
std::optional<std::vector<int>> find_cycle(const PermGraph& g);

// Vertex sets of connected components, each sorted, ordered by smallest member.
std::vector<std::vector<int>> components(const PermGraph& g);

// For each vertex, the number of vertices reachable in the oriented graph
// (including itself). Equals |{j >= i : p(j) >= p(i)}| when g = build_graph(p).
std::vector<int> reach_counts(const PermGraph& g);

// Inverts p -> G_p. Accepts an arbitrary edge set on n vertices and returns
// nothing when it is not the graph of any permutation.
std::optional<Permutation> reconstruct(const PermGraph& g);

}  // namespace permforest

#endif
