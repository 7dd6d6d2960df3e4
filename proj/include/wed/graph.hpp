#pragma once

#include <string>
#include <utility>
#include <vector>

namespace wed {

// Simple undirected graph on vertex ids 0..n-1.  Adjacency lists are kept
// sorted and deduplicated; treat instances as immutable once built.
struct Graph {
    int n = 0;
    std::vector<std::vector<int>> adj;
    std::vector<std::string> labels; // optional; empty or size n

    bool has_edge(int u, int v) const;
    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    std::size_t edge_count() const;
};

// Builds a graph from an explicit edge list.  Throws invalid_input on
// out-of-range ids or self loops; parallel edges collapse to one.
Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges);

// N[v] = N(v) together with v, sorted.
std::vector<int> closed_neighborhood(const Graph& g, int v);

// Connected components, each sorted ascending, ordered by smallest member.
std::vector<std::vector<int>> components(const Graph& g);

// BFS distance levels from a root.  Vertices outside the root's component
// carry level -1.
struct LevelStructure {
    int root = 0;
    std::vector<std::vector<int>> levels; // levels[i] sorted ascending
    std::vector<int> level_of;            // -1 when unreached
};

LevelStructure bfs_levels(const Graph& g, int root);

Graph complement(const Graph& g);

// Subgraph induced by `vertices` (must be sorted, distinct, in range).
// to_original[new_id] recovers the source id.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_original;
};

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

} // namespace wed
