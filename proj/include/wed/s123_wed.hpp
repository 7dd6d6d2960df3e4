#pragma once

#include "wed/eds.hpp"
#include "wed/graph.hpp"
#include "wed/weights.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace wed {

// Strict closed-neighborhood containment order.
// u ∈ below[v] ⟺ N[u] ⊊ N[v] ⟺ v ∈ above[u].  maximal[v] ⟺ above[v] empty.
struct NeighborhoodPoset {
    std::vector<std::vector<int>> below;
    std::vector<std::vector<int>> above;
    std::vector<char> maximal;
};

NeighborhoodPoset neighborhood_poset(const Graph& g);

// Distance layering from a root, with each layer split into its connected
// components.  Nodes are listed level by level; node 0 is {root}.  Only the
// root's connected component appears.
struct TreeNode {
    int level = 0;
    int parent = -1; // node index; -1 for node 0
    std::vector<int> vertices;
    std::vector<int> children;
};

struct ComponentTree {
    int root = -1;
    std::vector<std::vector<int>> levels;
    std::vector<TreeNode> nodes;
    std::vector<int> node_of;  // -1 outside root's component
    std::vector<int> level_of; // -1 outside root's component
};

// Throws not_chordal_error (with a vertex witness in the message) when a
// layer component touches two components of the layer above, or when some
// vertex's neighbors in the layer above are not pairwise adjacent.  Both
// situations embed an induced cycle of length >= 4, so they cannot occur
// in a chordal graph.
ComponentTree component_tree(const Graph& g, int v);

// One admissible way to solve a node's subtree: pick `vertex` inside the
// node, plus one recorded candidate per committed descendant node.
struct Candidate {
    int vertex = -1;
    ExactWeight weight;                        // total over the subtree
    std::vector<std::pair<int, int>> choices;  // (node index, candidate index)
};

struct CandidateTable {
    std::vector<std::vector<Candidate>> per_node;
};

// Bottom-up dynamic program over the component tree.  A vertex d qualifies
// for node K at level i when it has finite weight, covers all of K, and the
// two layers below K can be completed consistently:
//   - every next-layer vertex missed by d is reachable from exactly one
//     layer-(i+2) node, whose chosen candidate must cover all such missed
//     vertices touching it and none of the next-layer vertices d covers;
//   - every layer-(i+2) node untouched by missed vertices is left empty,
//     each of its vertices covered by exactly one of its child nodes, whose
//     chosen candidate covers everything in the node touching that child.
// Choices for distinct descendant nodes are independent, so per-node minima
// (ties to the lowest vertex id) compose into subtree minima.
CandidateTable compute_candidates(const Graph& g, const ComponentTree& tree,
                                  const WeightMap& w);

// Minimum-weight e.d.s. containing v of v's connected component, or none.
// v must be a maximal element of the poset (not_maximal_error otherwise)
// with finite weight.  The reconstruction is re-verified with is_eds on the
// component; failure throws internal_error, never reads as "no e.d.s.".
std::optional<EdsSolution> v_maximal_wed(const Graph& g, const WeightMap& w, int v);

// Full solver for chordal graphs, exact on those with no induced spider
// S(1,2,3).  Repeatedly takes a maximal vertex v of the working graph,
// records the best solution through v, and then either removes v (pricing
// out the vertices no solution avoiding v may use) or marks it processed.
// Every recorded set is re-verified against the input graph and priced with
// the input weights, so on chordal inputs outside the class the result is
// still a genuine e.d.s. whenever one is returned.
// Throws not_chordal_error on non-chordal input.
std::optional<EdsSolution> s123_wed(const Graph& g, const WeightMap& w);

// Diagnostic: no neighbor of v is adjacent to all other neighbors of v.
// Fails on true twins (e.g. complete graphs); holds for the roots the
// direct solver prefers on sparse instances.
bool neighborhood_has_no_universal_vertex(const Graph& g, int v);

} // namespace wed
