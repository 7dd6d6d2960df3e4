#pragma once

#include "wed/graph.hpp"
#include "wed/weights.hpp"

#include <optional>
#include <vector>

namespace wed {

// order[0] is eliminated first; position[v] inverts it.
struct EliminationOrder {
    std::vector<int> order;
    std::vector<int> position;
};

// Lexicographic BFS, ties broken toward lower vertex ids.  The visit order
// is returned reversed, i.e. as the elimination order to test: for a chordal
// graph it is always perfect.
EliminationOrder lex_bfs(const Graph& g);

// True iff every vertex's later-in-order neighbors form a clique.
bool is_peo(const Graph& g, const EliminationOrder& order);

struct ChordalityResult {
    bool chordal = false;
    EliminationOrder order;           // perfect iff chordal
    std::optional<std::vector<int>> hole; // induced cycle of length >= 4 otherwise
};

// `want_certificate` controls whether a hole is extracted on failure
// (extraction costs more than the test itself).
ChordalityResult is_chordal(const Graph& g, bool want_certificate = true);

// Induced cycle of length >= 4 if one exists.  The cycle is listed in order;
// consecutive entries (and the ends) are adjacent, nothing else is.
std::optional<std::vector<int>> find_hole(const Graph& g);

struct MwisResult {
    std::vector<int> set; // sorted
    ExactWeight weight;   // sum of the input weights over `set`
};

// Maximum-weight independent set of a chordal graph.  Weights may be
// negative; vertices only ever help with positive residual, so the optimum
// of the empty graph or of all-nonpositive weights is the empty set.
// Throws not_chordal_error when no perfect elimination order exists.
//
// Sweep once in elimination order keeping residual weights: a vertex with
// positive residual becomes a candidate and its residual is charged to all
// later neighbors.  A reverse greedy pass over candidates then picks a
// compatible set whose total input weight matches the claimed optimum.
MwisResult mwis_chordal(const Graph& g, const std::vector<ExactWeight>& weights);

} // namespace wed
