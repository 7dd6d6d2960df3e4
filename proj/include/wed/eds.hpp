#pragma once

#include "wed/graph.hpp"
#include "wed/io.hpp"
#include "wed/weights.hpp"

#include <optional>
#include <vector>

namespace wed {

struct EdsSolution {
    std::vector<int> set; // sorted
    ExactWeight weight;   // finite by construction
};

// Exact domination: every vertex has exactly one member of `d` in its
// closed neighborhood.  `d` may be unsorted; duplicates are rejected.
bool is_eds(const Graph& g, const std::vector<int>& d);

// Exhaustive minimum-weight efficient dominating set.  Only vertices of
// finite weight may enter the set.  Ties on weight break toward the
// lexicographically smallest vertex set.  Capped at 24 vertices; larger
// graphs throw too_large_error.
std::optional<EdsSolution> brute_force_wed(const Graph& g, const WeightMap& w);

// Exact cover by 3-sets, exhaustive.  Returns indices into inst.triples of
// a cover, lowest-index-first among solutions, or nullopt.  Capped at 20
// triples.
std::optional<std::vector<int>> x3c_solve(const X3cInstance& inst);

} // namespace wed
