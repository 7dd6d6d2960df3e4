#pragma once

#include "wed/graph.hpp"
#include "wed/weights.hpp"

#include <optional>
#include <utility>
#include <vector>

// Exhaustive reference implementations used to pin expected values.  They
// share nothing with the library's algorithmic paths: everything here works
// by direct enumeration over the adjacency lists.
namespace wed::oracle {

// Minimum-weight set whose closed neighborhoods hit every vertex exactly
// once, over all subsets of finite-weight vertices.  Ties break to the
// lexicographically smallest set.  Guard: n <= 20.
std::optional<std::pair<std::vector<int>, ExactWeight>>
min_eds_by_enumeration(const Graph& g, const WeightMap& w);

// Maximum-weight independent set over all subsets.  Guard: n <= 20.
std::pair<std::vector<int>, long long>
mwis_by_enumeration(const Graph& g, const std::vector<long long>& weights);

// Induced-subgraph containment by trying every vertex subset and every
// assignment.  Guards: host n <= 14, pattern n <= 6.
bool contains_induced_by_enumeration(const Graph& host, const Graph& pattern);

// Isomorphism by trying every permutation.  Guard: n <= 8.
bool isomorphic_by_enumeration(const Graph& a, const Graph& b);

// Whether some vertex subset induces a cycle of length >= 4.  Guard: n <= 12.
bool has_hole_by_enumeration(const Graph& g);

} // namespace wed::oracle
