#pragma once

#include "wed/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wed {

// map[i] = host vertex playing pattern vertex i.
struct Embedding {
    std::vector<int> map;
};

// Induced-subgraph search: adjacency in the host must match the pattern
// exactly on mapped pairs.  Patterns are capped at 12 vertices; larger
// requests throw too_large_error.
std::optional<Embedding> find_induced(const Graph& host, const Graph& pattern);

bool contains_induced(const Graph& host, const Graph& pattern);

// True iff none of the named catalog graphs embeds in `host`.
bool is_free_of_all(const Graph& host, const std::vector<std::string>& names);

// First name whose graph embeds, if any.
std::optional<std::string> find_forbidden(const Graph& host,
                                          const std::vector<std::string>& names);

} // namespace wed
