#pragma once

#include "wed/graph.hpp"
#include "wed/weights.hpp"

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

namespace wed {

// Text format for weighted graphs:
//
//   # comment
//   n m
//   u v          (exactly m edge lines)
//   w u VALUE    (optional; VALUE is a nonnegative integer or "inf")
//
// Vertices without a `w` line weigh 1.
struct GraphFile {
    Graph graph;
    WeightMap weights;
};

GraphFile parse_graph_text(std::istream& in, const std::string& origin = "<stream>");
GraphFile read_graph_file(const std::string& path);

std::string write_graph_text(const Graph& g, const WeightMap* weights = nullptr);
void write_graph_file(const std::string& path, const Graph& g, const WeightMap* weights = nullptr);

// Sidecar weight files hold `u VALUE` lines (a leading `w` is tolerated).
// Values override whatever the graph file supplied for those vertices.
void apply_weight_overrides(std::istream& in, WeightMap& w, const std::string& origin = "<stream>");
void apply_weight_file(const std::string& path, WeightMap& w);

// Exact-cover-by-3-sets instance file: `n m` then m lines of three ids.
struct X3cInstance {
    int n = 0;                             // universe 0..n-1, n divisible by 3
    std::vector<std::array<int, 3>> triples; // each sorted ascending
};

X3cInstance parse_x3c_text(std::istream& in, const std::string& origin = "<stream>");
X3cInstance read_x3c_file(const std::string& path);

X3cInstance make_x3c(int n, const std::vector<std::array<int, 3>>& triples);

} // namespace wed
