#pragma once

#include "wed/graph.hpp"
#include "wed/io.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace wed {

// Deterministic across platforms: the engine's output sequence is fixed by
// the standard, and draws map to ranges through plain arithmetic instead of
// distribution objects (whose algorithms are implementation-defined).
struct Rng {
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    std::uint64_t next() { return engine_(); }
    int below(int bound);         // uniform-ish in [0, bound)
    int in_range(int lo, int hi); // inclusive
    bool chance(double p);

  private:
    std::mt19937_64 engine_;
};

// X3C instance to its decision graph: universe vertices form a clique,
// each triple gets a hub adjacent to its three elements, each hub gets one
// pendant.  Numbering: universe 0..n-1, hubs, then pendants; labels carry
// the roles (v0.., x0.., y0..).
enum class Role { universe, hub, pendant };

struct ReductionOutput {
    Graph graph;
    std::vector<Role> role;
    std::vector<int> triple_index; // -1 for universe vertices
};

ReductionOutput x3c_to_graph(const X3cInstance& inst);

// Intersection graph of n random integer intervals.  density in [0,1]
// scales interval length; identical parameters give identical edge lists.
Graph random_interval_graph(int n, double density, std::uint64_t seed);

// Chordal by construction: every new vertex's neighborhood is a subset of
// an existing clique, so the reverse insertion order eliminates perfectly.
// edge_bias 0 gives an edgeless graph, 1 grows a single clique.
Graph random_chordal(int n, double edge_bias, std::uint64_t seed);

// Rejection front-end: random chordal graphs until one avoids every listed
// catalog graph as an induced subgraph, or max_tries exhausted.
std::optional<Graph> random_h_free_chordal(int n, const std::vector<std::string>& names,
                                           std::uint64_t seed, int max_tries);

} // namespace wed
