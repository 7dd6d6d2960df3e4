#include "wed/generators.hpp"

#include "wed/catalog.hpp"
#include "wed/errors.hpp"
#include "wed/subgraph.hpp"

#include <algorithm>
#include <cmath>

namespace wed {

int Rng::below(int bound) {
    if (bound <= 0) throw invalid_input("rng bound must be positive");
    // Modulo bias is below 2^-40 for any bound this project uses.
    return static_cast<int>(next() % static_cast<std::uint64_t>(bound));
}

int Rng::in_range(int lo, int hi) {
    if (lo > hi) throw invalid_input("empty rng range");
    return lo + below(hi - lo + 1);
}

bool Rng::chance(double p) {
    if (p <= 0.0) return false;
    if (p >= 1.0) return true;
    return next() % 1000000 < static_cast<std::uint64_t>(std::llround(p * 1000000.0));
}

ReductionOutput x3c_to_graph(const X3cInstance& inst) {
    const int n = inst.n;
    const int m = static_cast<int>(inst.triples.size());
    ReductionOutput out;
    out.graph.n = n + 2 * m;
    out.graph.adj.assign(out.graph.n, {});
    out.role.assign(out.graph.n, Role::universe);
    out.triple_index.assign(out.graph.n, -1);
    out.graph.labels.assign(out.graph.n, "");

    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
        out.graph.labels[u] = "v" + std::to_string(u);
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    }
    for (int j = 0; j < m; ++j) {
        int hub = n + j;
        int pendant = n + m + j;
        out.role[hub] = Role::hub;
        out.role[pendant] = Role::pendant;
        out.triple_index[hub] = j;
        out.triple_index[pendant] = j;
        out.graph.labels[hub] = "x" + std::to_string(j);
        out.graph.labels[pendant] = "y" + std::to_string(j);
        for (int u : inst.triples[j]) edges.emplace_back(u, hub);
        edges.emplace_back(hub, pendant);
    }
    auto labels = std::move(out.graph.labels);
    out.graph = from_edge_list(n + 2 * m, edges);
    out.graph.labels = std::move(labels);
    return out;
}

namespace {

Graph intervals_to_graph(const std::vector<std::pair<int, int>>& iv) {
    const int n = static_cast<int>(iv.size());
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (std::max(iv[u].first, iv[v].first) <= std::min(iv[u].second, iv[v].second)) {
                edges.emplace_back(u, v);
            }
        }
    }
    return from_edge_list(n, edges);
}

Graph random_chordal_impl(int n, double edge_bias, Rng& rng) {
    if (n < 0) throw invalid_input("vertex count must be nonnegative");
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> cliques;
    if (n > 0) cliques.push_back({0});
    for (int v = 1; v < n; ++v) {
        int bi = rng.below(static_cast<int>(cliques.size()));
        std::vector<int> base = cliques[bi];
        std::vector<int> picked;
        for (int u : base) {
            if (rng.chance(edge_bias)) picked.push_back(u);
        }
        for (int u : picked) edges.emplace_back(u, v);
        std::vector<int> grown(picked);
        grown.push_back(v);
        if (picked.size() == base.size()) {
            // The whole clique extends; replacing it lets bias 1 grow K_n.
            cliques[bi] = std::move(grown);
        } else {
            cliques.push_back(std::move(grown));
        }
    }
    return from_edge_list(n, edges);
}

} // namespace

Graph random_interval_graph(int n, double density, std::uint64_t seed) {
    if (n < 0) throw invalid_input("vertex count must be nonnegative");
    if (density < 0.0 || density > 1.0) throw invalid_input("density must lie in [0,1]");
    Rng rng(seed);
    const int span = 4 * std::max(n, 1);
    const int max_len = 1 + static_cast<int>(density * 63.0);
    std::vector<std::pair<int, int>> iv(n);
    for (int v = 0; v < n; ++v) {
        int a = rng.below(span);
        int len = rng.in_range(1, max_len);
        iv[v] = {a, a + len};
    }
    return intervals_to_graph(iv);
}

Graph random_chordal(int n, double edge_bias, std::uint64_t seed) {
    if (edge_bias < 0.0 || edge_bias > 1.0) throw invalid_input("edge bias must lie in [0,1]");
    Rng rng(seed);
    return random_chordal_impl(n, edge_bias, rng);
}

std::optional<Graph> random_h_free_chordal(int n, const std::vector<std::string>& names,
                                           std::uint64_t seed, int max_tries) {
    if (max_tries < 1) throw invalid_input("max_tries must be positive");
    std::vector<Graph> patterns;
    for (const auto& name : names) patterns.push_back(named(name).graph);
    Rng rng(seed);
    for (int t = 0; t < max_tries; ++t) {
        double bias = rng.below(1000001) / 1000000.0;
        Graph g = random_chordal_impl(n, bias, rng);
        bool free = true;
        for (const auto& p : patterns) {
            if (contains_induced(g, p)) {
                free = false;
                break;
            }
        }
        if (free) return g;
    }
    return std::nullopt;
}

} // namespace wed
