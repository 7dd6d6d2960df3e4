#include "wed/subgraph.hpp"

#include "wed/catalog.hpp"
#include "wed/errors.hpp"

#include <algorithm>

namespace wed {

namespace {

constexpr int kMaxPatternSize = 12;

bool host_edge(const Graph& host, int u, int v) {
    const auto& lst = host.adj[u];
    return std::binary_search(lst.begin(), lst.end(), v);
}

struct Searcher {
    const Graph& host;
    const Graph& pattern;
    std::vector<int> order;      // pattern vertices, most-constrained first
    std::vector<int> assigned;   // pattern -> host, -1 while free
    std::vector<char> used;      // host vertex taken
    std::vector<std::vector<char>> pat_adj;

    Searcher(const Graph& h, const Graph& p) : host(h), pattern(p) {
        assigned.assign(pattern.n, -1);
        used.assign(host.n, 0);
        pat_adj.assign(pattern.n, std::vector<char>(pattern.n, 0));
        for (int u = 0; u < pattern.n; ++u)
            for (int v : pattern.adj[u]) pat_adj[u][v] = 1;

        // Order by connectivity to already placed vertices, then by degree:
        // keeps the partial map tightly constrained.
        std::vector<char> placed(pattern.n, 0);
        for (int step = 0; step < pattern.n; ++step) {
            int best = -1, best_links = -1, best_deg = -1;
            for (int v = 0; v < pattern.n; ++v) {
                if (placed[v]) continue;
                int links = 0;
                for (int u : pattern.adj[v])
                    if (placed[u]) ++links;
                int deg = pattern.degree(v);
                if (links > best_links || (links == best_links && deg > best_deg)) {
                    best = v;
                    best_links = links;
                    best_deg = deg;
                }
            }
            order.push_back(best);
            placed[best] = 1;
        }
    }

    bool feasible(int pv, int hv) const {
        if (host.degree(hv) < pattern.degree(pv)) return false;
        for (int pu = 0; pu < pattern.n; ++pu) {
            int hu = assigned[pu];
            if (hu < 0) continue;
            if (pat_adj[pv][pu] != (host_edge(host, hv, hu) ? 1 : 0)) return false;
        }
        return true;
    }

    bool extend(std::size_t depth) {
        if (depth == order.size()) return true;
        int pv = order[depth];
        // When pv touches a placed vertex, only that vertex's host
        // neighborhood can host pv.
        int anchor = -1;
        for (int pu : pattern.adj[pv]) {
            if (assigned[pu] >= 0) {
                anchor = assigned[pu];
                break;
            }
        }
        if (anchor >= 0) {
            for (int hv : host.adj[anchor]) {
                if (used[hv] || !feasible(pv, hv)) continue;
                assigned[pv] = hv;
                used[hv] = 1;
                if (extend(depth + 1)) return true;
                assigned[pv] = -1;
                used[hv] = 0;
            }
        } else {
            for (int hv = 0; hv < host.n; ++hv) {
                if (used[hv] || !feasible(pv, hv)) continue;
                assigned[pv] = hv;
                used[hv] = 1;
                if (extend(depth + 1)) return true;
                assigned[pv] = -1;
                used[hv] = 0;
            }
        }
        return false;
    }
};

} // namespace

std::optional<Embedding> find_induced(const Graph& host, const Graph& pattern) {
    if (pattern.n > kMaxPatternSize) {
        throw too_large_error("pattern exceeds " + std::to_string(kMaxPatternSize) + " vertices");
    }
    if (pattern.n == 0) return Embedding{};
    if (pattern.n > host.n) return std::nullopt;

    Searcher s(host, pattern);
    if (!s.extend(0)) return std::nullopt;
    Embedding e;
    e.map = s.assigned;
    return e;
}

bool contains_induced(const Graph& host, const Graph& pattern) {
    return find_induced(host, pattern).has_value();
}

bool is_free_of_all(const Graph& host, const std::vector<std::string>& names) {
    return !find_forbidden(host, names).has_value();
}

std::optional<std::string> find_forbidden(const Graph& host,
                                          const std::vector<std::string>& names) {
    for (const auto& name : names) {
        if (contains_induced(host, named(name).graph)) return name;
    }
    return std::nullopt;
}

} // namespace wed
