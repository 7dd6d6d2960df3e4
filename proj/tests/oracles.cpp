#include "oracles.hpp"

#include "wed/errors.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace wed::oracle {

namespace {

std::vector<std::uint32_t> closed_masks(const Graph& g) {
    std::vector<std::uint32_t> nb(g.n);
    for (int v = 0; v < g.n; ++v) {
        std::uint32_t m = 1u << v;
        for (int u : g.adj[v]) m |= 1u << u;
        nb[v] = m;
    }
    return nb;
}

std::vector<int> mask_vertices(std::uint32_t mask) {
    std::vector<int> out;
    for (int v = 0; mask; ++v, mask >>= 1) {
        if (mask & 1u) out.push_back(v);
    }
    return out;
}

} // namespace

std::optional<std::pair<std::vector<int>, ExactWeight>>
min_eds_by_enumeration(const Graph& g, const WeightMap& w) {
    if (g.n > 20) throw too_large_error("enumeration oracle capped at 20 vertices");
    auto nb = closed_masks(g);
    std::uint32_t inf_mask = 0;
    for (int v = 0; v < g.n; ++v) {
        if (w.is_inf(v)) inf_mask |= 1u << v;
    }
    std::optional<std::pair<std::vector<int>, ExactWeight>> best;
    const std::uint32_t end = 1u << g.n;
    for (std::uint32_t mask = 0; mask < end; ++mask) {
        if (mask & inf_mask) continue;
        bool good = true;
        for (int v = 0; v < g.n; ++v) {
            if (std::popcount(mask & nb[v]) != 1) {
                good = false;
                break;
            }
        }
        if (!good) continue;
        std::vector<int> set = mask_vertices(mask);
        ExactWeight wt = 0;
        for (int v : set) wt += w.at(v);
        if (!best || wt < best->second || (wt == best->second && set < best->first)) {
            best = {std::move(set), std::move(wt)};
        }
    }
    return best;
}

std::pair<std::vector<int>, long long>
mwis_by_enumeration(const Graph& g, const std::vector<long long>& weights) {
    if (g.n > 20) throw too_large_error("enumeration oracle capped at 20 vertices");
    if (static_cast<int>(weights.size()) != g.n) throw invalid_input("weight size mismatch");
    std::vector<std::uint32_t> open(g.n, 0);
    for (int v = 0; v < g.n; ++v) {
        for (int u : g.adj[v]) open[v] |= 1u << u;
    }
    std::pair<std::vector<int>, long long> best{{}, 0};
    const std::uint32_t total = 1u << g.n;
    for (std::uint32_t mask = 1; mask < total; ++mask) {
        bool independent = true;
        long long wt = 0;
        std::uint32_t rest = mask;
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            if (open[v] & mask) {
                independent = false;
                break;
            }
            wt += weights[v];
        }
        if (!independent) continue;
        if (wt > best.second) best = {mask_vertices(mask), wt};
    }
    return best;
}

namespace {

bool assignment_works(const Graph& host, const Graph& pattern,
                      const std::vector<int>& chosen, const std::vector<int>& perm) {
    for (int i = 0; i < pattern.n; ++i) {
        for (int j = i + 1; j < pattern.n; ++j) {
            bool pe = host.has_edge(chosen[perm[i]], chosen[perm[j]]);
            bool qe = pattern.has_edge(i, j);
            if (pe != qe) return false;
        }
    }
    return true;
}

} // namespace

bool contains_induced_by_enumeration(const Graph& host, const Graph& pattern) {
    if (host.n > 14 || pattern.n > 6) throw too_large_error("containment oracle guard");
    if (pattern.n > host.n) return false;
    if (pattern.n == 0) return true;
    std::vector<int> idx(pattern.n);
    const std::uint32_t total = 1u << host.n;
    for (std::uint32_t mask = 0; mask < total; ++mask) {
        if (std::popcount(mask) != pattern.n) continue;
        std::vector<int> chosen = mask_vertices(mask);
        std::vector<int> perm(pattern.n);
        for (int i = 0; i < pattern.n; ++i) perm[i] = i;
        do {
            if (assignment_works(host, pattern, chosen, perm)) return true;
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return false;
}

bool isomorphic_by_enumeration(const Graph& a, const Graph& b) {
    if (a.n > 8 || b.n > 8) throw too_large_error("isomorphism oracle capped at 8 vertices");
    if (a.n != b.n || a.edge_count() != b.edge_count()) return false;
    std::vector<int> perm(a.n);
    for (int i = 0; i < a.n; ++i) perm[i] = i;
    do {
        bool match = true;
        for (int u = 0; u < a.n && match; ++u) {
            for (int v = u + 1; v < a.n; ++v) {
                if (a.has_edge(u, v) != b.has_edge(perm[u], perm[v])) {
                    match = false;
                    break;
                }
            }
        }
        if (match) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

bool has_hole_by_enumeration(const Graph& g) {
    if (g.n > 12) throw too_large_error("hole oracle capped at 12 vertices");
    const std::uint32_t total = 1u << g.n;
    for (std::uint32_t mask = 0; mask < total; ++mask) {
        if (std::popcount(mask) < 4) continue;
        std::vector<int> verts = mask_vertices(mask);
        // Induced cycle: everyone sees exactly two others, and the subset is
        // connected (a disjoint union of cycles always has a 2-degree seam).
        bool two_regular = true;
        for (int v : verts) {
            int deg = 0;
            for (int u : g.adj[v]) {
                if (mask & (1u << u)) ++deg;
            }
            if (deg != 2) {
                two_regular = false;
                break;
            }
        }
        if (!two_regular) continue;
        std::uint32_t seen = 1u << verts[0];
        std::vector<int> stack{verts[0]};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : g.adj[v]) {
                if ((mask & (1u << u)) && !(seen & (1u << u))) {
                    seen |= 1u << u;
                    stack.push_back(u);
                }
            }
        }
        if (seen == mask) return true;
    }
    return false;
}

} // namespace wed::oracle
