#include "wed/eds.hpp"

#include "wed/errors.hpp"

#include <algorithm>

namespace wed {

bool is_eds(const Graph& g, const std::vector<int>& d) {
    std::vector<int> hits(g.n, 0);
    std::vector<char> in_d(g.n, 0);
    for (int v : d) {
        if (v < 0 || v >= g.n) throw invalid_input("vertex out of range");
        if (in_d[v]) throw invalid_input("duplicate vertex in candidate set");
        in_d[v] = 1;
        hits[v] += 1;
        for (int u : g.adj[v]) hits[u] += 1;
    }
    for (int v = 0; v < g.n; ++v) {
        if (hits[v] != 1) return false;
    }
    return true;
}

namespace {

constexpr int kBruteForceCap = 24;

struct BruteState {
    const Graph& g;
    const WeightMap& w;
    std::vector<int> hits;      // |D ∩ N[v]| so far
    std::vector<char> banned;   // decided out on this branch
    std::vector<int> current;
    ExactWeight current_weight = 0;
    std::optional<EdsSolution> best;
    bool prune_on_weight = true;

    explicit BruteState(const Graph& gr, const WeightMap& wm) : g(gr), w(wm) {
        hits.assign(g.n, 0);
        banned.assign(g.n, 0);
        for (int v = 0; v < g.n; ++v) {
            if (!w.is_inf(v) && w.at(v) < 0) prune_on_weight = false;
        }
    }

    bool better_than_best(const ExactWeight& wt, const std::vector<int>& set) const {
        if (!best) return true;
        if (wt != best->weight) return wt < best->weight;
        return set < best->set;
    }

    bool can_add(int d) const {
        if (banned[d] || w.is_inf(d)) return false;
        if (hits[d] != 0) return false;
        for (int u : g.adj[d]) {
            if (hits[u] != 0) return false;
        }
        return true;
    }

    void add(int d) {
        hits[d] += 1;
        for (int u : g.adj[d]) hits[u] += 1;
        current.push_back(d);
        current_weight += w.at(d);
    }

    void remove(int d) {
        hits[d] -= 1;
        for (int u : g.adj[d]) hits[u] -= 1;
        current.pop_back();
        current_weight -= w.at(d);
    }

    void search() {
        // With nonnegative weights a strictly heavier partial set cannot
        // recover; equal weight still may win the lexicographic tie.
        if (prune_on_weight && best && current_weight > best->weight) return;
        int v = -1;
        for (int u = 0; u < g.n; ++u) {
            if (hits[u] == 0) {
                v = u;
                break;
            }
        }
        if (v < 0) {
            std::vector<int> sorted_set(current);
            std::sort(sorted_set.begin(), sorted_set.end());
            if (better_than_best(current_weight, sorted_set)) {
                best = EdsSolution{std::move(sorted_set), current_weight};
            }
            return;
        }
        // Exactly one member of N[v] joins D.  Trying candidates in id
        // order while banning earlier ones visits each choice once.
        std::vector<int> candidates = closed_neighborhood(g, v);
        std::vector<int> newly_banned;
        for (int d : candidates) {
            if (!can_add(d)) continue;
            add(d);
            search();
            remove(d);
            banned[d] = 1;
            newly_banned.push_back(d);
        }
        for (int d : newly_banned) banned[d] = 0;
    }
};

} // namespace

std::optional<EdsSolution> brute_force_wed(const Graph& g, const WeightMap& w) {
    if (g.n > kBruteForceCap) {
        throw too_large_error("exhaustive search capped at " +
                              std::to_string(kBruteForceCap) + " vertices");
    }
    if (static_cast<int>(w.size()) != g.n) throw invalid_input("weight map size mismatch");
    if (g.n == 0) return EdsSolution{{}, 0};
    BruteState st(g, w);
    st.search();
    return st.best;
}

namespace {

constexpr int kX3cCap = 20;

bool x3c_extend(const X3cInstance& inst, std::vector<char>& covered,
                std::vector<int>& picked, int covered_count) {
    if (covered_count == inst.n) return true;
    int e = 0;
    while (covered[e]) ++e;
    for (int t = 0; t < static_cast<int>(inst.triples.size()); ++t) {
        const auto& tri = inst.triples[t];
        if (tri[0] != e && tri[1] != e && tri[2] != e) continue;
        if (covered[tri[0]] || covered[tri[1]] || covered[tri[2]]) continue;
        covered[tri[0]] = covered[tri[1]] = covered[tri[2]] = 1;
        picked.push_back(t);
        if (x3c_extend(inst, covered, picked, covered_count + 3)) return true;
        picked.pop_back();
        covered[tri[0]] = covered[tri[1]] = covered[tri[2]] = 0;
    }
    return false;
}

} // namespace

std::optional<std::vector<int>> x3c_solve(const X3cInstance& inst) {
    if (static_cast<int>(inst.triples.size()) > kX3cCap) {
        throw too_large_error("cover search capped at " + std::to_string(kX3cCap) + " triples");
    }
    if (inst.n == 0) return std::vector<int>{};
    std::vector<char> covered(inst.n, 0);
    std::vector<int> picked;
    if (x3c_extend(inst, covered, picked, 0)) {
        std::sort(picked.begin(), picked.end());
        return picked;
    }
    return std::nullopt;
}

} // namespace wed
