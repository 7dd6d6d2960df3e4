#include "wed/chordal.hpp"

#include "wed/errors.hpp"

#include <algorithm>
#include <cassert>
#include <list>
#include <queue>

namespace wed {

namespace {

bool adj_contains(const Graph& g, int u, int v) {
    const auto& lst = g.adj[u];
    return std::binary_search(lst.begin(), lst.end(), v);
}

} // namespace

EliminationOrder lex_bfs(const Graph& g) {
    const int n = g.n;
    EliminationOrder out;
    out.order.assign(n, -1);
    out.position.assign(n, -1);
    if (n == 0) return out;

    // Partition refinement.  Each class keeps its members sorted so the
    // lowest unvisited id is always at the front of the first class.
    std::list<std::vector<int>> classes;
    {
        std::vector<int> all(n);
        for (int v = 0; v < n; ++v) all[v] = v;
        classes.push_back(std::move(all));
    }
    std::vector<std::list<std::vector<int>>::iterator> class_of(n, classes.begin());
    std::vector<char> visited(n, 0);

    std::vector<int> visit;
    visit.reserve(n);

    for (int step = 0; step < n; ++step) {
        while (!classes.empty() && classes.front().empty()) classes.pop_front();
        assert(!classes.empty());
        auto& front = classes.front();
        int v = front.front();
        front.erase(front.begin());
        visited[v] = 1;
        visit.push_back(v);

        // Split every class touched by N(v): neighbors move to a fresh class
        // placed immediately before the old one.
        std::vector<std::list<std::vector<int>>::iterator> touched;
        for (int u : g.adj[v]) {
            if (visited[u]) continue;
            auto cls = class_of[u];
            // Tag the class by temporarily collecting movers per class.
            touched.push_back(cls);
        }
        std::sort(touched.begin(), touched.end(),
                  [](const auto& a, const auto& b) { return &*a < &*b; });
        touched.erase(std::unique(touched.begin(), touched.end(),
                                  [](const auto& a, const auto& b) { return &*a == &*b; }),
                      touched.end());
        for (auto cls : touched) {
            std::vector<int> movers;
            std::vector<int> stay;
            for (int u : *cls) {
                if (!visited[u] && adj_contains(g, v, u)) movers.push_back(u);
                else stay.push_back(u);
            }
            if (movers.empty() || stay.empty()) continue;
            *cls = std::move(stay);
            auto fresh = classes.insert(cls, std::move(movers));
            for (int u : *fresh) class_of[u] = fresh;
        }
    }

    // Reverse of the visit order is the candidate perfect elimination order.
    for (int i = 0; i < n; ++i) {
        int v = visit[n - 1 - i];
        out.order[i] = v;
        out.position[v] = i;
    }
    return out;
}

bool is_peo(const Graph& g, const EliminationOrder& order) {
    const int n = g.n;
    if (static_cast<int>(order.order.size()) != n) throw invalid_input("order size mismatch");
    // Standard check: for each v let p(v) be its earliest-eliminated later
    // neighbor; all other later neighbors of v must also neighbor p(v).
    std::vector<std::vector<int>> demand(n); // demand[p] = vertices that must be adjacent to p
    for (int i = 0; i < n; ++i) {
        int v = order.order[i];
        int parent = -1;
        int parent_pos = n;
        for (int u : g.adj[v]) {
            int pu = order.position[u];
            if (pu > i && pu < parent_pos) {
                parent_pos = pu;
                parent = u;
            }
        }
        if (parent < 0) continue;
        for (int u : g.adj[v]) {
            int pu = order.position[u];
            if (pu > i && u != parent) demand[parent].push_back(u);
        }
    }
    for (int p = 0; p < n; ++p) {
        for (int u : demand[p]) {
            if (!adj_contains(g, p, u)) return false;
        }
    }
    return true;
}

namespace {

// Certifying variant of the parent check: returns a triple (v, a, b) with
// a, b later neighbors of v that are non-adjacent, if the order fails.
struct FailingTriple {
    int v = -1, a = -1, b = -1;
};

std::optional<FailingTriple> peo_failure(const Graph& g, const EliminationOrder& order) {
    const int n = g.n;
    for (int i = 0; i < n; ++i) {
        int v = order.order[i];
        int parent = -1;
        int parent_pos = n;
        for (int u : g.adj[v]) {
            int pu = order.position[u];
            if (pu > i && pu < parent_pos) {
                parent_pos = pu;
                parent = u;
            }
        }
        if (parent < 0) continue;
        for (int u : g.adj[v]) {
            int pu = order.position[u];
            if (pu > i && u != parent && !adj_contains(g, parent, u)) {
                return FailingTriple{v, parent, u};
            }
        }
    }
    return std::nullopt;
}

// Given v with non-adjacent neighbors a, b, look for an induced cycle through
// v: a shortest a-b path in G - N[v] + {a, b} closes into one.  Returns
// nullopt when a and b fall in different components there.
std::optional<std::vector<int>> hole_through(const Graph& g, int v, int a, int b) {
    const int n = g.n;
    std::vector<char> allowed(n, 1);
    allowed[v] = 0;
    for (int u : g.adj[v]) allowed[u] = 0;
    allowed[a] = allowed[b] = 1;

    std::vector<int> prev(n, -1);
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    q.push(a);
    seen[a] = 1;
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        if (x == b) break;
        for (int y : g.adj[x]) {
            if (!allowed[y] || seen[y]) continue;
            seen[y] = 1;
            prev[y] = x;
            q.push(y);
        }
    }
    if (!seen[b]) return std::nullopt;

    std::vector<int> path; // b back to a
    for (int x = b; x != -1; x = prev[x]) path.push_back(x);
    std::reverse(path.begin(), path.end()); // a .. b
    path.push_back(v);                      // cycle a .. b v

    // A shortest path avoiding N[v] gives an induced path, but chords from
    // earlier sections can survive when the path revisits a's neighborhood;
    // shrink across any chord to keep the cycle induced.
    bool changed = true;
    while (changed) {
        changed = false;
        int m = static_cast<int>(path.size());
        for (int i = 0; i < m && !changed; ++i) {
            for (int j = i + 2; j < m; ++j) {
                if (i == 0 && j == m - 1) continue; // the closing edge
                if (adj_contains(g, path[i], path[j])) {
                    // Keep path[0..i] + path[j..], dropping the middle.
                    std::vector<int> shrunk(path.begin(), path.begin() + i + 1);
                    shrunk.insert(shrunk.end(), path.begin() + j, path.end());
                    path = std::move(shrunk);
                    changed = true;
                    break;
                }
            }
        }
    }
    if (path.size() < 4) return std::nullopt;
    return path;
}

bool cycle_is_hole(const Graph& g, const std::vector<int>& cyc) {
    int m = static_cast<int>(cyc.size());
    if (m < 4) return false;
    std::vector<int> sorted_cyc(cyc);
    std::sort(sorted_cyc.begin(), sorted_cyc.end());
    if (std::adjacent_find(sorted_cyc.begin(), sorted_cyc.end()) != sorted_cyc.end()) return false;
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            bool consecutive = (j == i + 1) || (i == 0 && j == m - 1);
            if (adj_contains(g, cyc[i], cyc[j]) != consecutive) return false;
        }
    }
    return true;
}

} // namespace

std::optional<std::vector<int>> find_hole(const Graph& g) {
    auto order = lex_bfs(g);
    auto fail = peo_failure(g, order);
    if (!fail) return std::nullopt;

    // First try the failing triple directly.
    if (auto h = hole_through(g, fail->v, fail->a, fail->b)) {
        if (cycle_is_hole(g, *h)) return h;
    }
    // Fall back to scanning all (v; a, b) with a, b non-adjacent neighbors
    // of v.  A non-chordal graph always yields a hole this way: take any
    // hole, any of its vertices as v and its two cycle neighbors as a, b.
    for (int v = 0; v < g.n; ++v) {
        const auto& nb = g.adj[v];
        for (std::size_t i = 0; i < nb.size(); ++i) {
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                int a = nb[i], b = nb[j];
                if (adj_contains(g, a, b)) continue;
                if (auto h = hole_through(g, v, a, b)) {
                    if (cycle_is_hole(g, *h)) return h;
                }
            }
        }
    }
    throw internal_error("peo check failed but no hole found");
}

ChordalityResult is_chordal(const Graph& g, bool want_certificate) {
    ChordalityResult res;
    res.order = lex_bfs(g);
    res.chordal = is_peo(g, res.order);
    if (!res.chordal && want_certificate) {
        res.hole = find_hole(g);
        if (!res.hole) throw internal_error("non-chordal graph without a hole");
    }
    return res;
}

MwisResult mwis_chordal(const Graph& g, const std::vector<ExactWeight>& weights) {
    const int n = g.n;
    if (static_cast<int>(weights.size()) != n) throw invalid_input("weight vector size mismatch");
    auto order = lex_bfs(g);
    if (!is_peo(g, order)) throw not_chordal_error("mwis requires a chordal graph");

    std::vector<ExactWeight> residual(weights);
    std::vector<char> candidate(n, 0);
    for (int i = 0; i < n; ++i) {
        int v = order.order[i];
        if (residual[v] <= 0) continue;
        candidate[v] = 1;
        for (int u : g.adj[v]) {
            if (order.position[u] > i) residual[u] -= residual[v];
        }
    }

    // Later candidates are picked first; a candidate enters unless it
    // conflicts with an already chosen vertex.
    std::vector<char> chosen(n, 0);
    std::vector<char> blocked(n, 0);
    for (int i = n - 1; i >= 0; --i) {
        int v = order.order[i];
        if (!candidate[v] || blocked[v]) continue;
        chosen[v] = 1;
        for (int u : g.adj[v]) blocked[u] = 1;
    }

    MwisResult res;
    res.weight = 0;
    for (int v = 0; v < n; ++v) {
        if (chosen[v]) {
            res.set.push_back(v);
            res.weight += weights[v];
        }
    }
    return res;
}

} // namespace wed
