#include "wed/graph.hpp"

#include "wed/errors.hpp"

#include <algorithm>
#include <queue>

namespace wed {

bool Graph::has_edge(int u, int v) const {
    if (u == v) return false;
    const auto& a = adj[u].size() <= adj[v].size() ? adj[u] : adj[v];
    int other = adj[u].size() <= adj[v].size() ? v : u;
    return std::binary_search(a.begin(), a.end(), other);
}

std::size_t Graph::edge_count() const {
    std::size_t d = 0;
    for (const auto& a : adj) d += a.size();
    return d / 2;
}

Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw invalid_input("vertex count must be nonnegative");
    Graph g;
    g.n = n;
    g.adj.assign(n, {});
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw invalid_input("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                ") out of range for n=" + std::to_string(n));
        if (u == v)
            throw invalid_input("self loop at vertex " + std::to_string(u));
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (auto& a : g.adj) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
    }
    return g;
}

std::vector<int> closed_neighborhood(const Graph& g, int v) {
    std::vector<int> r = g.adj[v];
    r.insert(std::lower_bound(r.begin(), r.end(), v), v);
    return r;
}

std::vector<std::vector<int>> components(const Graph& g) {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(g.n, 0);
    for (int s = 0; s < g.n; ++s) {
        if (seen[s]) continue;
        std::vector<int> comp;
        std::queue<int> q;
        q.push(s);
        seen[s] = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            comp.push_back(u);
            for (int w : g.adj[u])
                if (!seen[w]) {
                    seen[w] = 1;
                    q.push(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out; // seeds scanned in id order, so components sort by minimum
}

LevelStructure bfs_levels(const Graph& g, int root) {
    if (root < 0 || root >= g.n) throw invalid_input("bfs root out of range");
    LevelStructure ls;
    ls.root = root;
    ls.level_of.assign(g.n, -1);
    ls.level_of[root] = 0;
    std::vector<int> cur = {root};
    while (!cur.empty()) {
        ls.levels.push_back(cur);
        std::vector<int> next;
        for (int u : cur)
            for (int w : g.adj[u])
                if (ls.level_of[w] < 0) {
                    ls.level_of[w] = static_cast<int>(ls.levels.size());
                    next.push_back(w);
                }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        cur = std::move(next);
    }
    return ls;
}

Graph complement(const Graph& g) {
    Graph c;
    c.n = g.n;
    c.labels = g.labels;
    c.adj.assign(g.n, {});
    for (int u = 0; u < g.n; ++u) {
        std::size_t k = 0;
        for (int v = 0; v < g.n; ++v) {
            while (k < g.adj[u].size() && g.adj[u][k] < v) ++k;
            bool edge = k < g.adj[u].size() && g.adj[u][k] == v;
            if (!edge && v != u) c.adj[u].push_back(v);
        }
    }
    return c;
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    std::vector<int> pos(g.n, -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        int v = vertices[i];
        if (v < 0 || v >= g.n) throw invalid_input("induced_subgraph: vertex out of range");
        if (i > 0 && vertices[i - 1] >= v)
            throw invalid_input("induced_subgraph: vertices must be sorted and distinct");
        pos[v] = static_cast<int>(i);
    }
    InducedSubgraph s;
    s.to_original = vertices;
    s.graph.n = static_cast<int>(vertices.size());
    s.graph.adj.assign(s.graph.n, {});
    if (!g.labels.empty()) {
        s.graph.labels.reserve(vertices.size());
        for (int v : vertices) s.graph.labels.push_back(g.labels[v]);
    }
    for (int v : vertices)
        for (int w : g.adj[v])
            if (pos[w] >= 0) s.graph.adj[pos[v]].push_back(pos[w]);
    return s; // source lists sorted, so new lists stay sorted
}

} // namespace wed
