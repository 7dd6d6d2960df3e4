#include "wed/s123_wed.hpp"

#include "wed/chordal.hpp"
#include "wed/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace wed {

namespace {

bool adj_contains(const Graph& g, int u, int v) {
    const auto& lst = g.adj[u];
    return std::binary_search(lst.begin(), lst.end(), v);
}

std::vector<int> closed_sorted(const Graph& g, int v) {
    std::vector<int> nb(g.adj[v]);
    nb.insert(std::lower_bound(nb.begin(), nb.end(), v), v);
    return nb;
}

} // namespace

NeighborhoodPoset neighborhood_poset(const Graph& g) {
    const int n = g.n;
    NeighborhoodPoset p;
    p.below.assign(n, {});
    p.above.assign(n, {});
    p.maximal.assign(n, 1);
    std::vector<std::vector<int>> closed(n);
    for (int v = 0; v < n; ++v) closed[v] = closed_sorted(g, v);
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            if (u == v) continue;
            if (closed[u].size() >= closed[v].size()) continue;
            if (std::includes(closed[v].begin(), closed[v].end(),
                              closed[u].begin(), closed[u].end())) {
                p.below[v].push_back(u);
                p.above[u].push_back(v);
                p.maximal[u] = 0;
            }
        }
    }
    return p;
}

ComponentTree component_tree(const Graph& g, int v) {
    if (v < 0 || v >= g.n) throw invalid_input("root vertex out of range");
    ComponentTree t;
    t.root = v;
    LevelStructure ls = bfs_levels(g, v);
    t.level_of = ls.level_of;
    t.levels = ls.levels;
    while (!t.levels.empty() && t.levels.back().empty()) t.levels.pop_back();
    t.node_of.assign(g.n, -1);

    for (std::size_t i = 0; i < t.levels.size(); ++i) {
        InducedSubgraph layer = induced_subgraph(g, t.levels[i]);
        for (const auto& comp : components(layer.graph)) {
            TreeNode node;
            node.level = static_cast<int>(i);
            for (int u : comp) node.vertices.push_back(layer.to_original[u]);
            int idx = static_cast<int>(t.nodes.size());
            for (int u : node.vertices) t.node_of[u] = idx;
            t.nodes.push_back(std::move(node));
        }
    }

    // Parent uniqueness: all upward edges from one node land in one node.
    for (std::size_t idx = 0; idx < t.nodes.size(); ++idx) {
        TreeNode& node = t.nodes[idx];
        if (node.level == 0) continue;
        int parent = -1;
        for (int u : node.vertices) {
            for (int x : g.adj[u]) {
                if (t.level_of[x] != node.level - 1) continue;
                int px = t.node_of[x];
                if (parent == -1) {
                    parent = px;
                } else if (parent != px) {
                    throw not_chordal_error(
                        "layer component touches two components above it near vertices " +
                        std::to_string(u) + " and " + std::to_string(x));
                }
            }
        }
        if (parent == -1) throw internal_error("layer component with no upward edge");
        node.parent = parent;
        t.nodes[parent].children.push_back(static_cast<int>(idx));
    }

    // Each vertex's neighbors one layer up must be pairwise adjacent.
    for (int u = 0; u < g.n; ++u) {
        int lvl = t.level_of[u];
        if (lvl < 2) continue;
        std::vector<int> up;
        for (int x : g.adj[u]) {
            if (t.level_of[x] == lvl - 1) up.push_back(x);
        }
        for (std::size_t a = 0; a < up.size(); ++a) {
            for (std::size_t b = a + 1; b < up.size(); ++b) {
                if (!adj_contains(g, up[a], up[b])) {
                    throw not_chordal_error(
                        "vertices " + std::to_string(up[a]) + " and " + std::to_string(up[b]) +
                        " meet vertex " + std::to_string(u) + " from the layer above but are "
                        "not adjacent");
                }
            }
        }
    }
    return t;
}

namespace {

// Best candidate of `node` under a per-candidate predicate; (weight, vertex)
// lexicographic minimum.  Returns index into per_node[node], or -1.
template <typename Pred>
int best_candidate(const CandidateTable& table, int node, Pred&& pred) {
    const auto& list = table.per_node[node];
    int best = -1;
    for (int i = 0; i < static_cast<int>(list.size()); ++i) {
        if (!pred(list[i])) continue;
        if (best < 0 || list[i].weight < list[best].weight ||
            (list[i].weight == list[best].weight && list[i].vertex < list[best].vertex)) {
            best = i;
        }
    }
    return best;
}

} // namespace

CandidateTable compute_candidates(const Graph& g, const ComponentTree& tree,
                                  const WeightMap& w) {
    CandidateTable table;
    table.per_node.assign(tree.nodes.size(), {});

    for (int idx = static_cast<int>(tree.nodes.size()) - 1; idx >= 0; --idx) {
        const TreeNode& K = tree.nodes[idx];
        const int li = K.level;

        std::vector<int> next_layer; // vertices of K's child nodes
        std::vector<int> grand;      // node ids two layers down
        for (int c : K.children) {
            const TreeNode& child = tree.nodes[c];
            next_layer.insert(next_layer.end(), child.vertices.begin(), child.vertices.end());
            grand.insert(grand.end(), child.children.begin(), child.children.end());
        }
        std::sort(next_layer.begin(), next_layer.end());
        std::sort(grand.begin(), grand.end());

        for (int d : K.vertices) {
            if (w.is_inf(d)) continue;
            bool covers_node = true;
            for (int k : K.vertices) {
                if (k != d && !adj_contains(g, d, k)) {
                    covers_node = false;
                    break;
                }
            }
            if (!covers_node) continue;

            std::vector<int> covered; // next-layer vertices adjacent to d
            std::vector<int> missed;  // the rest; they need a layer-(i+2) cover
            for (int y : next_layer) (adj_contains(g, d, y) ? covered : missed).push_back(y);

            bool ok = true;
            // missed vertex -> its unique serving grandchild node
            std::map<int, std::vector<int>> served; // grandchild node -> missed vertices
            for (int x : missed) {
                int serving = -1;
                bool multiple = false;
                for (int u : g.adj[x]) {
                    if (tree.level_of[u] != li + 2) continue;
                    int nu = tree.node_of[u];
                    if (serving == -1) serving = nu;
                    else if (serving != nu) multiple = true;
                }
                if (serving == -1 || multiple) {
                    ok = false;
                    break;
                }
                served[serving].push_back(x);
            }
            if (!ok) continue;

            ExactWeight total = w.at(d);
            std::vector<std::pair<int, int>> choices;

            for (auto& [node_id, xs] : served) {
                const std::vector<int>& a_side = covered;
                int pick = best_candidate(table, node_id, [&](const Candidate& c) {
                    for (int x : xs) {
                        if (!adj_contains(g, c.vertex, x)) return false;
                    }
                    for (int a : a_side) {
                        if (adj_contains(g, c.vertex, a)) return false;
                    }
                    return true;
                });
                if (pick < 0) {
                    ok = false;
                    break;
                }
                total += table.per_node[node_id][pick].weight;
                choices.emplace_back(node_id, pick);
            }
            if (!ok) continue;

            // Untouched grandchild nodes get no vertex of their own; each of
            // their vertices must lean on exactly one child node below.
            for (int node_id : grand) {
                if (served.count(node_id)) continue;
                const TreeNode& C = tree.nodes[node_id];
                std::map<int, std::vector<int>> lean; // child node -> leaning vertices
                for (int z : C.vertices) {
                    int serving = -1;
                    bool multiple = false;
                    for (int u : g.adj[z]) {
                        if (tree.level_of[u] != li + 3) continue;
                        int nu = tree.node_of[u];
                        if (serving == -1) serving = nu;
                        else if (serving != nu) multiple = true;
                    }
                    if (serving == -1 || multiple) {
                        ok = false;
                        break;
                    }
                    lean[serving].push_back(z);
                }
                if (!ok) break;
                // Every child of C touches C, so every child must be chosen.
                if (lean.size() != C.children.size()) throw internal_error("unreached child node");
                for (auto& [child_id, zs] : lean) {
                    int pick = best_candidate(table, child_id, [&](const Candidate& c) {
                        for (int z : zs) {
                            if (!adj_contains(g, c.vertex, z)) return false;
                        }
                        return true;
                    });
                    if (pick < 0) {
                        ok = false;
                        break;
                    }
                    total += table.per_node[child_id][pick].weight;
                    choices.emplace_back(child_id, pick);
                }
                if (!ok) break;
            }
            if (!ok) continue;

            table.per_node[idx].push_back(Candidate{d, std::move(total), std::move(choices)});
        }
    }
    return table;
}

namespace {

std::vector<int> reconstruct(const CandidateTable& table, int node, int cand_index) {
    std::vector<int> out;
    std::vector<std::pair<int, int>> stack{{node, cand_index}};
    while (!stack.empty()) {
        auto [nd, ci] = stack.back();
        stack.pop_back();
        const Candidate& c = table.per_node[nd][ci];
        out.push_back(c.vertex);
        for (auto& ch : c.choices) stack.push_back(ch);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::optional<EdsSolution> v_maximal_wed(const Graph& g, const WeightMap& w, int v) {
    if (v < 0 || v >= g.n) throw invalid_input("vertex out of range");
    if (w.is_inf(v)) throw invalid_input("root vertex must have finite weight");
    NeighborhoodPoset poset = neighborhood_poset(g);
    if (!poset.maximal[v]) {
        throw not_maximal_error("vertex " + std::to_string(v) +
                                " has a closed neighborhood strictly inside another");
    }

    ComponentTree tree = component_tree(g, v);
    CandidateTable table = compute_candidates(g, tree, w);

    const auto& root_list = table.per_node[0];
    int found = -1;
    for (int i = 0; i < static_cast<int>(root_list.size()); ++i) {
        if (root_list[i].vertex == v) found = i;
    }
    if (found < 0) return std::nullopt;

    EdsSolution sol;
    sol.set = reconstruct(table, 0, found);
    sol.weight = root_list[found].weight;

    // The component the tree spans must be dominated exactly.
    std::vector<int> comp;
    for (int u = 0; u < g.n; ++u) {
        if (tree.level_of[u] >= 0) comp.push_back(u);
    }
    InducedSubgraph sub = induced_subgraph(g, comp);
    std::vector<int> pos(g.n, -1);
    for (int i = 0; i < static_cast<int>(comp.size()); ++i) pos[comp[i]] = i;
    std::vector<int> local;
    ExactWeight direct = 0;
    for (int u : sol.set) {
        local.push_back(pos[u]);
        direct += w.at(u);
    }
    if (direct != sol.weight || !is_eds(sub.graph, local)) {
        throw internal_error("candidate reconstruction failed verification");
    }
    return sol;
}

namespace {

struct WorkingInstance {
    Graph g;
    WeightMap w;
    std::vector<int> orig; // current id -> scope id
};

WorkingInstance without_vertex(const WorkingInstance& in, int v) {
    std::vector<int> keep;
    keep.reserve(in.g.n - 1);
    for (int u = 0; u < in.g.n; ++u) {
        if (u != v) keep.push_back(u);
    }
    InducedSubgraph sub = induced_subgraph(in.g, keep);
    WorkingInstance out;
    out.g = std::move(sub.graph);
    out.w = WeightMap::ones(static_cast<int>(keep.size()));
    out.orig.resize(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i) {
        int old = keep[i];
        out.orig[i] = in.orig[old];
        if (in.w.is_inf(old)) out.w.set_inf(static_cast<int>(i));
        else out.w.set(static_cast<int>(i), in.w.at(old));
    }
    return out;
}

WeightMap restrict_weights(const WeightMap& w, const std::vector<int>& vertices) {
    WeightMap out = WeightMap::ones(static_cast<int>(vertices.size()));
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (w.is_inf(vertices[i])) out.set_inf(static_cast<int>(i));
        else out.set(static_cast<int>(i), w.at(vertices[i]));
    }
    return out;
}

std::optional<EdsSolution> solve_any(const Graph& g, const WeightMap& w);

// g0 is connected.  Collects solution candidates (each a vertex set in g0's
// ids), then keeps the cheapest one that exactly dominates g0.
std::optional<EdsSolution> solve_connected(const Graph& g0, const WeightMap& w0) {
    std::vector<std::vector<int>> found;
    WorkingInstance cur;
    cur.g = g0;
    cur.w = w0;
    cur.orig.resize(g0.n);
    for (int i = 0; i < g0.n; ++i) cur.orig[i] = i;
    std::vector<char> processed(cur.g.n, 0);

    while (cur.g.n > 0) {
        NeighborhoodPoset poset = neighborhood_poset(cur.g);
        int v = -1;
        for (int u = 0; u < cur.g.n; ++u) {
            if (poset.maximal[u] && !processed[u]) {
                v = u;
                break;
            }
        }
        // All maximal vertices processed means no strict containment is
        // left, so every vertex is maximal and processed; nothing remains.
        if (v < 0) break;

        if (!cur.w.is_inf(v)) {
            if (auto sol = v_maximal_wed(cur.g, cur.w, v)) {
                std::vector<int> mapped;
                for (int u : sol->set) mapped.push_back(cur.orig[u]);
                std::sort(mapped.begin(), mapped.end());
                found.push_back(std::move(mapped));
            }
        }

        if (!poset.below[v].empty()) {
            // A solution avoiding v covers each x below v from inside N[x],
            // and that vertex covers v too; nothing else near v may enter.
            for (int x : poset.below[v]) {
                for (int u : cur.g.adj[v]) {
                    if (u != x && !adj_contains(cur.g, x, u)) cur.w.set_inf(u);
                }
            }
            cur = without_vertex(cur, v);
            processed.assign(cur.g.n, 0);
            if (components(cur.g).size() != 1) {
                if (auto sub = solve_any(cur.g, cur.w)) {
                    std::vector<int> mapped;
                    for (int u : sub->set) mapped.push_back(cur.orig[u]);
                    std::sort(mapped.begin(), mapped.end());
                    found.push_back(std::move(mapped));
                }
                break;
            }
        } else {
            processed[v] = 1;
        }
    }

    std::optional<EdsSolution> best;
    for (auto& set : found) {
        bool finite = true;
        ExactWeight wt = 0;
        for (int u : set) {
            if (w0.is_inf(u)) {
                finite = false;
                break;
            }
            wt += w0.at(u);
        }
        if (!finite || !is_eds(g0, set)) continue;
        if (!best || wt < best->weight || (wt == best->weight && set < best->set)) {
            best = EdsSolution{set, wt};
        }
    }
    return best;
}

std::optional<EdsSolution> solve_any(const Graph& g, const WeightMap& w) {
    auto comps = components(g);
    if (comps.size() == 1 && static_cast<int>(comps[0].size()) == g.n) {
        return solve_connected(g, w);
    }
    EdsSolution acc;
    acc.weight = 0;
    for (const auto& comp : comps) {
        InducedSubgraph sub = induced_subgraph(g, comp);
        auto part = solve_connected(sub.graph, restrict_weights(w, comp));
        if (!part) return std::nullopt;
        for (int u : part->set) acc.set.push_back(sub.to_original[u]);
        acc.weight += part->weight;
    }
    std::sort(acc.set.begin(), acc.set.end());
    return acc;
}

} // namespace

std::optional<EdsSolution> s123_wed(const Graph& g, const WeightMap& w) {
    if (static_cast<int>(w.size()) != g.n) throw invalid_input("weight map size mismatch");
    if (!is_chordal(g, false).chordal) {
        throw not_chordal_error("direct engine requires a chordal input graph");
    }
    return solve_any(g, w);
}

bool neighborhood_has_no_universal_vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.n) throw invalid_input("vertex out of range");
    for (int u : g.adj[v]) {
        bool has_nonneighbor = false;
        for (int z : g.adj[v]) {
            if (z != u && !adj_contains(g, u, z)) {
                has_nonneighbor = true;
                break;
            }
        }
        if (!has_nonneighbor) return false;
    }
    return true;
}

} // namespace wed
