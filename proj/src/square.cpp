#include "wed/square_wed.hpp"

#include "wed/errors.hpp"

#include <algorithm>

namespace wed {

Graph square(const Graph& g) {
    Graph sq;
    sq.n = g.n;
    sq.adj.assign(g.n, {});
    sq.labels = g.labels;
    std::vector<char> mark(g.n, 0);
    for (int v = 0; v < g.n; ++v) {
        std::vector<int> reach;
        for (int u : g.adj[v]) {
            if (!mark[u]) {
                mark[u] = 1;
                reach.push_back(u);
            }
            for (int t : g.adj[u]) {
                if (t != v && !mark[t]) {
                    mark[t] = 1;
                    reach.push_back(t);
                }
            }
        }
        std::sort(reach.begin(), reach.end());
        sq.adj[v] = reach;
        for (int u : reach) mark[u] = 0;
    }
    return sq;
}

SquareResult square_chordality_report(const Graph& g) {
    SquareResult res{square(g), false, std::nullopt};
    auto ch = is_chordal(res.square, true);
    res.square_chordal = ch.chordal;
    res.hole = ch.hole;
    return res;
}

BigMWeights big_m_weights(const Graph& g, const WeightMap& w) {
    if (static_cast<int>(w.size()) != g.n) throw invalid_input("weight map size mismatch");
    BigMWeights out;
    out.big_m = 1 + w.sum_finite();
    for (int v = 0; v < g.n; ++v) {
        if (w.is_inf(v)) continue;
        out.candidates.push_back(v);
        // |N[v]| counts every vertex of G: covering an infinite-weight
        // vertex is still coverage.
        ExactWeight cover = out.big_m * (g.degree(v) + 1);
        out.combined.push_back(cover - w.at(v));
    }
    return out;
}

SquareOutcome wed_via_square(const Graph& g, const WeightMap& w) {
    if (!is_chordal(g, false).chordal) {
        throw not_chordal_error("square engine requires a chordal input graph");
    }

    BigMWeights bm = big_m_weights(g, w);
    Graph sq = square(g);
    InducedSubgraph cand = induced_subgraph(sq, bm.candidates);

    SquareOutcome out;
    auto ch = is_chordal(cand.graph, true);
    out.square_chordal = ch.chordal;
    if (!ch.chordal) {
        out.status = SquareStatus::inapplicable;
        if (ch.hole) {
            std::vector<int> hole;
            for (int u : *ch.hole) hole.push_back(cand.to_original[u]);
            out.square_hole = hole;
        }
        return out;
    }

    MwisResult mw = mwis_chordal(cand.graph, bm.combined);
    ExactWeight n_total = g.n;
    ExactWeight threshold = bm.big_m * n_total - (bm.big_m - 1);
    if (mw.weight < threshold) {
        out.status = SquareStatus::no_eds;
        return out;
    }

    EdsSolution sol;
    for (int u : mw.set) sol.set.push_back(cand.to_original[u]);
    std::sort(sol.set.begin(), sol.set.end());
    sol.weight = bm.big_m * n_total - mw.weight;
    ExactWeight direct = 0;
    for (int v : sol.set) direct += w.at(v);
    if (direct != sol.weight || !is_eds(g, sol.set)) {
        throw internal_error("square engine produced an inconsistent solution");
    }
    out.status = SquareStatus::solved;
    out.solution = std::move(sol);
    return out;
}

} // namespace wed
