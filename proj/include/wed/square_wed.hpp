#pragma once

#include "wed/chordal.hpp"
#include "wed/eds.hpp"
#include "wed/graph.hpp"
#include "wed/weights.hpp"

#include <optional>
#include <vector>

namespace wed {

// Same vertex set; uv is an edge iff 1 <= dist_G(u,v) <= 2.
Graph square(const Graph& g);

struct SquareResult {
    Graph square;
    bool square_chordal = false;
    std::optional<std::vector<int>> hole; // in G's ids, when not chordal
};

SquareResult square_chordality_report(const Graph& g);

// Selection weights for the independence reduction.  A vertex is selectable
// iff its weight is finite; combined(v) = M * |N_G[v]| - w(v) with
// M = 1 + sum of finite weights, so M exceeds any achievable weight sum and
// every selectable combined weight is >= 1.
struct BigMWeights {
    ExactWeight big_m;
    std::vector<int> candidates;       // selectable vertices, sorted
    std::vector<ExactWeight> combined; // parallel to candidates
};

BigMWeights big_m_weights(const Graph& g, const WeightMap& w);

enum class SquareStatus { solved, no_eds, inapplicable };

// inapplicable means the candidate-restricted square was not chordal, so
// this engine cannot decide the instance either way.
struct SquareOutcome {
    SquareStatus status = SquareStatus::inapplicable;
    std::optional<EdsSolution> solution;          // status == solved
    bool square_chordal = false;                  // of G²[candidates]
    std::optional<std::vector<int>> square_hole;  // in G's ids
};

// Minimum-weight efficient dominating set through independence on the
// square: a set with pairwise-disjoint closed neighborhoods covers all n
// vertices iff it dominates efficiently, and the big-M weights make MWIS
// prefer maximum coverage first, minimum weight second.  The optimum
// reaches M*n - (M-1) exactly when an e.d.s. of finite weight exists, and
// then equals M*n - (minimum e.d.s. weight).
// Throws not_chordal_error when G itself is not chordal.
SquareOutcome wed_via_square(const Graph& g, const WeightMap& w);

} // namespace wed
