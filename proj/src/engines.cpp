#include "wed/engines.hpp"

#include "wed/catalog.hpp"
#include "wed/chordal.hpp"
#include "wed/errors.hpp"
#include "wed/s123_wed.hpp"
#include "wed/square_wed.hpp"
#include "wed/subgraph.hpp"

namespace wed {

namespace {

EngineOutcome from_optional(const char* engine, std::optional<EdsSolution> sol) {
    EngineOutcome out;
    out.engine = engine;
    if (sol) {
        out.status = "solved";
        out.solution = std::move(sol);
    } else {
        out.status = "no-eds";
    }
    return out;
}

constexpr int kBruteLimit = 24;

} // namespace

EngineOutcome run_brute(const Graph& g, const WeightMap& w) {
    return from_optional("brute", brute_force_wed(g, w));
}

EngineOutcome run_square(const Graph& g, const WeightMap& w) {
    SquareOutcome sq = wed_via_square(g, w);
    EngineOutcome out;
    out.engine = "square";
    switch (sq.status) {
        case SquareStatus::solved:
            out.status = "solved";
            out.solution = std::move(sq.solution);
            break;
        case SquareStatus::no_eds:
            out.status = "no-eds";
            break;
        case SquareStatus::inapplicable:
            out.status = "inapplicable";
            out.detail = "restricted square is not chordal";
            break;
    }
    return out;
}

EngineOutcome run_s123(const Graph& g, const WeightMap& w) {
    return from_optional("s123", s123_wed(g, w));
}

EngineOutcome run_auto(const Graph& g, const WeightMap& w) {
    bool chordal = is_chordal(g, false).chordal;
    if (chordal) {
        EngineOutcome sq = run_square(g, w);
        if (sq.status != "inapplicable") return sq;

        // The direct engine always returns a genuine e.d.s. or none, but its
        // minimality is only guaranteed when no induced S(1,2,3) is present.
        // Outside that class neither of its verdicts settles the instance.
        if (!contains_induced(g, spider(1, 2, 3))) {
            EngineOutcome direct = run_s123(g, w);
            direct.detail = "square engine inapplicable";
            return direct;
        }
    }
    if (g.n <= kBruteLimit) {
        EngineOutcome out = run_brute(g, w);
        out.detail = chordal ? "polynomial engines could not decide" : "input is not chordal";
        return out;
    }
    EngineOutcome out;
    out.engine = "auto";
    out.status = "error";
    out.detail = chordal ? "no engine could decide this instance"
                         : "input is not chordal and too large for exhaustive search";
    return out;
}

const EngineTable& default_engines() {
    static const EngineTable table = {
        {"auto", run_auto},
        {"brute", run_brute},
        {"square", run_square},
        {"s123", run_s123},
    };
    return table;
}

EngineOutcome run_engine(const EngineTable& table, const std::string& name,
                         const Graph& g, const WeightMap& w) {
    auto it = table.find(name);
    if (it == table.end()) {
        EngineOutcome out;
        out.engine = name;
        out.status = "error";
        out.detail = "unknown engine '" + name + "'";
        return out;
    }
    try {
        return it->second(g, w);
    } catch (const std::exception& e) {
        EngineOutcome out;
        out.engine = name;
        out.status = "error";
        out.detail = e.what();
        return out;
    }
}

} // namespace wed
