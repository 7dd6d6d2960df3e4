#pragma once

#include "wed/eds.hpp"
#include "wed/graph.hpp"
#include "wed/weights.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>

namespace wed {

// status: solved | no-eds | inapplicable | error.
// engine: which engine actually answered ("auto" delegates).
// detail: human-readable note (error text, fallback reason); never parsed.
struct EngineOutcome {
    std::string status;
    std::string engine;
    std::string detail;
    std::optional<EdsSolution> solution;
};

EngineOutcome run_brute(const Graph& g, const WeightMap& w);
EngineOutcome run_square(const Graph& g, const WeightMap& w);
EngineOutcome run_s123(const Graph& g, const WeightMap& w);

// square first; if it cannot decide, the direct engine, trusted only when
// the graph has no induced S(1,2,3); exhaustive search last, size
// permitting.  Never turns "inapplicable" into "no-eds".
EngineOutcome run_auto(const Graph& g, const WeightMap& w);

using EngineFn = std::function<EngineOutcome(const Graph&, const WeightMap&)>;
using EngineTable = std::map<std::string, EngineFn>;

// auto, brute, square, s123.
const EngineTable& default_engines();

// Dispatch through `table`; exceptions become status=error outcomes.
EngineOutcome run_engine(const EngineTable& table, const std::string& name,
                         const Graph& g, const WeightMap& w);

} // namespace wed
