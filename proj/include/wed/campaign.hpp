#pragma once

#include "wed/engines.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace wed {

// Small key = value format, one pair per line, # comments.
//   generator = interval | chordal | hfree   (required)
//   count     = instances to run             (required)
//   n         = vertices per instance        (required)
//   seed      = base seed; instance i uses seed + i        (default 1)
//   engines   = comma list, e.g. square,brute              (default auto)
//   compare   = true/false, check engine agreement         (default true)
//   density   = interval length scale in [0,1]             (default 0.5)
//   bias      = chordal edge bias in [0,1]                 (default 0.5)
//   free      = comma list of catalog names for hfree      (default empty)
//   max_tries = rejection cap per hfree instance           (default 200)
//   wmin,wmax = random weight range, 1,1 = unit weights    (default 1,1)
struct CampaignSpec {
    std::string generator;
    int count = 0;
    int n = 0;
    std::uint64_t seed = 1;
    std::vector<std::string> engines{"auto"};
    bool compare = true;
    double density = 0.5;
    double bias = 0.5;
    std::vector<std::string> free_names;
    int max_tries = 200;
    int wmin = 1;
    int wmax = 1;
};

CampaignSpec parse_campaign_spec(const std::string& text, const std::string& origin);
CampaignSpec read_campaign_spec(const std::string& path);

struct CampaignResult {
    int instances = 0;
    int disagreements = 0; // definitive answers that conflict
    int errors = 0;        // engine errors + generator failures
    bool ok() const { return disagreements == 0 && errors == 0; }
};

// One CSV row per instance, serialized in instance order; engines run from
// `table` so tests can substitute broken ones.
CampaignResult run_campaign(const CampaignSpec& spec, std::ostream& csv,
                            const EngineTable& table);

} // namespace wed
