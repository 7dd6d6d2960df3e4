#include "wed/campaign.hpp"
#include "wed/catalog.hpp"
#include "wed/engines.hpp"
#include "wed/errors.hpp"
#include "wed/generators.hpp"
#include "wed/graph.hpp"

#include <doctest.h>

#include <sstream>
#include <string>

using namespace wed;

namespace {

const Graph& four_sun() {
    static const Graph g = from_edge_list(
        8, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
            {4, 0}, {4, 1}, {5, 1}, {5, 2}, {6, 2}, {6, 3}, {7, 3}, {7, 0}});
    return g;
}

std::string spec_failure(const std::string& text) {
    try {
        parse_campaign_spec(text, "spec");
    } catch (const parse_error& e) {
        return e.what();
    }
    return "";
}

} // namespace

TEST_CASE("engine dispatch by name") {
    Graph p4 = named("P4").graph;
    WeightMap w = WeightMap::ones(4);

    EngineOutcome b = run_engine(default_engines(), "brute", p4, w);
    CHECK(b.status == "solved");
    CHECK(b.engine == "brute");
    CHECK(b.solution->weight == 2);

    EngineOutcome unknown = run_engine(default_engines(), "dlx", p4, w);
    CHECK(unknown.status == "error");
    CHECK(unknown.detail.find("unknown engine") != std::string::npos);

    // thrown engine errors surface as error outcomes, not exceptions
    Graph c4 = named("C4").graph;
    EngineOutcome sq = run_engine(default_engines(), "square", c4, WeightMap::ones(4));
    CHECK(sq.status == "error");
    CHECK(!sq.detail.empty());
    CHECK_THROWS_AS(run_square(c4, WeightMap::ones(4)), not_chordal_error);
}

TEST_CASE("the automatic engine reports who answered") {
    // plain chordal input: the square pipeline settles it
    EngineOutcome a = run_auto(named("P5").graph, WeightMap::ones(5));
    CHECK(a.status == "solved");
    CHECK(a.engine == "square");
    CHECK(a.solution->weight == 2);

    // chordal, square undecided, no spider obstruction: direct engine rules
    EngineOutcome sun = run_auto(four_sun(), WeightMap::ones(8));
    CHECK(sun.status == "no-eds");
    CHECK(sun.engine == "s123");
    CHECK(sun.detail.find("square engine inapplicable") != std::string::npos);

    // non-chordal but small: exhaustive fallback
    EngineOutcome c4 = run_auto(named("C4").graph, WeightMap::ones(4));
    CHECK(c4.status == "no-eds");
    CHECK(c4.engine == "brute");
    CHECK(c4.detail.find("not chordal") != std::string::npos);

    EngineOutcome c6 = run_auto(named("C6").graph, WeightMap::ones(6));
    CHECK(c6.status == "solved");
    CHECK(c6.engine == "brute");
    CHECK(c6.solution->weight == 2);
    CHECK(c6.solution->set == std::vector<int>{0, 3});

    // non-chordal and too big for the fallback
    EngineOutcome big = run_auto(named("C25").graph, WeightMap::ones(25));
    CHECK(big.status == "error");
    CHECK(big.detail.find("too large") != std::string::npos);
}

TEST_CASE("campaign spec parsing applies defaults and validates") {
    CampaignSpec spec = parse_campaign_spec(
        "# weekly sweep\n"
        "generator = interval\n"
        "count = 12\n"
        "n = 9\n"
        "seed = 77\n"
        "engines = square, brute\n"
        "density = 0.4\n"
        "wmin = 1\n"
        "wmax = 9\n",
        "spec");
    CHECK(spec.generator == "interval");
    CHECK(spec.count == 12);
    CHECK(spec.n == 9);
    CHECK(spec.seed == 77);
    CHECK(spec.engines == std::vector<std::string>{"square", "brute"});
    CHECK(spec.compare);           // default
    CHECK(spec.density == doctest::Approx(0.4));
    CHECK(spec.wmax == 9);
    CHECK(spec.max_tries == 200);  // default

    CampaignSpec defaults = parse_campaign_spec("generator=chordal\ncount=1\nn=4\n", "spec");
    CHECK(defaults.seed == 1);
    CHECK(defaults.engines == std::vector<std::string>{"auto"});
    CHECK(defaults.wmin == 1);
    CHECK(defaults.wmax == 1);

    CHECK(spec_failure("count = 1\nn = 2\n").find("missing required key 'generator'") !=
          std::string::npos);
    CHECK(spec_failure("generator = interval\ncount = 1\n").find("'n'") != std::string::npos);
    CHECK(spec_failure("generator = foo\ncount = 1\nn = 2\n").find("unknown generator") !=
          std::string::npos);
    CHECK(spec_failure("generator = interval\ncount = x\nn = 2\n").find("spec:2: bad value") !=
          std::string::npos);
    CHECK(spec_failure("generator = interval\ncount = 1\nn = 2\nvolume = 11\n")
              .find("unknown key") != std::string::npos);
    CHECK(spec_failure("generator = interval\ncount = 1\nn = 2\nwmin = 5\nwmax = 2\n")
              .find("wmin <= wmax") != std::string::npos);
    CHECK(spec_failure("generator = interval\ncount = 1\nn = 2\ncompare = maybe\n")
              .find("true or false") != std::string::npos);
    CHECK(spec_failure("generator interval\ncount = 1\nn = 2\n").find("key = value") !=
          std::string::npos);
}

TEST_CASE("campaign runs produce stable agreeing tables") {
    CampaignSpec spec;
    spec.generator = "interval";
    spec.count = 8;
    spec.n = 9;
    spec.seed = 40;
    spec.engines = {"square", "brute"};
    spec.wmin = 1;
    spec.wmax = 9;

    std::ostringstream csv1, csv2;
    CampaignResult r1 = run_campaign(spec, csv1, default_engines());
    CampaignResult r2 = run_campaign(spec, csv2, default_engines());
    CHECK(r1.ok());
    CHECK(r1.instances == 8);
    CHECK(r1.disagreements == 0);
    CHECK(r1.errors == 0);
    CHECK(csv1.str() == csv2.str()); // bytes, not just verdicts

    std::istringstream lines(csv1.str());
    std::string header;
    std::getline(lines, header);
    CHECK(header == "instance,n,m,seed,square_status,square_weight,brute_status,brute_weight,agree");
    int rows = 0;
    std::string row;
    while (std::getline(lines, row)) {
        ++rows;
        CHECK(row.find("error") == std::string::npos);
        CHECK((row.rfind(",yes") == row.size() - 4 || row.rfind(",no") == row.size() - 3));
    }
    CHECK(rows == 8);
    CHECK(csv1.str().find(",no\n") == std::string::npos);
}

TEST_CASE("a corrupted engine is caught by comparison") {
    EngineTable rigged = default_engines();
    rigged["square"] = [](const Graph& g, const WeightMap& w) {
        EngineOutcome out = run_square(g, w);
        if (out.status == "solved") out.solution->weight += 1; // off by one
        return out;
    };

    CampaignSpec spec;
    spec.generator = "interval";
    spec.count = 6;
    spec.n = 8;
    spec.seed = 3;
    spec.engines = {"square", "brute"};

    std::ostringstream csv;
    CampaignResult r = run_campaign(spec, csv, rigged);
    CHECK(!r.ok());
    CHECK(r.disagreements > 0);
    CHECK(csv.str().find(",no\n") != std::string::npos);

    EngineTable throwing = default_engines();
    throwing["square"] = [](const Graph&, const WeightMap&) -> EngineOutcome {
        throw internal_error("wired to fail");
    };
    std::ostringstream csv2;
    CampaignResult rt = run_campaign(spec, csv2, throwing);
    CHECK(rt.errors == 6);
    CHECK(csv2.str().find("error") != std::string::npos);
}

TEST_CASE("failed generation is reported per row and counted") {
    CampaignSpec spec;
    spec.generator = "hfree";
    spec.count = 2;
    spec.n = 5;
    spec.free_names = {"K1"}; // nothing nonempty avoids a single vertex
    spec.max_tries = 4;
    spec.engines = {"brute"};

    std::ostringstream csv;
    CampaignResult r = run_campaign(spec, csv, default_engines());
    CHECK(r.errors == 2);
    CHECK(!r.ok());
    CHECK(csv.str().find("generation-failed") != std::string::npos);
}
