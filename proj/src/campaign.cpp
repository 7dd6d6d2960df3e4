#include "wed/campaign.hpp"

#include "wed/errors.hpp"
#include "wed/generators.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

namespace wed {

namespace {

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

} // namespace

CampaignSpec parse_campaign_spec(const std::string& text, const std::string& origin) {
    CampaignSpec spec;
    bool have_generator = false, have_count = false, have_n = false;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        auto fail = [&](const std::string& msg) {
            throw parse_error(origin + ":" + std::to_string(lineno) + ": " + msg);
        };
        if (eq == std::string::npos) fail("expected key = value");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (value.empty()) fail("missing value for '" + key + "'");
        try {
            if (key == "generator") {
                spec.generator = value;
                have_generator = true;
            } else if (key == "count") {
                spec.count = std::stoi(value);
                have_count = true;
            } else if (key == "n") {
                spec.n = std::stoi(value);
                have_n = true;
            } else if (key == "seed") {
                spec.seed = std::stoull(value);
            } else if (key == "engines") {
                spec.engines = split_list(value);
            } else if (key == "compare") {
                if (value == "true") spec.compare = true;
                else if (value == "false") spec.compare = false;
                else fail("compare must be true or false");
            } else if (key == "density") {
                spec.density = std::stod(value);
            } else if (key == "bias") {
                spec.bias = std::stod(value);
            } else if (key == "free") {
                spec.free_names = split_list(value);
            } else if (key == "max_tries") {
                spec.max_tries = std::stoi(value);
            } else if (key == "wmin") {
                spec.wmin = std::stoi(value);
            } else if (key == "wmax") {
                spec.wmax = std::stoi(value);
            } else {
                fail("unknown key '" + key + "'");
            }
        } catch (const parse_error&) {
            throw;
        } catch (const std::exception&) {
            fail("bad value '" + value + "' for '" + key + "'");
        }
    }
    if (!have_generator) throw parse_error(origin + ": missing required key 'generator'");
    if (!have_count) throw parse_error(origin + ": missing required key 'count'");
    if (!have_n) throw parse_error(origin + ": missing required key 'n'");
    if (spec.generator != "interval" && spec.generator != "chordal" && spec.generator != "hfree") {
        throw parse_error(origin + ": unknown generator '" + spec.generator + "'");
    }
    if (spec.count < 0 || spec.n < 0) throw parse_error(origin + ": count and n must be nonnegative");
    if (spec.engines.empty()) throw parse_error(origin + ": engines list is empty");
    if (spec.wmin < 0 || spec.wmin > spec.wmax) {
        throw parse_error(origin + ": need 0 <= wmin <= wmax");
    }
    return spec;
}

CampaignSpec read_campaign_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw invalid_input("cannot open campaign spec '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_campaign_spec(buf.str(), path);
}

CampaignResult run_campaign(const CampaignSpec& spec, std::ostream& csv,
                            const EngineTable& table) {
    csv << "instance,n,m,seed";
    for (const auto& e : spec.engines) csv << "," << e << "_status," << e << "_weight";
    csv << ",agree\n";

    CampaignResult result;
    for (int i = 0; i < spec.count; ++i) {
        std::uint64_t seed = spec.seed + static_cast<std::uint64_t>(i);
        bool generated = true;
        Graph g;
        if (spec.generator == "interval") {
            g = random_interval_graph(spec.n, spec.density, seed);
        } else if (spec.generator == "chordal") {
            g = random_chordal(spec.n, spec.bias, seed);
        } else {
            auto got = random_h_free_chordal(spec.n, spec.free_names, seed, spec.max_tries);
            if (got) g = std::move(*got);
            else generated = false;
        }

        result.instances += 1;
        if (!generated) {
            result.errors += 1;
            csv << i << ",,," << seed;
            for (std::size_t e = 0; e < spec.engines.size(); ++e) csv << ",generation-failed,";
            csv << ",\n";
            continue;
        }

        WeightMap w = WeightMap::ones(g.n);
        if (spec.wmin != 1 || spec.wmax != 1) {
            Rng wr(seed * 2 + 1);
            for (int v = 0; v < g.n; ++v) w.set(v, wr.in_range(spec.wmin, spec.wmax));
        }

        std::vector<EngineOutcome> outcomes;
        for (const auto& name : spec.engines) {
            outcomes.push_back(run_engine(table, name, g, w));
        }

        bool any_error = false;
        bool disagree = false;
        const EngineOutcome* reference = nullptr;
        for (const auto& o : outcomes) {
            if (o.status == "error") any_error = true;
            if (o.status != "solved" && o.status != "no-eds") continue;
            if (!reference) {
                reference = &o;
                continue;
            }
            if (o.status != reference->status) disagree = true;
            else if (o.status == "solved" &&
                     o.solution->weight != reference->solution->weight) disagree = true;
        }
        if (any_error) result.errors += 1;
        if (spec.compare && disagree) result.disagreements += 1;

        csv << i << "," << g.n << "," << g.edge_count() << "," << seed;
        for (const auto& o : outcomes) {
            csv << "," << o.status << ",";
            if (o.status == "solved") csv << o.solution->weight.get_str();
        }
        csv << ",";
        if (spec.compare && spec.engines.size() >= 2) csv << (disagree ? "no" : "yes");
        csv << "\n";
    }
    return result;
}

} // namespace wed
