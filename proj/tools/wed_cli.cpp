#include "wed/campaign.hpp"
#include "wed/catalog.hpp"
#include "wed/chordal.hpp"
#include "wed/eds.hpp"
#include "wed/engines.hpp"
#include "wed/errors.hpp"
#include "wed/generators.hpp"
#include "wed/graph.hpp"
#include "wed/io.hpp"
#include "wed/square_wed.hpp"
#include "wed/subgraph.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using nlohmann::json;
using namespace wed;

namespace {

// All JSON goes to stdout, everything else (timing, errors for the text
// commands) to stderr, so identical inputs give byte-identical stdout.
// Exit codes: 0 solved/true, 1 no-eds/false, 2 inapplicable, 3 error.

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error(path + ": cannot open");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char out[17];
    std::snprintf(out, sizeof(out), "%016llx", static_cast<unsigned long long>(h));
    return out;
}

struct LoadedGraph {
    Graph g;
    WeightMap w;
    std::string digest;
};

// The digest covers every byte that influenced the run: graph file plus
// sidecar.  Sidecar values override in-file `w` lines.
LoadedGraph load_graph(const std::string& path, const std::string& weights_path) {
    std::string bytes = slurp(path);
    std::istringstream in(bytes);
    GraphFile gf = parse_graph_text(in, path);
    if (!weights_path.empty()) {
        std::string side = slurp(weights_path);
        std::istringstream win(side);
        apply_weight_overrides(win, gf.weights, weights_path);
        bytes += side;
    }
    return {std::move(gf.graph), std::move(gf.weights), fnv1a_hex(bytes)};
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

// Weights are exact integers of unbounded size, so JSON carries them as
// decimal strings.
void put_solution(json& out, const EdsSolution& sol) {
    out["weight"] = sol.weight.get_str();
    out["set"] = sol.set;
}

int emit_error(const std::string& command, const std::string& input, const std::string& what) {
    json out;
    out["command"] = command;
    if (!input.empty()) out["input"] = input;
    out["status"] = "error";
    out["detail"] = what;
    emit(out);
    return 3;
}

int text_error(const std::string& what) {
    std::cerr << "wed: error: " << what << "\n";
    return 3;
}

void write_text(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw parse_error(out_path + ": cannot open for writing");
    out << text;
}

std::vector<std::string> split_names(const std::string& csv) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : csv) {
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

int status_code(const std::string& status) {
    if (status == "solved") return 0;
    if (status == "no-eds") return 1;
    if (status == "inapplicable") return 2;
    return 3;
}

int cmd_catalog(const std::string& name, bool list, const std::string& out_path) {
    try {
        if (list) {
            std::string text;
            for (const auto& n : catalog_names()) text += n + "\n";
            write_text(out_path, text);
            return 0;
        }
        NamedGraph ng = named(name);
        write_text(out_path, "# catalog " + name + "\n" + write_graph_text(ng.graph));
        return 0;
    } catch (const std::exception& e) {
        return text_error(e.what());
    }
}

int cmd_check(const std::string& path, bool chordal_flag, const std::string& free_csv,
              bool square_flag) {
    json out;
    out["command"] = "check";
    out["input"] = path;
    try {
        LoadedGraph lg = load_graph(path, "");
        out["digest"] = lg.digest;
        bool all_hold = true;

        if (chordal_flag) {
            ChordalityResult r = is_chordal(lg.g);
            out["chordal"] = r.chordal;
            if (r.hole) out["hole"] = *r.hole;
            all_hold = all_hold && r.chordal;
        }
        if (!free_csv.empty()) {
            auto names = split_names(free_csv);
            auto hit = find_forbidden(lg.g, names);
            out["free"] = !hit.has_value();
            if (hit) {
                json witness;
                witness["h"] = *hit;
                witness["map"] = find_induced(lg.g, named(*hit).graph)->map;
                out["witness"] = witness;
                all_hold = false;
            }
        }
        if (square_flag) {
            SquareResult r = square_chordality_report(lg.g);
            out["square_chordal"] = r.square_chordal;
            if (r.hole) out["square_hole"] = *r.hole;
            all_hold = all_hold && r.square_chordal;
        }
        emit(out);
        return all_hold ? 0 : 1;
    } catch (const std::exception& e) {
        return emit_error("check", path, e.what());
    }
}

int cmd_mwis(const std::string& path, const std::string& weights_path) {
    try {
        LoadedGraph lg = load_graph(path, weights_path);
        std::vector<ExactWeight> w;
        for (int v = 0; v < lg.g.n; ++v) {
            if (lg.w.is_inf(v))
                throw invalid_input("vertex " + std::to_string(v) +
                                    " has infinite weight; independent set search needs finite weights");
            w.push_back(lg.w.at(v));
        }
        MwisResult r = mwis_chordal(lg.g, w);
        json out;
        out["command"] = "mwis";
        out["input"] = path;
        out["digest"] = lg.digest;
        out["weight"] = r.weight.get_str();
        out["set"] = r.set;
        emit(out);
        return 0;
    } catch (const std::exception& e) {
        return emit_error("mwis", path, e.what());
    }
}

int cmd_eds(const std::string& path, const std::string& weights_path, const std::string& engine) {
    try {
        LoadedGraph lg = load_graph(path, weights_path);
        json out;
        out["command"] = "eds";
        out["input"] = path;
        out["digest"] = lg.digest;

        if (engine == "square") {
            // report the pipeline's full verdict, including the certificate
            // that made it inapplicable
            SquareOutcome sq = wed_via_square(lg.g, lg.w);
            out["engine"] = "square";
            out["square_chordal"] = sq.square_chordal;
            if (sq.square_hole) out["square_hole"] = *sq.square_hole;
            std::string status = sq.status == SquareStatus::solved     ? "solved"
                                 : sq.status == SquareStatus::no_eds   ? "no-eds"
                                                                       : "inapplicable";
            out["status"] = status;
            if (sq.solution) put_solution(out, *sq.solution);
            emit(out);
            return status_code(status);
        }

        EngineOutcome o = run_engine(default_engines(), engine, lg.g, lg.w);
        out["engine"] = o.engine;
        out["status"] = o.status;
        if (!o.detail.empty()) out["detail"] = o.detail;
        if (o.engine == "brute" && o.status != "error") out["exists"] = o.status == "solved";
        if (o.solution) put_solution(out, *o.solution);
        emit(out);
        return status_code(o.status);
    } catch (const std::exception& e) {
        return emit_error("eds", path, e.what());
    }
}

struct GenCommon {
    int n = 0;
    std::uint64_t seed = 1;
    std::string out_path;
};

int emit_generated(const std::string& header, const Graph& g, const std::string& out_path) {
    write_text(out_path, "# " + header + "\n" + write_graph_text(g));
    return 0;
}

int cmd_gen_x3c(const std::string& in_path, const std::string& out_path) {
    try {
        X3cInstance inst = read_x3c_file(in_path);
        ReductionOutput out = x3c_to_graph(inst);
        std::string header = "x3c n=" + std::to_string(inst.n) +
                             " m=" + std::to_string(inst.triples.size()) + " from " + in_path;
        return emit_generated(header, out.graph, out_path);
    } catch (const std::exception& e) {
        return text_error(e.what());
    }
}

int cmd_gen_interval(const GenCommon& c, double density) {
    try {
        Graph g = random_interval_graph(c.n, density, c.seed);
        std::ostringstream h;
        h << "interval n=" << c.n << " density=" << density << " seed=" << c.seed;
        return emit_generated(h.str(), g, c.out_path);
    } catch (const std::exception& e) {
        return text_error(e.what());
    }
}

int cmd_gen_chordal(const GenCommon& c, double bias) {
    try {
        Graph g = random_chordal(c.n, bias, c.seed);
        std::ostringstream h;
        h << "chordal n=" << c.n << " bias=" << bias << " seed=" << c.seed;
        return emit_generated(h.str(), g, c.out_path);
    } catch (const std::exception& e) {
        return text_error(e.what());
    }
}

int cmd_gen_hfree(const GenCommon& c, const std::string& free_csv, int max_tries) {
    try {
        auto names = split_names(free_csv);
        auto g = random_h_free_chordal(c.n, names, c.seed, max_tries);
        if (!g) {
            return text_error("no " + free_csv + "-free chordal graph found within " +
                              std::to_string(max_tries) + " tries");
        }
        std::ostringstream h;
        h << "hfree n=" << c.n << " free=" << free_csv << " seed=" << c.seed;
        return emit_generated(h.str(), *g, c.out_path);
    } catch (const std::exception& e) {
        return text_error(e.what());
    }
}

int cmd_campaign(const std::string& spec_path, const std::string& out_path) {
    try {
        std::string bytes = slurp(spec_path);
        CampaignSpec spec = parse_campaign_spec(bytes, spec_path);
        std::ostringstream csv;
        CampaignResult r = run_campaign(spec, csv, default_engines());
        if (out_path.empty()) {
            std::cout << csv.str();
        } else {
            write_text(out_path, csv.str());
            json summary;
            summary["command"] = "campaign";
            summary["input"] = spec_path;
            summary["digest"] = fnv1a_hex(bytes);
            summary["seed"] = spec.seed;
            summary["instances"] = r.instances;
            summary["disagreements"] = r.disagreements;
            summary["errors"] = r.errors;
            summary["ok"] = r.ok();
            emit(summary);
        }
        return r.ok() ? 0 : 1;
    } catch (const std::exception& e) {
        return text_error(e.what());
    }
}

} // namespace

int main(int argc, char** argv) {
    auto started = std::chrono::steady_clock::now();

    CLI::App app{"weighted efficient domination on chordal graphs"};
    app.require_subcommand(1);

    // catalog
    std::string cat_name, cat_out;
    bool cat_list = false;
    CLI::App* catalog = app.add_subcommand("catalog", "print a named graph as edge-list text");
    catalog->add_option("name", cat_name, "catalog name, e.g. net, P7, S123, K3+P2");
    catalog->add_flag("--list", cat_list, "list the fixed catalog names");
    catalog->add_option("-o,--output", cat_out, "write to a file instead of stdout");

    // check
    std::string chk_path, chk_free;
    bool chk_chordal = false, chk_square = false;
    CLI::App* check = app.add_subcommand("check", "test graph properties, JSON verdict");
    check->add_option("file", chk_path, "graph file")->required();
    check->add_flag("--chordal", chk_chordal, "chordality with hole certificate");
    check->add_option("--free", chk_free, "comma list of catalog graphs to exclude");
    check->add_flag("--square-chordal", chk_square, "chordality of the square");

    // mwis
    std::string mwis_path, mwis_weights;
    CLI::App* mwis = app.add_subcommand("mwis", "maximum weight independent set of a chordal graph");
    mwis->add_option("file", mwis_path, "graph file")->required();
    mwis->add_option("--weights", mwis_weights, "sidecar weight file (overrides w lines)");

    // eds
    std::string eds_path, eds_weights, eds_engine = "auto";
    CLI::App* eds = app.add_subcommand("eds", "minimum weight efficient dominating set");
    eds->add_option("file", eds_path, "graph file")->required();
    eds->add_option("--engine", eds_engine, "auto, brute, square or s123")
        ->check(CLI::IsMember({"auto", "brute", "square", "s123"}));
    eds->add_option("--weights", eds_weights, "sidecar weight file (overrides w lines)");

    // gen
    CLI::App* gen = app.add_subcommand("gen", "emit generated graphs as edge-list text");
    gen->require_subcommand(1);

    std::string gx3c_in, gx3c_out;
    CLI::App* gen_x3c = gen->add_subcommand("x3c", "cover instance to its decision graph");
    gen_x3c->add_option("file", gx3c_in, "instance file: 'n m' then m triples")->required();
    gen_x3c->add_option("-o,--output", gx3c_out, "write to a file instead of stdout");

    GenCommon gi, gc, gh;
    double gi_density = 0.5, gc_bias = 0.5;
    std::string gh_free;
    int gh_tries = 200;

    CLI::App* gen_interval = gen->add_subcommand("interval", "random interval graph");
    gen_interval->add_option("-n", gi.n, "vertex count")->required();
    gen_interval->add_option("--seed", gi.seed, "rng seed");
    gen_interval->add_option("--density", gi_density, "interval length scale in [0,1]");
    gen_interval->add_option("-o,--output", gi.out_path, "write to a file instead of stdout");

    CLI::App* gen_chordal = gen->add_subcommand("chordal", "random chordal graph");
    gen_chordal->add_option("-n", gc.n, "vertex count")->required();
    gen_chordal->add_option("--seed", gc.seed, "rng seed");
    gen_chordal->add_option("--bias", gc_bias, "edge bias in [0,1]");
    gen_chordal->add_option("-o,--output", gc.out_path, "write to a file instead of stdout");

    CLI::App* gen_hfree = gen->add_subcommand("hfree", "random chordal graph avoiding patterns");
    gen_hfree->add_option("-n", gh.n, "vertex count")->required();
    gen_hfree->add_option("--seed", gh.seed, "rng seed");
    gen_hfree->add_option("--free", gh_free, "comma list of catalog graphs to avoid")->required();
    gen_hfree->add_option("--max-tries", gh_tries, "rejection cap");
    gen_hfree->add_option("-o,--output", gh.out_path, "write to a file instead of stdout");

    // campaign
    std::string camp_spec, camp_out;
    CLI::App* campaign = app.add_subcommand("campaign", "run a generator/engine sweep, CSV out");
    campaign->add_option("spec", camp_spec, "key = value spec file")->required();
    campaign->add_option("-o,--output", camp_out, "write CSV to a file and summarize on stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 3;
    }

    int rc = 3;
    if (*catalog) {
        if (!cat_list && cat_name.empty())
            rc = text_error("catalog needs a name or --list");
        else
            rc = cmd_catalog(cat_name, cat_list, cat_out);
    } else if (*check) {
        if (!chk_chordal && chk_free.empty() && !chk_square)
            rc = text_error("check needs at least one of --chordal, --free, --square-chordal");
        else
            rc = cmd_check(chk_path, chk_chordal, chk_free, chk_square);
    } else if (*mwis) {
        rc = cmd_mwis(mwis_path, mwis_weights);
    } else if (*eds) {
        rc = cmd_eds(eds_path, eds_weights, eds_engine);
    } else if (*gen) {
        if (*gen_x3c) rc = cmd_gen_x3c(gx3c_in, gx3c_out);
        else if (*gen_interval) rc = cmd_gen_interval(gi, gi_density);
        else if (*gen_chordal) rc = cmd_gen_chordal(gc, gc_bias);
        else if (*gen_hfree) rc = cmd_gen_hfree(gh, gh_free, gh_tries);
    } else if (*campaign) {
        rc = cmd_campaign(camp_spec, camp_out);
    }

    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - started)
                  .count();
    std::cerr << "wed: finished in " << ms << " ms\n";
    return rc;
}
