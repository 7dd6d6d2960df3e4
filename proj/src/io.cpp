#include "wed/io.hpp"

#include "wed/errors.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iterator>
#include <sstream>

namespace wed {

namespace {

// Strips comments/blank lines and hands back (line_number, tokens).
struct LineReader {
    std::istream& in;
    std::string origin;
    int lineno = 0;

    bool next(std::vector<std::string>& tokens) {
        std::string line;
        while (std::getline(in, line)) {
            ++lineno;
            auto hash = line.find('#');
            if (hash != std::string::npos) line.resize(hash);
            std::istringstream ss(line);
            tokens.assign(std::istream_iterator<std::string>(ss),
                          std::istream_iterator<std::string>());
            if (!tokens.empty()) return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw parse_error(origin + ":" + std::to_string(lineno) + ": " + what);
    }
};

int parse_int(const LineReader& r, const std::string& tok) {
    try {
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        r.fail("expected integer, got '" + tok + "'");
    }
}

bool is_digits(const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(),
                                     [](unsigned char c) { return std::isdigit(c); });
}

void parse_weight_token(const LineReader& r, const std::string& tok, WeightMap& w, int u) {
    if (u < 0 || u >= w.size()) r.fail("weight vertex " + std::to_string(u) + " out of range");
    if (tok == "inf") {
        w.set_inf(u);
        return;
    }
    if (!is_digits(tok)) r.fail("weight must be a nonnegative integer or 'inf', got '" + tok + "'");
    w.set(u, ExactWeight(tok));
}

} // namespace

GraphFile parse_graph_text(std::istream& in, const std::string& origin) {
    LineReader r{in, origin};
    std::vector<std::string> t;
    if (!r.next(t)) r.fail("missing header line 'n m'");
    if (t.size() != 2) r.fail("header must be 'n m'");
    int n = parse_int(r, t[0]);
    int m = parse_int(r, t[1]);
    if (n < 0 || m < 0) r.fail("n and m must be nonnegative");

    std::vector<std::pair<int, int>> edges;
    edges.reserve(m);
    WeightMap w = WeightMap::ones(n);
    while (r.next(t)) {
        if (t[0] == "w") {
            if (t.size() != 3) r.fail("weight line must be 'w u VALUE'");
            parse_weight_token(r, t[2], w, parse_int(r, t[1]));
            continue;
        }
        if (t.size() != 2) r.fail("edge line must be 'u v'");
        if (static_cast<int>(edges.size()) == m) r.fail("more than m edge lines");
        edges.emplace_back(parse_int(r, t[0]), parse_int(r, t[1]));
    }
    if (static_cast<int>(edges.size()) != m)
        r.fail("expected " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));

    GraphFile gf;
    try {
        gf.graph = from_edge_list(n, edges);
    } catch (const invalid_input& e) {
        throw parse_error(origin + ": " + e.what());
    }
    gf.weights = std::move(w);
    return gf;
}

GraphFile read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error(path + ": cannot open");
    return parse_graph_text(in, path);
}

std::string write_graph_text(const Graph& g, const WeightMap* weights) {
    std::ostringstream out;
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < g.n; ++u)
        for (int v : g.adj[u])
            if (u < v) edges.emplace_back(u, v);
    if (!g.labels.empty()) {
        for (int v = 0; v < g.n; ++v)
            if (!g.labels[v].empty()) out << "# label " << v << " " << g.labels[v] << "\n";
    }
    out << g.n << " " << edges.size() << "\n";
    for (const auto& [u, v] : edges) out << u << " " << v << "\n";
    if (weights) {
        for (int v = 0; v < g.n; ++v) {
            if (weights->is_inf(v))
                out << "w " << v << " inf\n";
            else if (weights->at(v) != 1)
                out << "w " << v << " " << weights->at(v).get_str() << "\n";
        }
    }
    return out.str();
}

void write_graph_file(const std::string& path, const Graph& g, const WeightMap* weights) {
    std::ofstream out(path);
    if (!out) throw parse_error(path + ": cannot open for writing");
    out << write_graph_text(g, weights);
}

void apply_weight_overrides(std::istream& in, WeightMap& w, const std::string& origin) {
    LineReader r{in, origin};
    std::vector<std::string> t;
    while (r.next(t)) {
        if (t[0] == "w") t.erase(t.begin());
        if (t.size() != 2) r.fail("weight line must be 'u VALUE'");
        parse_weight_token(r, t[1], w, parse_int(r, t[0]));
    }
}

void apply_weight_file(const std::string& path, WeightMap& w) {
    std::ifstream in(path);
    if (!in) throw parse_error(path + ": cannot open");
    apply_weight_overrides(in, w, path);
}

X3cInstance make_x3c(int n, const std::vector<std::array<int, 3>>& triples) {
    if (n < 0 || n % 3 != 0) throw invalid_input("universe size must be a nonnegative multiple of 3");
    X3cInstance inst;
    inst.n = n;
    inst.triples.reserve(triples.size());
    for (auto t : triples) {
        std::sort(t.begin(), t.end());
        if (t[0] == t[1] || t[1] == t[2]) throw invalid_input("triple members must be distinct");
        if (t[0] < 0 || t[2] >= n) throw invalid_input("triple member out of range");
        inst.triples.push_back(t);
    }
    return inst;
}

X3cInstance parse_x3c_text(std::istream& in, const std::string& origin) {
    LineReader r{in, origin};
    std::vector<std::string> t;
    if (!r.next(t)) r.fail("missing header line 'n m'");
    if (t.size() != 2) r.fail("header must be 'n m'");
    int n = parse_int(r, t[0]);
    int m = parse_int(r, t[1]);
    std::vector<std::array<int, 3>> triples;
    while (r.next(t)) {
        if (t.size() != 3) r.fail("triple line must hold three integers");
        triples.push_back({parse_int(r, t[0]), parse_int(r, t[1]), parse_int(r, t[2])});
    }
    if (static_cast<int>(triples.size()) != m)
        r.fail("expected " + std::to_string(m) + " triples, found " + std::to_string(triples.size()));
    try {
        return make_x3c(n, triples);
    } catch (const invalid_input& e) {
        throw parse_error(origin + ": " + e.what());
    }
}

X3cInstance read_x3c_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error(path + ": cannot open");
    return parse_x3c_text(in, path);
}

} // namespace wed
