#include "wed/catalog.hpp"

#include "wed/errors.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>

namespace wed {

namespace {

Graph make(int n, std::vector<std::pair<int, int>> edges) {
    return from_edge_list(n, edges);
}

Graph path(int k) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < k; ++i) e.emplace_back(i, i + 1);
    return make(k, e);
}

Graph cycle(int k) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < k; ++i) e.emplace_back(i, (i + 1) % k);
    return make(k, e);
}

Graph clique(int k) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) e.emplace_back(i, j);
    return make(k, e);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < a.n; ++u)
        for (int v : a.adj[u])
            if (u < v) e.emplace_back(u, v);
    for (int u = 0; u < b.n; ++u)
        for (int v : b.adj[u])
            if (u < v) e.emplace_back(a.n + u, a.n + v);
    return make(a.n + b.n, e);
}

Graph star4() {
    return make(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
}

// Fixed five-to-eight vertex graphs.  Where a construction was reconstructed
// from case analysis rather than a stated definition, source says so.
struct Entry {
    Graph (*build)();
    const char* source;
};

const std::map<std::string, Entry>& word_table() {
    static const std::map<std::string, Entry> t = {
        {"claw", {[] { return spider(1, 1, 1); }, "text-defined"}},
        {"paw", {[] { return make(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}}); }, "text-defined"}},
        {"diamond", {[] { return make(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}); }, "text-defined"}},
        {"chair", {[] { return spider(1, 1, 2); }, "text-defined"}},
        // 0-1-2-3 path, 4 adjacent to the midpoints
        {"bull", {[] { return make(5, {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {2, 4}}); }, "text-defined"}},
        // triangle with one pendant per corner
        {"net", {[] { return make(6, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}, {2, 5}}); }, "text-defined"}},
        // 0-1-2-3 path plus universal 4
        {"gem", {[] { return make(5, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {1, 4}, {2, 4}, {3, 4}}); },
                 "text-defined"}},
        {"co_gem", {[] { return complement(named("gem").graph); }, "text-defined"}},
        {"co_chair", {[] { return complement(spider(1, 1, 2)); }, "text-defined"}},
        // C4 on 0..3 with a pendant at 0 (sometimes called the banner)
        {"P", {[] { return make(5, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}}); }, "text-defined"}},
        {"co_P", {[] { return complement(named("P").graph); }, "text-defined"}},
        // two triangles sharing vertex 0
        {"butterfly",
         {[] { return make(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}}); },
          "derived-from-proof"}},
        // triangle 0,1,2; 3 sees 0,1; 4 sees 1,2; then a two-edge tail 0-5-6
        // and a pendant 7 at 2
        {"extended_gem",
         {[] {
              return make(8, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {1, 4}, {2, 4},
                              {0, 5}, {5, 6}, {2, 7}});
          },
          "derived-from-proof"}},
        {"H1", {[] { return star4(); }, "derived-from-proof"}},
        // triangle with two pendants on the same corner
        {"H2",
         {[] { return make(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}}); }, "derived-from-proof"}},
        // diamond plus a vertex seeing both high-degree corners
        {"H3",
         {[] { return make(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {0, 4}, {1, 4}}); },
          "derived-from-proof"}},
        // K5 minus one edge
        {"H4",
         {[] {
              return make(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
          },
          "derived-from-proof"}},
        {"K1_4", {[] { return star4(); }, "text-defined"}},
        // diamond plus a pendant at one high-degree corner
        {"dart",
         {[] { return make(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {0, 4}}); }, "text-defined"}},
    };
    return t;
}

Graph parse_term(const std::string& term, std::string& source);

Graph resolve_base(const std::string& base, std::string& source) {
    auto it = word_table().find(base);
    if (it != word_table().end()) {
        source = it->second.source;
        return it->second.build();
    }
    if (base.size() >= 2 && std::isdigit(static_cast<unsigned char>(base[1]))) {
        bool digits = std::all_of(base.begin() + 1, base.end(),
                                  [](unsigned char c) { return std::isdigit(c); });
        if (digits) {
            source = "text-defined";
            // Sijk names a spider with one digit per leg: S123, S112, ...
            if (base[0] == 'S' && base.size() == 4) {
                return spider(base[1] - '0', base[2] - '0', base[3] - '0');
            }
            int k = std::stoi(base.substr(1));
            if (base[0] == 'P' && k >= 1) return path(k);
            if (base[0] == 'C' && k >= 3) return cycle(k);
            if (base[0] == 'K' && k >= 1) return clique(k);
        }
    }
    throw invalid_input("unknown catalog graph '" + base + "'");
}

Graph parse_term(const std::string& term, std::string& source) {
    std::size_t d = 0;
    while (d < term.size() && std::isdigit(static_cast<unsigned char>(term[d]))) ++d;
    // A leading count only makes sense if something follows that is itself a
    // valid name ("2P3"); bare "P3" style names start with a letter anyway.
    if (d > 0 && d < term.size()) {
        int count = std::stoi(term.substr(0, d));
        if (count < 1) throw invalid_input("bad multiplier in '" + term + "'");
        Graph one = resolve_base(term.substr(d), source);
        Graph out = one;
        for (int c = 1; c < count; ++c) out = disjoint_union(out, one);
        return out;
    }
    return resolve_base(term, source);
}

} // namespace

Graph spider(int i, int j, int k) {
    if (i < 0 || j < 0 || k < 0 || i > j || j > k)
        throw invalid_input("spider legs must satisfy 0 <= i <= j <= k");
    std::vector<std::pair<int, int>> e;
    int next = 1;
    for (int len : {i, j, k}) {
        int prev = 0;
        for (int step = 0; step < len; ++step) {
            e.emplace_back(prev, next);
            prev = next++;
        }
    }
    return make(next, e);
}

NamedGraph named(const std::string& name) {
    if (name.empty()) throw invalid_input("empty catalog name");
    NamedGraph ng;
    ng.name = name;
    std::vector<std::string> terms;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= name.size(); ++i) {
        if (i == name.size() || name[i] == '+') {
            terms.push_back(name.substr(start, i - start));
            start = i + 1;
        }
    }
    std::string source = "text-defined";
    Graph g;
    bool first = true;
    for (const auto& term : terms) {
        std::string s;
        Graph part = parse_term(term, s);
        if (first) {
            g = std::move(part);
            source = s;
            first = false;
        } else {
            g = disjoint_union(g, part);
            if (s == "derived-from-proof") source = s;
        }
    }
    ng.graph = std::move(g);
    ng.source = source;
    return ng;
}

std::vector<std::string> catalog_names() {
    std::vector<std::string> names;
    for (const auto& [k, v] : word_table()) names.push_back(k);
    for (const char* u : {"2P2", "2P3", "2K3", "K3+P2", "K3+P3"}) names.emplace_back(u);
    std::sort(names.begin(), names.end());
    return names;
}

} // namespace wed
