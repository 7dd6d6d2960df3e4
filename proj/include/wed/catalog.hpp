#pragma once

#include "wed/graph.hpp"

#include <string>
#include <vector>

namespace wed {

// Tree made of three induced paths of lengths i <= j <= k glued to a common
// center.  spider(1,1,1) is the claw, spider(1,1,2) the chair, and
// spider(0,0,k-1) a path on k vertices.  Vertex 0 is the center (when the
// two shorter legs are empty the "center" is simply the path start).
Graph spider(int i, int j, int k);

struct NamedGraph {
    std::string name;
    Graph graph;
    std::string source; // "text-defined" or "derived-from-proof"
};

// Small fixed graphs addressable by name, plus parametric families
// "P<k>", "C<k>", "K<k>" and disjoint unions like "2P3" or "K3+P2".
// Throws invalid_input for unknown names.
NamedGraph named(const std::string& name);

// The non-parametric names `named` accepts, sorted.
std::vector<std::string> catalog_names();

} // namespace wed
