#pragma once

#include <string>
#include <utility>
#include <vector>

#include "syscons/shape.hpp"
#include "syscons/symbol_map.hpp"

namespace syscons {

// A shaped diagram of finite sets of named elements with total edge
// functions.  Substrate for language colimits.
struct FiniteSetDiagram {
    ShapeGraph shape;
    std::vector<std::vector<std::string>> node_sets; // per node, distinct elements
    std::vector<SymbolMap> edge_functions;           // per edge, total source -> target
};

// Colimit presentation: the disjoint union of the node sets quotiented by
// the equivalence generated by x ~ f_e(x).
//
// Determinism: classes are ordered by their least (node index, element)
// member.  A class is named by its lexicographically least element name;
// when several classes share that candidate the name is qualified as
// "<node id>.<element>" using the least carrying node.
struct SetColimit {
    std::vector<std::string> class_names;
    std::vector<std::vector<std::pair<int, std::string>>> classes; // members, sorted
    std::vector<SymbolMap> injections;                             // per node: element -> class name

    int class_of(int node, const std::string& element) const;
};

SetColimit colimit_of_finite_sets(const FiniteSetDiagram& d);

} // namespace syscons
