#pragma once

#include <string>
#include <vector>

#include "syscons/error.hpp"

namespace syscons {

// Finite graph generating the indexing category of a diagram.  Parallel
// edges and self-edges are allowed.
struct ShapeEdge {
    std::string id;
    int source = -1;
    int target = -1;

    friend bool operator==(const ShapeEdge&, const ShapeEdge&) = default;
};

struct ShapeGraph {
    std::vector<std::string> nodes; // ids, distinct, document order
    std::vector<ShapeEdge> edges;

    int node_index(const std::string& id) const {
        for (std::size_t i = 0; i < nodes.size(); ++i)
            if (nodes[i] == id) return static_cast<int>(i);
        return -1;
    }

    friend bool operator==(const ShapeGraph&, const ShapeGraph&) = default;
};

inline void validate_shape(const ShapeGraph& g) {
    for (std::size_t i = 0; i < g.nodes.size(); ++i)
        for (std::size_t j = i + 1; j < g.nodes.size(); ++j)
            require(g.nodes[i] != g.nodes[j], "duplicate shape node id '" + g.nodes[i] + "'");
    for (const auto& e : g.edges) {
        require(e.source >= 0 && e.source < static_cast<int>(g.nodes.size()),
                "edge '" + e.id + "' has dangling source");
        require(e.target >= 0 && e.target < static_cast<int>(g.nodes.size()),
                "edge '" + e.id + "' has dangling target");
    }
}

inline ShapeGraph discrete_shape(std::vector<std::string> node_ids) {
    return ShapeGraph{std::move(node_ids), {}};
}

} // namespace syscons
