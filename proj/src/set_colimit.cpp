#include "syscons/set_colimit.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace syscons {

namespace {

struct UnionFind {
    std::vector<int> parent;

    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[b] = a;
    }
};

} // namespace

int SetColimit::class_of(int node, const std::string& element) const {
    for (std::size_t c = 0; c < classes.size(); ++c)
        for (const auto& [n, e] : classes[c])
            if (n == node && e == element) return static_cast<int>(c);
    return -1;
}

SetColimit colimit_of_finite_sets(const FiniteSetDiagram& d) {
    validate_shape(d.shape);
    require(d.node_sets.size() == d.shape.nodes.size(), "node set count does not match shape");
    require(d.edge_functions.size() == d.shape.edges.size(), "edge function count does not match shape");

    // Dense index for every (node, element) pair.
    std::vector<int> offset(d.node_sets.size() + 1, 0);
    for (std::size_t n = 0; n < d.node_sets.size(); ++n) {
        std::set<std::string> seen(d.node_sets[n].begin(), d.node_sets[n].end());
        require(seen.size() == d.node_sets[n].size(),
                "node '" + d.shape.nodes[n] + "' carries duplicate elements");
        offset[n + 1] = offset[n] + static_cast<int>(d.node_sets[n].size());
    }
    auto elem_index = [&](int node, const std::string& e) -> int {
        const auto& set = d.node_sets[static_cast<std::size_t>(node)];
        for (std::size_t i = 0; i < set.size(); ++i)
            if (set[i] == e) return offset[static_cast<std::size_t>(node)] + static_cast<int>(i);
        return -1;
    };

    UnionFind uf(offset.back());
    for (std::size_t e = 0; e < d.shape.edges.size(); ++e) {
        const auto& edge = d.shape.edges[e];
        const auto& fn = d.edge_functions[e];
        for (const auto& x : d.node_sets[static_cast<std::size_t>(edge.source)]) {
            auto it = fn.find(x);
            require(it != fn.end(),
                    "edge function '" + edge.id + "' is not total: no image for '" + x + "'");
            int to = elem_index(edge.target, it->second);
            require(to >= 0, "edge function '" + edge.id + "' maps '" + x + "' to '" + it->second +
                                 "', which is not in the target node set");
            uf.unite(elem_index(edge.source, x), to);
        }
    }

    // Group members by root; member lists come out sorted because the dense
    // index respects (node, position) order and node sets may be unsorted,
    // so sort explicitly by (node, element).
    std::map<int, std::vector<std::pair<int, std::string>>> groups;
    for (std::size_t n = 0; n < d.node_sets.size(); ++n)
        for (const auto& e : d.node_sets[n])
            groups[uf.find(elem_index(static_cast<int>(n), e))].emplace_back(static_cast<int>(n), e);

    SetColimit out;
    for (auto& [root, members] : groups) {
        std::sort(members.begin(), members.end());
        out.classes.push_back(members);
    }
    std::sort(out.classes.begin(), out.classes.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });

    // Candidate names and qualification of collisions.
    std::vector<std::string> candidates;
    std::map<std::string, int> uses;
    for (const auto& members : out.classes) {
        std::string best = members.front().second;
        for (const auto& [n, e] : members) best = std::min(best, e);
        candidates.push_back(best);
        uses[best] += 1;
    }
    for (std::size_t c = 0; c < out.classes.size(); ++c) {
        if (uses[candidates[c]] == 1) {
            out.class_names.push_back(candidates[c]);
            continue;
        }
        int qual_node = -1;
        for (const auto& [n, e] : out.classes[c])
            if (e == candidates[c]) { qual_node = n; break; }
        out.class_names.push_back(d.shape.nodes[static_cast<std::size_t>(qual_node)] + "." + candidates[c]);
    }
    {
        std::set<std::string> distinct(out.class_names.begin(), out.class_names.end());
        require(distinct.size() == out.class_names.size(),
                "colimit class naming produced a collision; rename input symbols");
    }

    out.injections.resize(d.node_sets.size());
    for (std::size_t c = 0; c < out.classes.size(); ++c)
        for (const auto& [n, e] : out.classes[c])
            out.injections[static_cast<std::size_t>(n)][e] = out.class_names[c];
    return out;
}

} // namespace syscons
