// fixtures.hpp - small hand-checkable hypergraphs shared across tests.
#pragma once

#include "hyperim/hypergraph.hpp"
#include "hyperim/rng.hpp"

#include <algorithm>
#include <vector>

namespace fixtures {

using hyperim::Hypergraph;
using hyperim::node_id;

// two overlapping edges; node 2 is the shared hub (deg 4, hyperdegree 2)
inline Hypergraph f1() { return Hypergraph::build(5, {{0, 1, 2}, {2, 3, 4}}, false); }

// chain of pairwise edges
inline Hypergraph path5() {
    return Hypergraph::build(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}, false);
}

// a 4-node component and a 2-node component
inline Hypergraph two_disjoint() { return Hypergraph::build(6, {{0, 1, 2, 3}, {4, 5}}, false); }

// eight nodes, five edges; node 7 sits in edges 2,3,4 and edge 2 = {2,3,7}
inline Hypergraph fig2() {
    return Hypergraph::build(8, {{0, 2}, {1, 3}, {2, 3, 7}, {4, 5, 7}, {6, 7}}, false);
}

// hub 0 linked pairwise to five leaves
inline Hypergraph star() {
    return Hypergraph::build(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}}, false);
}

// two nodes sharing three parallel edges
inline Hypergraph two_hub() { return Hypergraph::build(2, {{0, 1}, {0, 1}, {0, 1}}, false); }

inline Hypergraph single_edge(node_id n) {
    std::vector<node_id> all(n);
    for (node_id v = 0; v < n; ++v)
        all[v] = v;
    return Hypergraph::build(n, {all}, false);
}

struct RandomInstance {
    Hypergraph h;
    std::vector<std::vector<node_id>> raw_edges; // as passed to build (may hold duplicate ids)
    node_id n;
};

// small arbitrary hypergraph: may contain singleton edges, duplicate members,
// parallel edges and isolated nodes
inline RandomInstance random_hypergraph(hyperim::rng::Stream& stream) {
    const auto n = static_cast<node_id>(2 + stream.below(29));
    const auto m = static_cast<std::size_t>(1 + stream.below(40));
    std::vector<std::vector<node_id>> edges(m);
    for (auto& e : edges) {
        const std::size_t size = 1 + stream.below(std::min<std::uint64_t>(6, n));
        for (std::size_t i = 0; i < size; ++i)
            e.push_back(static_cast<node_id>(stream.below(n)));
    }
    return {Hypergraph::build(n, edges, false), std::move(edges), n};
}

} // namespace fixtures
