// hypergraph.hpp - immutable sparse hypergraph with incidence index,
// clique-expansion queries and summary statistics.
#pragma once

#include "hyperim/types.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace hyperim {

// Summary statistics of a hypergraph and of its clique expansion (the
// ordinary graph linking every pair of hyperedge co-members).
struct HypergraphStats {
    std::size_t node_count = 0;
    std::size_t edge_count = 0;
    double mean_degree = 0.0;        // distinct co-members per node
    double mean_hyperdegree = 0.0;   // incident hyperedges per node
    double mean_edge_size = 0.0;
    double clustering = 0.0;         // mean local clustering, deg<2 counts as 0
    double mean_shortest_path = 0.0; // largest component only, hops
    std::size_t diameter = 0;        // largest component only
    double link_density = 0.0;       // 2M / (n(n-1)), M = clique-expansion links
};

// Node ids are dense integers in [0, n). Hyperedges store distinct member ids
// sorted ascending; the node->edge index is the exact transpose of the edge
// list. Instances are immutable after build() and safe for concurrent readers.
class Hypergraph {
public:
    // Collapses duplicate ids within an edge; with dedupe_edges, identical
    // edges (as sets) collapse to the first occurrence. Throws
    // std::invalid_argument on out-of-range ids, empty edges or node_count 0.
    static Hypergraph build(node_id node_count,
                            const std::vector<std::vector<node_id>>& hyperedges,
                            bool dedupe_edges);

    node_id node_count() const { return n_; }
    edge_id edge_count() const { return static_cast<edge_id>(edge_offsets_.size() - 1); }

    std::span<const node_id> edge_members(edge_id e) const {
        return {edge_members_.data() + edge_offsets_[e], edge_offsets_[e + 1] - edge_offsets_[e]};
    }
    std::span<const edge_id> incident_edges(node_id v) const {
        return {node_edges_.data() + node_offsets_[v], node_offsets_[v + 1] - node_offsets_[v]};
    }

    std::size_t edge_size(edge_id e) const { return edge_offsets_[e + 1] - edge_offsets_[e]; }
    std::size_t hyperdegree(node_id v) const;

    // Number of distinct nodes sharing at least one hyperedge with v.
    std::size_t degree(node_id v) const;
    std::vector<std::size_t> degrees() const;

    // Sorted distinct co-members of v, excluding v itself.
    std::vector<node_id> neighbors(node_id v) const;

    // Number of hyperedges containing both u and v; 0 when u == v.
    std::size_t adjacency_count(node_id u, node_id v) const;

    // Nodes at shortest-path distance exactly `radius` from v in the clique
    // expansion, sorted ascending. radius 0 yields {v}.
    std::vector<node_id> ball_frontier(node_id v, std::size_t radius) const;

    // Partition of V under hyperedge co-membership, each component sorted,
    // components ordered by their smallest member.
    std::vector<std::vector<node_id>> connected_components() const;

    HypergraphStats stats() const;

    // Dense debug views, guarded to small instances (n, m <= 1000).
    std::vector<std::vector<std::uint32_t>> incidence_matrix() const;
    std::vector<std::vector<std::uint32_t>> adjacency_matrix() const;

private:
    Hypergraph() = default;

    void check_node(node_id v) const;

    node_id n_ = 0;
    std::vector<std::size_t> edge_offsets_; // m+1
    std::vector<node_id> edge_members_;     // sorted within each edge
    std::vector<std::size_t> node_offsets_; // n+1
    std::vector<edge_id> node_edges_;       // sorted within each node
};

} // namespace hyperim
