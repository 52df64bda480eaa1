#include "hyperim/hypergraph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hyperim {

Hypergraph Hypergraph::build(node_id node_count,
                             const std::vector<std::vector<node_id>>& hyperedges,
                             bool dedupe_edges) {
    if (node_count == 0)
        throw std::invalid_argument("hypergraph needs at least one node");

    std::vector<std::vector<node_id>> edges;
    edges.reserve(hyperedges.size());
    std::map<std::vector<node_id>, bool> seen;
    for (const auto& raw : hyperedges) {
        if (raw.empty())
            throw std::invalid_argument("empty hyperedge");
        std::vector<node_id> e(raw);
        for (node_id v : e)
            if (v >= node_count)
                throw std::invalid_argument("node id " + std::to_string(v) + " out of range");
        std::sort(e.begin(), e.end());
        e.erase(std::unique(e.begin(), e.end()), e.end());
        if (dedupe_edges) {
            if (seen.count(e))
                continue;
            seen.emplace(e, true);
        }
        edges.push_back(std::move(e));
    }

    Hypergraph h;
    h.n_ = node_count;
    h.edge_offsets_.reserve(edges.size() + 1);
    h.edge_offsets_.push_back(0);
    for (const auto& e : edges) {
        h.edge_members_.insert(h.edge_members_.end(), e.begin(), e.end());
        h.edge_offsets_.push_back(h.edge_members_.size());
    }

    // transpose: counting sort of (node, edge) pairs
    h.node_offsets_.assign(node_count + 1, 0);
    for (node_id v : h.edge_members_)
        ++h.node_offsets_[v + 1];
    for (std::size_t v = 1; v <= node_count; ++v)
        h.node_offsets_[v] += h.node_offsets_[v - 1];
    h.node_edges_.resize(h.edge_members_.size());
    std::vector<std::size_t> cursor(h.node_offsets_.begin(), h.node_offsets_.end() - 1);
    for (edge_id e = 0; e < edges.size(); ++e)
        for (node_id v : edges[e])
            h.node_edges_[cursor[v]++] = e;

    return h;
}

void Hypergraph::check_node(node_id v) const {
    if (v >= n_)
        throw std::invalid_argument("node id " + std::to_string(v) + " out of range");
}

std::size_t Hypergraph::hyperdegree(node_id v) const {
    check_node(v);
    return node_offsets_[v + 1] - node_offsets_[v];
}

std::vector<node_id> Hypergraph::neighbors(node_id v) const {
    check_node(v);
    std::vector<node_id> out;
    for (edge_id e : incident_edges(v))
        for (node_id u : edge_members(e))
            if (u != v)
                out.push_back(u);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::size_t Hypergraph::degree(node_id v) const { return neighbors(v).size(); }

std::vector<std::size_t> Hypergraph::degrees() const {
    std::vector<std::size_t> out(n_);
#pragma omp parallel for schedule(dynamic, 64)
    for (std::int64_t v = 0; v < static_cast<std::int64_t>(n_); ++v)
        out[v] = neighbors(static_cast<node_id>(v)).size();
    return out;
}

std::size_t Hypergraph::adjacency_count(node_id u, node_id v) const {
    check_node(u);
    check_node(v);
    if (u == v)
        return 0;
    if (hyperdegree(u) > hyperdegree(v))
        std::swap(u, v);
    std::size_t count = 0;
    for (edge_id e : incident_edges(u)) {
        auto m = edge_members(e);
        if (std::binary_search(m.begin(), m.end(), v))
            ++count;
    }
    return count;
}

std::vector<node_id> Hypergraph::ball_frontier(node_id v, std::size_t radius) const {
    check_node(v);
    if (radius == 0)
        return {v};
    std::vector<std::uint8_t> visited(n_, 0);
    visited[v] = 1;
    std::vector<node_id> frontier{v};
    for (std::size_t depth = 0; depth < radius && !frontier.empty(); ++depth) {
        std::vector<node_id> next;
        for (node_id x : frontier)
            for (edge_id e : incident_edges(x))
                for (node_id u : edge_members(e))
                    if (!visited[u]) {
                        visited[u] = 1;
                        next.push_back(u);
                    }
        frontier = std::move(next);
    }
    std::sort(frontier.begin(), frontier.end());
    return frontier;
}

std::vector<std::vector<node_id>> Hypergraph::connected_components() const {
    std::vector<std::uint8_t> visited(n_, 0);
    std::vector<std::vector<node_id>> components;
    for (node_id start = 0; start < n_; ++start) {
        if (visited[start])
            continue;
        std::vector<node_id> comp;
        std::vector<node_id> stack{start};
        visited[start] = 1;
        while (!stack.empty()) {
            node_id x = stack.back();
            stack.pop_back();
            comp.push_back(x);
            for (edge_id e : incident_edges(x))
                for (node_id u : edge_members(e))
                    if (!visited[u]) {
                        visited[u] = 1;
                        stack.push_back(u);
                    }
        }
        std::sort(comp.begin(), comp.end());
        components.push_back(std::move(comp));
    }
    return components;
}

HypergraphStats Hypergraph::stats() const {
    HypergraphStats s;
    s.node_count = n_;
    s.edge_count = edge_count();
    s.mean_hyperdegree = static_cast<double>(edge_members_.size()) / n_;
    s.mean_edge_size =
        s.edge_count ? static_cast<double>(edge_members_.size()) / s.edge_count : 0.0;

    // neighbor lists once; everything clique-expansion-related reads them
    std::vector<std::vector<node_id>> nbr(n_);
#pragma omp parallel for schedule(dynamic, 64)
    for (std::int64_t v = 0; v < static_cast<std::int64_t>(n_); ++v)
        nbr[v] = neighbors(static_cast<node_id>(v));

    std::size_t degree_sum = 0;
    for (const auto& list : nbr)
        degree_sum += list.size();
    s.mean_degree = static_cast<double>(degree_sum) / n_;
    s.link_density = n_ > 1 ? static_cast<double>(degree_sum) / (static_cast<double>(n_) * (n_ - 1))
                            : 0.0;

    std::vector<double> local(n_, 0.0);
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t v = 0; v < static_cast<std::int64_t>(n_); ++v) {
        const auto& list = nbr[v];
        if (list.size() < 2)
            continue;
        std::size_t links = 0;
        for (std::size_t i = 0; i < list.size(); ++i)
            for (std::size_t j = i + 1; j < list.size(); ++j)
                if (std::binary_search(nbr[list[i]].begin(), nbr[list[i]].end(), list[j]))
                    ++links;
        local[v] = 2.0 * links / (static_cast<double>(list.size()) * (list.size() - 1));
    }
    double cl = 0.0;
    for (double c : local)
        cl += c;
    s.clustering = cl / n_;

    auto components = connected_components();
    std::size_t best = 0;
    for (std::size_t i = 1; i < components.size(); ++i)
        if (components[i].size() > components[best].size())
            best = i;
    const auto& giant = components.empty() ? std::vector<node_id>{} : components[best];

    if (giant.size() > 1) {
        std::vector<std::uint64_t> dist_sum(giant.size(), 0);
        std::vector<std::size_t> ecc(giant.size(), 0);
#pragma omp parallel for schedule(dynamic, 8)
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(giant.size()); ++i) {
            std::vector<std::uint32_t> dist(n_, UINT32_MAX);
            std::queue<node_id> q;
            dist[giant[i]] = 0;
            q.push(giant[i]);
            while (!q.empty()) {
                node_id x = q.front();
                q.pop();
                for (node_id u : nbr[x])
                    if (dist[u] == UINT32_MAX) {
                        dist[u] = dist[x] + 1;
                        q.push(u);
                    }
            }
            for (node_id u : giant)
                if (dist[u] != UINT32_MAX) {
                    dist_sum[i] += dist[u];
                    ecc[i] = std::max<std::size_t>(ecc[i], dist[u]);
                }
        }
        std::uint64_t total = 0;
        for (std::uint64_t d : dist_sum)
            total += d;
        for (std::size_t e : ecc)
            s.diameter = std::max(s.diameter, e);
        const double pairs = static_cast<double>(giant.size()) * (giant.size() - 1);
        s.mean_shortest_path = static_cast<double>(total) / pairs;
    }
    return s;
}

std::vector<std::vector<std::uint32_t>> Hypergraph::incidence_matrix() const {
    if (n_ > 1000 || edge_count() > 1000)
        throw std::length_error("dense incidence view limited to n, m <= 1000");
    std::vector<std::vector<std::uint32_t>> c(n_, std::vector<std::uint32_t>(edge_count(), 0));
    for (edge_id e = 0; e < edge_count(); ++e)
        for (node_id v : edge_members(e))
            c[v][e] = 1;
    return c;
}

std::vector<std::vector<std::uint32_t>> Hypergraph::adjacency_matrix() const {
    if (n_ > 1000)
        throw std::length_error("dense adjacency view limited to n <= 1000");
    std::vector<std::vector<std::uint32_t>> a(n_, std::vector<std::uint32_t>(n_, 0));
    for (edge_id e = 0; e < edge_count(); ++e) {
        auto m = edge_members(e);
        for (std::size_t i = 0; i < m.size(); ++i)
            for (std::size_t j = i + 1; j < m.size(); ++j) {
                ++a[m[i]][m[j]];
                ++a[m[j]][m[i]];
            }
    }
    return a;
}

} // namespace hyperim
