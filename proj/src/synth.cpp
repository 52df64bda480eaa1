#include "hyperim/synth.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace hyperim {

std::vector<std::uint32_t> sample_hyperdegree_sequence(std::size_t n, double theta,
                                                       std::uint32_t d_min, std::uint32_t d_max,
                                                       rng::Stream& stream) {
    if (d_min < 1 || d_min > d_max)
        throw std::invalid_argument("invalid hyperdegree bounds");

    // normalized CDF of p(d) proportional to d^-theta on [d_min, d_max]
    std::vector<double> cdf(d_max - d_min + 1);
    double total = 0.0;
    for (std::size_t i = 0; i < cdf.size(); ++i) {
        total += std::pow(static_cast<double>(d_min + i), -theta);
        cdf[i] = total;
    }
    for (double& c : cdf)
        c /= total;

    std::vector<std::uint32_t> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double u = stream.unit();
        auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        if (it == cdf.end())
            --it;
        out[i] = d_min + static_cast<std::uint32_t>(it - cdf.begin());
    }
    return out;
}

std::vector<std::uint32_t> sample_size_sequence(std::size_t m, std::size_t size_min,
                                                std::size_t size_max, std::size_t node_count,
                                                rng::Stream& stream) {
    const std::size_t lo = std::max<std::size_t>(size_min, 1);
    if (size_max < 1)
        throw std::invalid_argument("size_max must be >= 1");
    if (size_max > node_count)
        throw std::invalid_argument("size_max exceeds node count");
    if (lo > size_max)
        throw std::invalid_argument("size_min exceeds size_max");

    std::vector<std::uint32_t> out(m);
    for (std::size_t i = 0; i < m; ++i)
        out[i] = static_cast<std::uint32_t>(lo + stream.below(size_max - lo + 1));
    return out;
}

std::vector<std::vector<node_id>> hypercl(const std::vector<std::uint32_t>& weights,
                                          const std::vector<std::uint32_t>& sizes,
                                          rng::Stream& stream) {
    const std::size_t n = weights.size();
    if (n == 0)
        throw std::invalid_argument("empty weight sequence");
    std::vector<std::uint64_t> cum(n);
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < n; ++i) {
        total += weights[i];
        cum[i] = total;
    }
    if (total == 0)
        throw std::invalid_argument("all hyperdegrees zero");

    std::vector<std::vector<node_id>> edges(sizes.size());
    std::vector<std::uint8_t> used(n, 0);
    for (std::size_t j = 0; j < sizes.size(); ++j) {
        const std::size_t target = sizes[j];
        if (target < 1 || target > n)
            throw std::invalid_argument("edge size " + std::to_string(target) + " out of range");
        auto& edge = edges[j];
        edge.reserve(target);
        const std::size_t cap = 100 * target;
        for (std::size_t attempt = 0; edge.size() < target; ++attempt) {
            if (attempt >= cap) {
                for (node_id v : edge)
                    used[v] = 0;
                throw std::runtime_error("hypercl retry cap exceeded on edge " +
                                         std::to_string(j));
            }
            const std::uint64_t r = stream.below(total);
            const auto v = static_cast<node_id>(
                std::upper_bound(cum.begin(), cum.end(), r) - cum.begin());
            if (!used[v]) {
                used[v] = 1;
                edge.push_back(v);
            }
        }
        for (node_id v : edge)
            used[v] = 0;
        std::sort(edge.begin(), edge.end());
    }
    return edges;
}

Hypergraph generate(const GeneratorConfig& config) {
    if (!(config.theta > 1.0))
        throw std::invalid_argument("theta must exceed 1");
    if (config.node_count == 0)
        throw std::invalid_argument("node_count must be >= 1");
    rng::Stream stream(config.seed);
    const auto d_max = static_cast<std::uint32_t>(std::max<std::size_t>(config.edge_count, 1));
    auto weights = sample_hyperdegree_sequence(config.node_count, config.theta, 1, d_max, stream);
    auto sizes = sample_size_sequence(config.edge_count, config.size_min, config.size_max,
                                      config.node_count, stream);
    return Hypergraph::build(static_cast<node_id>(config.node_count),
                             hypercl(weights, sizes, stream), false);
}

double coefficient_of_variation(const std::vector<double>& values) {
    if (values.empty())
        throw std::invalid_argument("empty sample");
    double mean = 0.0;
    for (double v : values)
        mean += v;
    mean /= values.size();
    if (mean == 0.0)
        throw std::invalid_argument("zero mean");
    double var = 0.0;
    for (double v : values)
        var += (v - mean) * (v - mean);
    return std::sqrt(var / values.size()) / mean;
}

} // namespace hyperim
