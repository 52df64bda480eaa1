// synth.hpp - synthetic hypergraph generation (HyperCL-style): power-law
// hyperdegree weights, uniform edge sizes, edges filled by weight-proportional
// sampling without replacement.
#pragma once

#include "hyperim/hypergraph.hpp"
#include "hyperim/rng.hpp"
#include "hyperim/types.hpp"

#include <cstdint>
#include <vector>

namespace hyperim {

struct GeneratorConfig {
    std::size_t node_count = 0;
    std::size_t edge_count = 0;
    double theta = 2.0;    // power-law exponent of the hyperdegree weights
    std::size_t size_min = 2;
    std::size_t size_max = 25;
    std::uint64_t seed = 0;
};

// n i.i.d. draws from p(d) proportional to d^-theta on [d_min, d_max],
// via inverse-CDF on the discrete support.
std::vector<std::uint32_t> sample_hyperdegree_sequence(std::size_t n, double theta,
                                                       std::uint32_t d_min, std::uint32_t d_max,
                                                       rng::Stream& stream);

// m uniform edge sizes on [max(size_min,1), size_max]. size_max must lie in
// [1, node_count].
std::vector<std::uint32_t> sample_size_sequence(std::size_t m, std::size_t size_min,
                                                std::size_t size_max, std::size_t node_count,
                                                rng::Stream& stream);

// Fill each edge by sampling members proportional to their weight, skipping
// nodes already in the edge; every edge ends up with exactly its prescribed
// size, all members distinct. Throws std::runtime_error when an edge cannot
// be filled within 100 * size draws (pathological weight concentration).
std::vector<std::vector<node_id>> hypercl(const std::vector<std::uint32_t>& weights,
                                          const std::vector<std::uint32_t>& sizes,
                                          rng::Stream& stream);

Hypergraph generate(const GeneratorConfig& config);

// Population coefficient of variation (std / mean) of a sample.
double coefficient_of_variation(const std::vector<double>& values);

} // namespace hyperim
