// seeding.hpp - seed-selection algorithms. All seeders share one contract:
// given a hypergraph and a budget K, return K distinct nodes in selection
// order, deterministically for a fixed seed. Ties always break toward the
// lower node id.
#pragma once

#include "hyperim/diffusion.hpp"
#include "hyperim/hypergraph.hpp"
#include "hyperim/types.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace hyperim {

struct SeedSet {
    std::vector<node_id> nodes; // selection order, no duplicates
    std::string algorithm;
    std::map<std::string, std::string> params;
};

// Reverse-reachable sample: the connected component of a random root in a
// hypergraph whose edges each survive independently with probability beta.
struct HrrSample {
    node_id root = 0;
    std::vector<node_id> members; // sorted, contains root
};

// Top-K by degree (distinct co-members).
SeedSet seed_degree(const Hypergraph& h, std::size_t k);

// Top-K by hyperdegree (incident edge count).
SeedSet seed_hyperdegree(const Hypergraph& h, std::size_t k);

// Adaptive degree discount: after each selection, every neighbor q of the new
// seed loses |N_S(q)| (its current number of seed neighbors) from its
// adaptive degree.
SeedSet seed_hdd(const Hypergraph& h, std::size_t k);

// Single discount: each affected neighbor loses exactly 1 per selection.
SeedSet seed_hsd(const Hypergraph& h, std::size_t k);

HrrSample sample_hrr(const Hypergraph& h, double beta, std::uint64_t sample_seed);

enum class HrisPruning {
    PerSample, // every sample re-prunes the hypergraph independently (default)
    Shared,    // one pruning shared by all samples, for A/B comparison
};

// eta reverse-reachable samples; sample i derives its randomness from
// (seed, i), so batches are order-independent and parallel-safe.
std::vector<HrrSample> sample_hrr_batch(const Hypergraph& h, double beta, std::size_t eta,
                                        std::uint64_t seed,
                                        HrisPruning pruning = HrisPruning::PerSample);

// Greedy coverage of eta reverse-reachable samples: repeatedly take the node
// present in the most remaining samples, then drop the samples it covers.
// If the samples run out before K picks, remaining slots fill by degree order.
SeedSet seed_hris(const Hypergraph& h, std::size_t k, double beta, std::size_t eta,
                  std::uint64_t seed, HrisPruning pruning = HrisPruning::PerSample);

// Collective-influence score at ball radius l:
//   (d_H(v) - 1) * sum over frontier nodes u at distance l of (d_H(u) - 1)
std::vector<std::int64_t> hci_scores(const Hypergraph& h, std::size_t radius);

// Top-K by collective-influence score (static ranking).
SeedSet seed_hci(const Hypergraph& h, std::size_t k, std::size_t radius);

// Monte-Carlo greedy: K rounds, each adding the candidate with the largest
// estimated spread of S + {v}. All candidates of a round share one derived
// seed (common random numbers), so comparisons are low-variance.
SeedSet seed_greedy(const Hypergraph& h, std::size_t k, const SpreadParams& params,
                    std::uint32_t runs_per_eval);

namespace serial {
std::vector<HrrSample> sample_hrr_batch(const Hypergraph& h, double beta, std::size_t eta,
                                        std::uint64_t seed,
                                        HrisPruning pruning = HrisPruning::PerSample);
std::vector<std::int64_t> hci_scores(const Hypergraph& h, std::size_t radius);
} // namespace serial

} // namespace hyperim
