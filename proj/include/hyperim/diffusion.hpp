// diffusion.hpp - discrete-time SI spreading with contact-process dynamics:
// every infected node interacts through one uniformly chosen incident
// hyperedge per step and infects each susceptible member with probability
// beta. Rounds are synchronous; nodes infected during step t first act at
// step t+1.
#pragma once

#include "hyperim/hypergraph.hpp"
#include "hyperim/rng.hpp"
#include "hyperim/types.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace hyperim {

struct SpreadParams {
    double beta = 0.0;         // per-contact infection probability, in [0,1]
    std::uint32_t horizon = 0; // number of steps T
    std::uint64_t seed = 0;    // master seed
};

struct SpreadResult {
    std::vector<node_id> infected;       // sorted, state at termination
    std::vector<std::uint32_t> per_step; // length horizon+1, per_step[0] = |seeds|
};

struct SpreadEstimate {
    double mean = 0.0;
    double std_dev = 0.0; // population standard deviation over runs
};

struct OverlapReport {
    std::vector<double> neighbor_overlaps; // one averaged value per sampled pair
    std::vector<double> random_overlaps;
};

// Randomness contract of simulate(). All draws are keyed so that coupled
// comparisons (same seed, different seed set or beta) stay aligned:
//   edge pick of node v at step t:   below(derive(seed, kEdgePick, v, t), d_H(v))
//   coin of actor v on target u at t: coin(derive(seed, kInfectCoin, v, t, u), beta)
// Actors iterate in ascending node id; edge members in stored (ascending)
// order; a coin is flipped for every member still susceptible at the start of
// the step. Once every node is infected the remaining steps are recorded as a
// flat tail without consuming randomness.
namespace sim_keys {
inline constexpr std::uint64_t kEdgePick = 0x11;
inline constexpr std::uint64_t kInfectCoin = 0x12;
inline constexpr std::uint64_t kRunStream = 0x13;
} // namespace sim_keys

// Stream seed of Monte-Carlo run `run` under master seed `seed`.
constexpr std::uint64_t run_stream_seed(std::uint64_t seed, std::uint64_t run) noexcept {
    return rng::derive(seed, sim_keys::kRunStream, run);
}

// One realization from the given seed set. `stream_seed` addresses the keyed
// draws above. Throws std::invalid_argument on empty seeds, invalid ids or
// beta outside [0,1].
SpreadResult simulate(const Hypergraph& h, std::span<const node_id> seeds, double beta,
                      std::uint32_t horizon, std::uint64_t stream_seed);

inline SpreadResult simulate(const Hypergraph& h, std::span<const node_id> seeds,
                             const SpreadParams& params) {
    return simulate(h, seeds, params.beta, params.horizon, params.seed);
}

// Mean and population std of the outbreak size over `runs` independent
// realizations; run i uses stream run_stream_seed(params.seed, i). Runs
// execute in parallel when OpenMP is enabled; the reduction is fixed-order,
// so results are identical to the serial reference.
SpreadEstimate estimate_spread(const Hypergraph& h, std::span<const node_id> seeds,
                               const SpreadParams& params, std::uint32_t runs);

// Influence overlap |I_T(a) cap I_T(b)| / n of single-seed runs, averaged
// over `runs_per_pair` repetitions, for pair_count uniformly sampled
// adjacent pairs and pair_count uniformly sampled random distinct pairs.
// Throws std::invalid_argument when the hypergraph has no adjacent pair.
OverlapReport overlap_experiment(const Hypergraph& h, std::size_t pair_count,
                                 const SpreadParams& params, std::uint32_t runs_per_pair);

namespace serial {
// Reference implementations: plain loops, no OpenMP. Kept for equivalence
// tests and for the kernel benchmark.
SpreadEstimate estimate_spread(const Hypergraph& h, std::span<const node_id> seeds,
                               const SpreadParams& params, std::uint32_t runs);
OverlapReport overlap_experiment(const Hypergraph& h, std::size_t pair_count,
                                 const SpreadParams& params, std::uint32_t runs_per_pair);
} // namespace serial

} // namespace hyperim
