#include "hyperim/diffusion.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hyperim {

namespace {

constexpr std::uint64_t kNeighborPair = 0x14;
constexpr std::uint64_t kRandomPair = 0x15;
constexpr std::uint64_t kPairList = 0x16;

double mean_of(const std::vector<double>& xs) {
    double s = 0.0;
    for (double x : xs)
        s += x;
    return s / xs.size();
}

double pop_std(const std::vector<double>& xs, double mean) {
    double s = 0.0;
    for (double x : xs)
        s += (x - mean) * (x - mean);
    return std::sqrt(s / xs.size());
}

// |I(a) cap I(b)| / n averaged over runs_per_pair coupled-free repetitions
double pair_overlap(const Hypergraph& h, node_id a, node_id b, const SpreadParams& params,
                    std::uint32_t runs, std::uint64_t pair_key) {
    const node_id sa[1] = {a};
    const node_id sb[1] = {b};
    double total = 0.0;
    for (std::uint32_t r = 0; r < runs; ++r) {
        auto ia = simulate(h, sa, params.beta, params.horizon, rng::derive(pair_key, r, 0));
        auto ib = simulate(h, sb, params.beta, params.horizon, rng::derive(pair_key, r, 1));
        std::vector<node_id> common;
        std::set_intersection(ia.infected.begin(), ia.infected.end(), ib.infected.begin(),
                              ib.infected.end(), std::back_inserter(common));
        total += static_cast<double>(common.size()) / h.node_count();
    }
    return total / runs;
}

struct PairSamples {
    std::vector<std::pair<node_id, node_id>> neighbor;
    std::vector<std::pair<node_id, node_id>> random;
};

PairSamples sample_pairs(const Hypergraph& h, std::size_t pair_count, std::uint64_t seed) {
    if (pair_count == 0)
        throw std::invalid_argument("pair_count must be >= 1");
    const node_id n = h.node_count();
    if (n < 2)
        throw std::invalid_argument("need at least two nodes for pair sampling");

    // flattenable list of unordered adjacent pairs: (v, u) with u > v
    std::vector<std::vector<node_id>> upper(n);
    std::vector<std::uint64_t> prefix(n + 1, 0);
    for (node_id v = 0; v < n; ++v) {
        auto nb = h.neighbors(v);
        auto it = std::upper_bound(nb.begin(), nb.end(), v);
        upper[v].assign(it, nb.end());
        prefix[v + 1] = prefix[v] + upper[v].size();
    }
    const std::uint64_t links = prefix[n];
    if (links == 0)
        throw std::invalid_argument("hypergraph has no adjacent pair");

    rng::Stream stream(rng::derive(seed, kPairList));
    PairSamples out;
    out.neighbor.reserve(pair_count);
    out.random.reserve(pair_count);
    for (std::size_t i = 0; i < pair_count; ++i) {
        const std::uint64_t idx = stream.below(links);
        const auto v = static_cast<node_id>(
            std::upper_bound(prefix.begin(), prefix.end(), idx) - prefix.begin() - 1);
        out.neighbor.emplace_back(v, upper[v][idx - prefix[v]]);
    }
    for (std::size_t i = 0; i < pair_count; ++i) {
        const auto a = static_cast<node_id>(stream.below(n));
        auto b = static_cast<node_id>(stream.below(n - 1));
        if (b >= a)
            ++b;
        out.random.emplace_back(a, b);
    }
    return out;
}

} // namespace

SpreadResult simulate(const Hypergraph& h, std::span<const node_id> seeds, double beta,
                      std::uint32_t horizon, std::uint64_t stream_seed) {
    if (seeds.empty())
        throw std::invalid_argument("empty seed set");
    if (!(beta >= 0.0 && beta <= 1.0))
        throw std::invalid_argument("beta outside [0,1]");
    const node_id n = h.node_count();

    std::vector<std::uint8_t> infected(n, 0);
    std::vector<node_id> active;
    for (node_id v : seeds) {
        if (v >= n)
            throw std::invalid_argument("seed id out of range");
        if (!infected[v]) {
            infected[v] = 1;
            active.push_back(v);
        }
    }
    std::sort(active.begin(), active.end());

    SpreadResult result;
    result.per_step.reserve(horizon + 1);
    result.per_step.push_back(static_cast<std::uint32_t>(active.size()));

    for (std::uint32_t t = 1; t <= horizon; ++t) {
        if (active.size() == n) { // flat tail, nothing left to infect
            result.per_step.push_back(static_cast<std::uint32_t>(n));
            continue;
        }
        std::vector<node_id> fresh;
        for (node_id v : active) {
            auto edges = h.incident_edges(v);
            if (edges.empty())
                continue;
            const auto pick =
                rng::keyed_below(rng::derive(stream_seed, sim_keys::kEdgePick, v, t), edges.size());
            for (node_id u : h.edge_members(edges[pick])) {
                if (infected[u])
                    continue;
                if (rng::keyed_coin(rng::derive(stream_seed, sim_keys::kInfectCoin, v, t, u),
                                    beta)) {
                    infected[u] = 1;
                    fresh.push_back(u);
                }
            }
        }
        std::sort(fresh.begin(), fresh.end());
        const auto mid = static_cast<std::ptrdiff_t>(active.size());
        active.insert(active.end(), fresh.begin(), fresh.end());
        std::inplace_merge(active.begin(), active.begin() + mid, active.end());
        result.per_step.push_back(static_cast<std::uint32_t>(active.size()));
    }
    result.infected = std::move(active);
    return result;
}

SpreadEstimate estimate_spread(const Hypergraph& h, std::span<const node_id> seeds,
                               const SpreadParams& params, std::uint32_t runs) {
    if (runs == 0)
        throw std::invalid_argument("runs must be >= 1");
    std::vector<double> sizes(runs);
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t r = 0; r < static_cast<std::int64_t>(runs); ++r) {
        auto one = simulate(h, seeds, params.beta, params.horizon,
                            run_stream_seed(params.seed, static_cast<std::uint64_t>(r)));
        sizes[r] = static_cast<double>(one.infected.size());
    }
    const double mean = mean_of(sizes);
    return {mean, pop_std(sizes, mean)};
}

OverlapReport overlap_experiment(const Hypergraph& h, std::size_t pair_count,
                                 const SpreadParams& params, std::uint32_t runs_per_pair) {
    if (runs_per_pair == 0)
        throw std::invalid_argument("runs_per_pair must be >= 1");
    auto pairs = sample_pairs(h, pair_count, params.seed);
    OverlapReport report;
    report.neighbor_overlaps.resize(pair_count);
    report.random_overlaps.resize(pair_count);
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(pair_count); ++i) {
        const auto [a, b] = pairs.neighbor[i];
        report.neighbor_overlaps[i] = pair_overlap(
            h, a, b, params, runs_per_pair, rng::derive(params.seed, kNeighborPair, i));
    }
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(pair_count); ++i) {
        const auto [a, b] = pairs.random[i];
        report.random_overlaps[i] = pair_overlap(h, a, b, params, runs_per_pair,
                                                 rng::derive(params.seed, kRandomPair, i));
    }
    return report;
}

namespace serial {

SpreadEstimate estimate_spread(const Hypergraph& h, std::span<const node_id> seeds,
                               const SpreadParams& params, std::uint32_t runs) {
    if (runs == 0)
        throw std::invalid_argument("runs must be >= 1");
    std::vector<double> sizes(runs);
    for (std::uint32_t r = 0; r < runs; ++r)
        sizes[r] = static_cast<double>(
            simulate(h, seeds, params.beta, params.horizon, run_stream_seed(params.seed, r))
                .infected.size());
    const double mean = mean_of(sizes);
    return {mean, pop_std(sizes, mean)};
}

OverlapReport overlap_experiment(const Hypergraph& h, std::size_t pair_count,
                                 const SpreadParams& params, std::uint32_t runs_per_pair) {
    if (runs_per_pair == 0)
        throw std::invalid_argument("runs_per_pair must be >= 1");
    auto pairs = sample_pairs(h, pair_count, params.seed);
    OverlapReport report;
    report.neighbor_overlaps.resize(pair_count);
    report.random_overlaps.resize(pair_count);
    for (std::size_t i = 0; i < pair_count; ++i) {
        report.neighbor_overlaps[i] =
            pair_overlap(h, pairs.neighbor[i].first, pairs.neighbor[i].second, params,
                         runs_per_pair, rng::derive(params.seed, kNeighborPair, i));
        report.random_overlaps[i] =
            pair_overlap(h, pairs.random[i].first, pairs.random[i].second, params, runs_per_pair,
                         rng::derive(params.seed, kRandomPair, i));
    }
    return report;
}

} // namespace serial

} // namespace hyperim
