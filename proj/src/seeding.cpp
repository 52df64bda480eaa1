#include "hyperim/seeding.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hyperim {

namespace {

constexpr std::uint64_t kHrrRoot = 0x21;
constexpr std::uint64_t kHrrEdge = 0x22;
constexpr std::uint64_t kHrrSample = 0x23;
constexpr std::uint64_t kGreedyRound = 0x24;

void check_k(const Hypergraph& h, std::size_t k) {
    if (k < 1 || k > h.node_count())
        throw std::invalid_argument("k out of range [1, n]");
}

// ids ranked by score descending, id ascending on ties
template <typename Score>
std::vector<node_id> rank_by(const std::vector<Score>& score, std::size_t k) {
    std::vector<node_id> ids(score.size());
    std::iota(ids.begin(), ids.end(), 0);
    std::sort(ids.begin(), ids.end(), [&](node_id a, node_id b) {
        if (score[a] != score[b])
            return score[a] > score[b];
        return a < b;
    });
    ids.resize(k);
    return ids;
}

// shared skeleton of HDD / HSD; `single` switches the discount rule
SeedSet discount_seeder(const Hypergraph& h, std::size_t k, bool single) {
    check_k(h, k);
    const node_id n = h.node_count();
    auto deg = h.degrees();
    std::vector<std::int64_t> adaptive(deg.begin(), deg.end());
    std::vector<std::uint8_t> in_s(n, 0);

    SeedSet out;
    out.algorithm = single ? "hsd" : "hdd";
    out.nodes.reserve(k);
    for (std::size_t round = 0; round < k; ++round) {
        node_id best = 0;
        bool found = false;
        for (node_id v = 0; v < n; ++v)
            if (!in_s[v] && (!found || adaptive[v] > adaptive[best])) {
                best = v;
                found = true;
            }
        in_s[best] = 1;
        out.nodes.push_back(best);
        for (node_id q : h.neighbors(best)) {
            if (in_s[q])
                continue;
            if (single) {
                adaptive[q] -= 1;
            } else {
                std::int64_t seeds_adjacent = 0;
                for (node_id u : h.neighbors(q))
                    seeds_adjacent += in_s[u];
                adaptive[q] -= seeds_adjacent;
            }
        }
    }
    return out;
}

// root from root_key; edge e survives iff coin(derive(edge_key, e), beta)
HrrSample hrr_impl(const Hypergraph& h, double beta, std::uint64_t root_key,
                   std::uint64_t edge_key) {
    const node_id n = h.node_count();
    HrrSample sample;
    sample.root = static_cast<node_id>(rng::keyed_below(root_key, n));

    std::vector<std::uint8_t> node_seen(n, 0);
    std::vector<std::uint8_t> edge_seen(h.edge_count(), 0);
    std::vector<node_id> stack{sample.root};
    node_seen[sample.root] = 1;
    while (!stack.empty()) {
        node_id v = stack.back();
        stack.pop_back();
        sample.members.push_back(v);
        for (edge_id e : h.incident_edges(v)) {
            if (edge_seen[e])
                continue;
            edge_seen[e] = 1;
            if (!rng::keyed_coin(rng::derive(edge_key, e), beta))
                continue;
            for (node_id u : h.edge_members(e))
                if (!node_seen[u]) {
                    node_seen[u] = 1;
                    stack.push_back(u);
                }
        }
    }
    std::sort(sample.members.begin(), sample.members.end());
    return sample;
}

std::vector<HrrSample> hrr_batch_impl(const Hypergraph& h, double beta, std::size_t eta,
                                      std::uint64_t seed, HrisPruning pruning, bool parallel) {
    if (eta < 1)
        throw std::invalid_argument("eta must be >= 1");
    if (!(beta >= 0.0 && beta <= 1.0))
        throw std::invalid_argument("beta outside [0,1]");
    const std::uint64_t shared_edge_key = rng::derive(seed, kHrrEdge);
    std::vector<HrrSample> samples(eta);
#pragma omp parallel for schedule(dynamic, 8) if (parallel)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(eta); ++i) {
        const std::uint64_t si = rng::derive(seed, kHrrSample, i);
        const std::uint64_t edge_key =
            pruning == HrisPruning::PerSample ? rng::derive(si, kHrrEdge) : shared_edge_key;
        samples[i] = hrr_impl(h, beta, rng::derive(si, kHrrRoot), edge_key);
    }
    return samples;
}

} // namespace

SeedSet seed_degree(const Hypergraph& h, std::size_t k) {
    check_k(h, k);
    SeedSet out;
    out.algorithm = "degree";
    out.nodes = rank_by(h.degrees(), k);
    return out;
}

SeedSet seed_hyperdegree(const Hypergraph& h, std::size_t k) {
    check_k(h, k);
    std::vector<std::size_t> score(h.node_count());
    for (node_id v = 0; v < h.node_count(); ++v)
        score[v] = h.hyperdegree(v);
    SeedSet out;
    out.algorithm = "hyperdegree";
    out.nodes = rank_by(score, k);
    return out;
}

SeedSet seed_hdd(const Hypergraph& h, std::size_t k) { return discount_seeder(h, k, false); }

SeedSet seed_hsd(const Hypergraph& h, std::size_t k) { return discount_seeder(h, k, true); }

HrrSample sample_hrr(const Hypergraph& h, double beta, std::uint64_t sample_seed) {
    if (!(beta >= 0.0 && beta <= 1.0))
        throw std::invalid_argument("beta outside [0,1]");
    return hrr_impl(h, beta, rng::derive(sample_seed, kHrrRoot), rng::derive(sample_seed, kHrrEdge));
}

std::vector<HrrSample> sample_hrr_batch(const Hypergraph& h, double beta, std::size_t eta,
                                        std::uint64_t seed, HrisPruning pruning) {
    return hrr_batch_impl(h, beta, eta, seed, pruning, true);
}

SeedSet seed_hris(const Hypergraph& h, std::size_t k, double beta, std::size_t eta,
                  std::uint64_t seed, HrisPruning pruning) {
    check_k(h, k);
    auto samples = sample_hrr_batch(h, beta, eta, seed, pruning);
    const node_id n = h.node_count();
    std::vector<std::uint8_t> alive(eta, 1);
    std::vector<std::uint8_t> in_s(n, 0);

    SeedSet out;
    out.algorithm = "hris";
    out.params = {{"eta", std::to_string(eta)},
                  {"pruning", pruning == HrisPruning::PerSample ? "per-sample" : "shared"}};
    while (out.nodes.size() < k) {
        std::vector<std::size_t> freq(n, 0);
        for (std::size_t i = 0; i < eta; ++i)
            if (alive[i])
                for (node_id u : samples[i].members)
                    ++freq[u];
        node_id best = 0;
        std::size_t best_freq = 0;
        for (node_id v = 0; v < n; ++v)
            if (!in_s[v] && freq[v] > best_freq) {
                best = v;
                best_freq = freq[v];
            }
        if (best_freq == 0)
            break; // samples exhausted; fall back to degree order
        in_s[best] = 1;
        out.nodes.push_back(best);
        for (std::size_t i = 0; i < eta; ++i)
            if (alive[i] &&
                std::binary_search(samples[i].members.begin(), samples[i].members.end(), best))
                alive[i] = 0;
    }
    if (out.nodes.size() < k)
        for (node_id v : rank_by(h.degrees(), h.node_count())) {
            if (out.nodes.size() == k)
                break;
            if (!in_s[v]) {
                in_s[v] = 1;
                out.nodes.push_back(v);
            }
        }
    return out;
}

std::vector<std::int64_t> hci_scores(const Hypergraph& h, std::size_t radius) {
    const node_id n = h.node_count();
    std::vector<std::int64_t> score(n, 0);
#pragma omp parallel for schedule(dynamic, 64)
    for (std::int64_t v = 0; v < static_cast<std::int64_t>(n); ++v) {
        const auto own = static_cast<std::int64_t>(h.hyperdegree(static_cast<node_id>(v))) - 1;
        std::int64_t frontier_sum = 0;
        for (node_id u : h.ball_frontier(static_cast<node_id>(v), radius))
            frontier_sum += static_cast<std::int64_t>(h.hyperdegree(u)) - 1;
        score[v] = own * frontier_sum;
    }
    return score;
}

SeedSet seed_hci(const Hypergraph& h, std::size_t k, std::size_t radius) {
    check_k(h, k);
    if (radius < 1)
        throw std::invalid_argument("radius must be >= 1");
    SeedSet out;
    out.algorithm = "hci";
    out.params = {{"l", std::to_string(radius)}};
    out.nodes = rank_by(hci_scores(h, radius), k);
    return out;
}

SeedSet seed_greedy(const Hypergraph& h, std::size_t k, const SpreadParams& params,
                    std::uint32_t runs_per_eval) {
    check_k(h, k);
    if (runs_per_eval == 0)
        throw std::invalid_argument("runs_per_eval must be >= 1");
    if (!(params.beta >= 0.0 && params.beta <= 1.0))
        throw std::invalid_argument("beta outside [0,1]");
    const node_id n = h.node_count();
    std::vector<std::uint8_t> in_s(n, 0);

    SeedSet out;
    out.algorithm = "greedy";
    out.params = {{"runs_per_eval", std::to_string(runs_per_eval)}};
    out.nodes.reserve(k);
    for (std::size_t round = 0; round < k; ++round) {
        // common random numbers: one run-seed family shared by all candidates
        const std::uint64_t round_seed = rng::derive(params.seed, kGreedyRound, round);
        std::vector<double> mean(n, -1.0);
#pragma omp parallel for schedule(dynamic, 4)
        for (std::int64_t v = 0; v < static_cast<std::int64_t>(n); ++v) {
            if (in_s[v])
                continue;
            std::vector<node_id> candidate(out.nodes);
            candidate.push_back(static_cast<node_id>(v));
            double total = 0.0;
            for (std::uint32_t r = 0; r < runs_per_eval; ++r)
                total += static_cast<double>(simulate(h, candidate, params.beta, params.horizon,
                                                      run_stream_seed(round_seed, r))
                                                 .infected.size());
            mean[v] = total / runs_per_eval;
        }
        node_id best = 0;
        bool found = false;
        for (node_id v = 0; v < n; ++v)
            if (!in_s[v] && (!found || mean[v] > mean[best])) {
                best = v;
                found = true;
            }
        in_s[best] = 1;
        out.nodes.push_back(best);
    }
    return out;
}

namespace serial {

std::vector<HrrSample> sample_hrr_batch(const Hypergraph& h, double beta, std::size_t eta,
                                        std::uint64_t seed, HrisPruning pruning) {
    return hrr_batch_impl(h, beta, eta, seed, pruning, false);
}

std::vector<std::int64_t> hci_scores(const Hypergraph& h, std::size_t radius) {
    const node_id n = h.node_count();
    std::vector<std::int64_t> score(n, 0);
    for (node_id v = 0; v < n; ++v) {
        const auto own = static_cast<std::int64_t>(h.hyperdegree(v)) - 1;
        std::int64_t frontier_sum = 0;
        for (node_id u : h.ball_frontier(v, radius))
            frontier_sum += static_cast<std::int64_t>(h.hyperdegree(u)) - 1;
        score[v] = own * frontier_sum;
    }
    return score;
}

} // namespace serial

} // namespace hyperim
