#include "oracles.hpp"

#include "fixtures.hpp"
#include "hyperim/diffusion.hpp"
#include "hyperim/experiment.hpp"
#include "hyperim/io.hpp"
#include "hyperim/seeding.hpp"
#include "hyperim/synth.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

namespace oracle {

namespace {

using hyperim::edge_id;

[[noreturn]] void fail(int instance, const std::string& what) {
    throw std::runtime_error("instance " + std::to_string(instance) + ": " + what);
}

std::vector<std::vector<node_id>> normalize(const std::vector<std::vector<node_id>>& edges) {
    std::vector<std::vector<node_id>> out(edges.size());
    for (std::size_t e = 0; e < edges.size(); ++e) {
        out[e] = edges[e];
        std::sort(out[e].begin(), out[e].end());
        out[e].erase(std::unique(out[e].begin(), out[e].end()), out[e].end());
    }
    return out;
}

} // namespace

std::map<std::uint32_t, double> exact_state_distribution(const Hypergraph& h,
                                                         std::span<const node_id> seeds,
                                                         double beta, std::uint32_t horizon) {
    const node_id n = h.node_count();
    if (n > 20)
        throw std::invalid_argument("exact oracle limited to n <= 20");
    std::uint32_t start = 0;
    for (node_id v : seeds)
        start |= 1u << v;

    std::map<std::uint32_t, double> dist{{start, 1.0}};
    for (std::uint32_t t = 1; t <= horizon; ++t) {
        std::map<std::uint32_t, double> next;
        for (const auto& [mask, p] : dist) {
            std::vector<node_id> actors;
            for (node_id v = 0; v < n; ++v)
                if ((mask >> v & 1u) && h.hyperdegree(v) > 0)
                    actors.push_back(v);
            if (actors.empty()) {
                next[mask] += p;
                continue;
            }
            std::vector<edge_id> chosen(actors.size());
            // enumerate every joint edge choice, then every coin outcome
            auto recurse = [&](auto&& self, std::size_t idx, double cp) -> void {
                if (idx == actors.size()) {
                    std::vector<std::uint32_t> contacts(n, 0);
                    for (std::size_t a = 0; a < actors.size(); ++a)
                        for (node_id u : h.edge_members(chosen[a]))
                            if (!(mask >> u & 1u))
                                ++contacts[u];
                    std::vector<node_id> touched;
                    for (node_id u = 0; u < n; ++u)
                        if (contacts[u] > 0)
                            touched.push_back(u);
                    const auto subsets = std::size_t{1} << touched.size();
                    for (std::size_t sub = 0; sub < subsets; ++sub) {
                        double q = 1.0;
                        std::uint32_t added = 0;
                        for (std::size_t j = 0; j < touched.size(); ++j) {
                            const double p_inf =
                                1.0 - std::pow(1.0 - beta, static_cast<double>(contacts[touched[j]]));
                            if (sub >> j & 1u) {
                                q *= p_inf;
                                added |= 1u << touched[j];
                            } else {
                                q *= 1.0 - p_inf;
                            }
                        }
                        if (q > 0.0)
                            next[mask | added] += p * cp * q;
                    }
                    return;
                }
                const auto edges = h.incident_edges(actors[idx]);
                for (edge_id e : edges) {
                    chosen[idx] = e;
                    self(self, idx + 1, cp / static_cast<double>(edges.size()));
                }
            };
            recurse(recurse, 0, 1.0);
        }
        dist = std::move(next);
    }
    return dist;
}

double exact_expected_spread(const Hypergraph& h, std::span<const node_id> seeds, double beta,
                             std::uint32_t horizon) {
    double expected = 0.0;
    for (const auto& [mask, p] : exact_state_distribution(h, seeds, beta, horizon))
        expected += p * static_cast<double>(std::popcount(mask));
    return expected;
}

std::vector<double> exact_infection_marginals(const Hypergraph& h, std::span<const node_id> seeds,
                                              double beta, std::uint32_t horizon) {
    std::vector<double> marginal(h.node_count(), 0.0);
    for (const auto& [mask, p] : exact_state_distribution(h, seeds, beta, horizon))
        for (node_id v = 0; v < h.node_count(); ++v)
            if (mask >> v & 1u)
                marginal[v] += p;
    return marginal;
}

DiscountResult naive_discount(const std::vector<std::vector<node_id>>& edges, node_id n,
                              std::size_t k, bool single) {
    std::vector<std::set<node_id>> nb(n);
    for (const auto& e : edges)
        for (node_id u : e)
            for (node_id w : e)
                if (u != w)
                    nb[u].insert(w);

    std::vector<long long> adaptive(n);
    for (node_id v = 0; v < n; ++v)
        adaptive[v] = static_cast<long long>(nb[v].size());

    DiscountResult out;
    std::set<node_id> s;
    for (std::size_t round = 0; round < k; ++round) {
        node_id best = 0;
        bool found = false;
        for (node_id v = 0; v < n; ++v)
            if (!s.count(v) && (!found || adaptive[v] > adaptive[best])) {
                best = v;
                found = true;
            }
        s.insert(best);
        out.seeds.push_back(best);
        for (node_id q : nb[best]) {
            if (s.count(q))
                continue;
            long long in_s = 0;
            for (node_id w : nb[q])
                in_s += s.count(w);
            if (in_s != 1)
                out.all_single_discounts = false;
            const long long delta = single ? 1 : in_s;
            if (delta < 0)
                out.adaptive_monotone = false;
            adaptive[q] -= delta;
        }
    }
    return out;
}

std::vector<node_id> reference_simulate(const std::vector<std::vector<node_id>>& edges, node_id n,
                                        const std::vector<node_id>& seeds, double beta,
                                        std::uint32_t horizon, std::uint64_t stream_seed) {
    namespace rng = hyperim::rng;
    namespace keys = hyperim::sim_keys;
    const auto norm = normalize(edges);
    std::vector<std::vector<std::size_t>> incident(n);
    for (std::size_t e = 0; e < norm.size(); ++e)
        for (node_id u : norm[e])
            incident[u].push_back(e);

    std::set<node_id> infected(seeds.begin(), seeds.end());
    for (std::uint32_t t = 1; t <= horizon; ++t) {
        const std::set<node_id> snapshot = infected;
        for (node_id v : snapshot) {
            const auto& inc = incident[v];
            if (inc.empty())
                continue;
            const auto pick =
                rng::keyed_below(rng::derive(stream_seed, keys::kEdgePick, v, t), inc.size());
            for (node_id u : norm[inc[pick]])
                if (!snapshot.count(u) &&
                    rng::keyed_coin(rng::derive(stream_seed, keys::kInfectCoin, v, t, u), beta))
                    infected.insert(u);
        }
    }
    return {infected.begin(), infected.end()};
}

void check_hypergraph_properties(int instances) {
    hyperim::rng::Stream stream(0xA11CE);
    for (int i = 0; i < instances; ++i) {
        const auto inst = fixtures::random_hypergraph(stream);
        const auto& h = inst.h;
        const auto norm = normalize(inst.raw_edges);
        const node_id n = inst.n;

        if (h.edge_count() != norm.size())
            fail(i, "edge count mismatch");
        std::size_t handles_edges = 0;
        for (edge_id e = 0; e < h.edge_count(); ++e) {
            auto m = h.edge_members(e);
            if (!std::equal(m.begin(), m.end(), norm[e].begin(), norm[e].end()))
                fail(i, "edge members differ from normalized input");
            handles_edges += m.size();
        }
        std::size_t handles_nodes = 0;
        for (node_id v = 0; v < n; ++v)
            handles_nodes += h.hyperdegree(v);
        if (handles_nodes != handles_edges)
            fail(i, "handle-count identity violated");

        // transpose round-trip
        std::vector<std::vector<node_id>> rebuilt(h.edge_count());
        for (node_id v = 0; v < n; ++v)
            for (edge_id e : h.incident_edges(v))
                rebuilt[e].push_back(v);
        for (edge_id e = 0; e < h.edge_count(); ++e)
            if (rebuilt[e] != norm[e])
                fail(i, "transpose round-trip mismatch");

        // neighbor sets against a scratch recomputation
        std::vector<std::set<node_id>> nb(n);
        for (const auto& e : norm)
            for (node_id u : e)
                for (node_id w : e)
                    if (u != w)
                        nb[u].insert(w);
        for (node_id v = 0; v < n; ++v) {
            const auto got = h.neighbors(v);
            if (!std::equal(got.begin(), got.end(), nb[v].begin(), nb[v].end()))
                fail(i, "neighbors mismatch");
            if (h.degree(v) != nb[v].size())
                fail(i, "degree != |neighbors|");
        }

        for (node_id u = 0; u < n; ++u)
            for (node_id w = u; w < n; ++w) {
                std::size_t shared = 0;
                for (const auto& e : norm)
                    if (std::binary_search(e.begin(), e.end(), u) &&
                        std::binary_search(e.begin(), e.end(), w))
                        ++shared;
                const std::size_t expect = u == w ? 0 : shared;
                if (h.adjacency_count(u, w) != expect || h.adjacency_count(w, u) != expect)
                    fail(i, "adjacency_count mismatch");
            }

        // frontier partition of each component
        const auto comps = h.connected_components();
        for (int probe = 0; probe < 3; ++probe) {
            const auto v = static_cast<node_id>(stream.below(n));
            std::vector<node_id> unioned;
            for (std::size_t l = 0;; ++l) {
                auto frontier = h.ball_frontier(v, l);
                if (frontier.empty())
                    break;
                for (node_id u : frontier)
                    unioned.push_back(u);
            }
            std::vector<node_id> sorted(unioned);
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
                fail(i, "ball frontiers overlap");
            for (const auto& comp : comps)
                if (std::binary_search(comp.begin(), comp.end(), v) && comp != sorted)
                    fail(i, "frontier union != component");
        }

        const auto st = h.stats();
        if (std::abs(st.link_density - st.mean_degree / static_cast<double>(n - 1)) > 1e-9)
            fail(i, "link density identity violated");
    }
}

void check_diffusion_properties(int instances) {
    using namespace hyperim;
    rng::Stream stream(0xD1FF);
    for (int i = 0; i < instances; ++i) {
        const auto inst = fixtures::random_hypergraph(stream);
        const auto& h = inst.h;
        const node_id n = inst.n;
        const double beta = stream.unit();
        const auto horizon = static_cast<std::uint32_t>(stream.below(8));
        const std::uint64_t stream_seed = stream.next();

        std::set<node_id> seed_set;
        const std::size_t want = 1 + stream.below(3);
        while (seed_set.size() < std::min<std::size_t>(want, n))
            seed_set.insert(static_cast<node_id>(stream.below(n)));
        const std::vector<node_id> seeds(seed_set.begin(), seed_set.end());

        const auto r1 = simulate(h, seeds, beta, horizon, stream_seed);
        const auto r2 = simulate(h, seeds, beta, horizon, stream_seed);
        if (r1.infected != r2.infected || r1.per_step != r2.per_step)
            fail(i, "simulate not deterministic");

        if (r1.per_step.size() != horizon + 1)
            fail(i, "per_step length != horizon+1");
        if (r1.per_step.front() != seeds.size())
            fail(i, "per_step[0] != |seeds|");
        if (!std::is_sorted(r1.per_step.begin(), r1.per_step.end()))
            fail(i, "per_step decreases");
        if (r1.per_step.back() != r1.infected.size())
            fail(i, "last per_step != |infected|");

        const auto ref = reference_simulate(inst.raw_edges, n, seeds, beta, horizon, stream_seed);
        if (ref != r1.infected)
            fail(i, "simulate differs from set-based reference");

        // containment in components touched by seeds
        std::vector<std::uint8_t> allowed(n, 0);
        for (const auto& comp : h.connected_components())
            for (node_id s : seeds)
                if (std::binary_search(comp.begin(), comp.end(), s)) {
                    for (node_id u : comp)
                        allowed[u] = 1;
                    break;
                }
        for (node_id u : r1.infected)
            if (!allowed[u])
                fail(i, "infection escaped seed components");

        // pointwise seed monotonicity under the shared stream
        if (seeds.size() < n) {
            node_id extra = 0;
            while (seed_set.count(extra))
                ++extra;
            auto bigger = seeds;
            bigger.push_back(extra);
            const auto rb = simulate(h, bigger, beta, horizon, stream_seed);
            if (!std::includes(rb.infected.begin(), rb.infected.end(), r1.infected.begin(),
                               r1.infected.end()))
                fail(i, "seed monotonicity violated");
        }

        // pointwise beta monotonicity under the shared stream
        const double beta2 = beta + (1.0 - beta) * stream.unit();
        const auto rbeta = simulate(h, seeds, beta2, horizon, stream_seed);
        if (!std::includes(rbeta.infected.begin(), rbeta.infected.end(), r1.infected.begin(),
                           r1.infected.end()))
            fail(i, "beta monotonicity violated");

        const SpreadParams params{beta, horizon, stream_seed};
        const auto par = estimate_spread(h, seeds, params, 8);
        const auto ser = serial::estimate_spread(h, seeds, params, 8);
        if (par.mean != ser.mean || par.std_dev != ser.std_dev)
            fail(i, "parallel estimate differs from serial reference");
    }
}

void check_generator_properties(int instances) {
    using namespace hyperim;
    rng::Stream stream(0x6E6);
    for (int i = 0; i < instances; ++i) {
        GeneratorConfig c;
        c.node_count = 3 + stream.below(38);
        c.edge_count = 1 + stream.below(40);
        c.theta = 1.2 + 2.0 * stream.unit();
        c.size_max = 1 + stream.below(std::min<std::uint64_t>(c.node_count, 8));
        c.size_min = stream.below(c.size_max + 1);
        c.seed = stream.next();

        const auto h1 = generate(c);
        const auto h2 = generate(c);
        if (h1.edge_count() != h2.edge_count())
            fail(i, "generation not deterministic (edge count)");
        for (edge_id e = 0; e < h1.edge_count(); ++e) {
            auto a = h1.edge_members(e);
            auto b = h2.edge_members(e);
            if (!std::equal(a.begin(), a.end(), b.begin(), b.end()))
                fail(i, "generation not deterministic (members)");
        }

        // postcondition: hypercl output sizes equal the prescribed sequence
        rng::Stream replay(c.seed ^ 0x5eed);
        auto weights = sample_hyperdegree_sequence(c.node_count, c.theta, 1,
                                                   static_cast<std::uint32_t>(c.edge_count), replay);
        auto sizes = sample_size_sequence(c.edge_count, c.size_min, c.size_max, c.node_count,
                                          replay);
        auto edges = hypercl(weights, sizes, replay);
        if (edges.size() != sizes.size())
            fail(i, "hypercl edge count != |size_seq|");
        for (std::size_t j = 0; j < edges.size(); ++j) {
            if (edges[j].size() != sizes[j])
                fail(i, "hypercl edge size != prescribed size");
            for (std::size_t t = 1; t < edges[j].size(); ++t)
                if (edges[j][t - 1] >= edges[j][t])
                    fail(i, "hypercl edge members not distinct");
            for (node_id v : edges[j])
                if (v >= c.node_count)
                    fail(i, "hypercl member out of range");
        }

        const std::size_t lo = std::max<std::size_t>(c.size_min, 1);
        for (edge_id e = 0; e < h1.edge_count(); ++e)
            if (h1.edge_size(e) < lo || h1.edge_size(e) > c.size_max)
                fail(i, "generated edge size outside bounds");
    }
}

void check_prefix_consistency(int instances) {
    using namespace hyperim;
    rng::Stream stream(0x9EF1);
    for (int i = 0; i < instances; ++i) {
        const auto inst = fixtures::random_hypergraph(stream);
        const auto& h = inst.h;
        const node_id n = inst.n;
        const std::size_t k_max = 1 + stream.below(std::min<std::uint64_t>(n, 6));
        const std::size_t k = 1 + stream.below(k_max);
        const std::uint64_t seed = stream.next();
        const SpreadParams greedy_params{0.3, 3, seed};

        auto check = [&](const char* name, const std::vector<node_id>& full,
                         const std::vector<node_id>& part) {
            if (part.size() != k || full.size() != k_max)
                fail(i, std::string(name) + ": wrong seed-set length");
            if (!std::equal(part.begin(), part.end(), full.begin()))
                fail(i, std::string(name) + ": K seeds are not a prefix of K_max seeds");
        };
        check("degree", seed_degree(h, k_max).nodes, seed_degree(h, k).nodes);
        check("hyperdegree", seed_hyperdegree(h, k_max).nodes, seed_hyperdegree(h, k).nodes);
        check("hdd", seed_hdd(h, k_max).nodes, seed_hdd(h, k).nodes);
        check("hsd", seed_hsd(h, k_max).nodes, seed_hsd(h, k).nodes);
        check("hci", seed_hci(h, k_max, 1).nodes, seed_hci(h, k, 1).nodes);
        check("hris", seed_hris(h, k_max, 0.3, 25, seed).nodes,
              seed_hris(h, k, 0.3, 25, seed).nodes);
        check("greedy", seed_greedy(h, k_max, greedy_params, 5).nodes,
              seed_greedy(h, k, greedy_params, 5).nodes);
    }
}

void check_auc_consistency(int instances) {
    using namespace hyperim;
    rng::Stream stream(0xACC);
    const std::string tmp = "tmp_auc_consistency.csv";
    for (int i = 0; i < instances; ++i) {
        const auto inst = fixtures::random_hypergraph(stream);
        ExperimentConfig config;
        config.dataset = "prop";
        config.beta = 0.5 * stream.unit();
        config.horizon = 3;
        config.runs = 4;
        config.k_max = std::min<std::size_t>(inst.n, 3);
        config.seed = stream.next();
        const auto report = run_curve(inst.h, config, {{"degree"}, {"hsd"}});

        for (const auto& curve : report.curves) {
            if (curve.points.size() != config.k_max)
                fail(i, "curve length != k_max");
            if (curve.seeds.size() != config.k_max)
                fail(i, "reported seeds length != k_max");
            double mean = 0.0;
            for (const auto& p : curve.points)
                mean += p.mean_frac;
            mean /= static_cast<double>(config.k_max);
            if (std::abs(mean - curve.auc) > 1e-12)
                fail(i, "auc != mean of curve");
        }

        // the emitted CSV must reproduce the AUC as well
        write_report_csv(tmp, report);
        std::ifstream in(tmp);
        std::string line;
        std::getline(in, line); // header
        std::map<std::string, std::pair<double, int>> acc;
        while (std::getline(in, line)) {
            std::istringstream ss(line);
            std::string algo, field;
            std::getline(ss, algo, ',');
            std::getline(ss, field, ','); // K
            std::getline(ss, field, ','); // mean_spread
            acc[algo].first += std::stod(field);
            acc[algo].second += 1;
        }
        for (const auto& curve : report.curves) {
            const auto& [sum, count] = acc.at(curve.algorithm);
            if (count != static_cast<int>(config.k_max))
                fail(i, "CSV row count mismatch");
            if (std::abs(sum / count - curve.auc) > 1e-12)
                fail(i, "CSV-recomputed AUC differs");
        }
    }
    std::remove(tmp.c_str());
}

} // namespace oracle
