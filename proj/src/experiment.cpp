#include "hyperim/experiment.hpp"

#include "hyperim/rng.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

namespace hyperim {

namespace {

constexpr std::uint64_t kHrisSalt = 0x51;
constexpr std::uint64_t kGreedySalt = 0x52;
constexpr std::uint64_t kEvalSalt = 0x53;

SeedSet select(const Hypergraph& h, const AlgorithmSpec& spec, const ExperimentConfig& config) {
    if (spec.name == "degree")
        return seed_degree(h, config.k_max);
    if (spec.name == "hyperdegree")
        return seed_hyperdegree(h, config.k_max);
    if (spec.name == "hdd")
        return seed_hdd(h, config.k_max);
    if (spec.name == "hsd")
        return seed_hsd(h, config.k_max);
    if (spec.name == "hris")
        return seed_hris(h, config.k_max, config.beta, spec.eta,
                         rng::derive(config.seed, kHrisSalt));
    if (spec.name == "hci")
        return seed_hci(h, config.k_max, spec.ci_radius);
    if (spec.name == "greedy")
        return seed_greedy(h, config.k_max,
                           {config.beta, config.horizon, rng::derive(config.seed, kGreedySalt)},
                           spec.greedy_runs);
    throw std::invalid_argument("unknown algorithm: " + spec.name);
}

} // namespace

ExperimentReport run_curve(const Hypergraph& h, const ExperimentConfig& config,
                           const std::vector<AlgorithmSpec>& algorithms) {
    if (algorithms.empty())
        throw std::invalid_argument("no algorithms requested");
    if (config.k_max < 1 || config.k_max > h.node_count())
        throw std::invalid_argument("k_max out of range [1, n]");
    if (config.runs < 1)
        throw std::invalid_argument("runs must be >= 1");

    ExperimentReport report;
    report.config = config;
    report.config.node_count = h.node_count();
    const double n = h.node_count();

    // one evaluation seed shared by every algorithm and K: coupled comparisons
    SpreadParams eval{config.beta, config.horizon, rng::derive(config.seed, kEvalSalt)};
    for (const auto& spec : algorithms) {
        AlgorithmCurve curve;
        curve.algorithm = spec.name;

        const auto start = std::chrono::steady_clock::now();
        curve.seeds = select(h, spec, config).nodes;
        const auto stop = std::chrono::steady_clock::now();
        curve.seed_selection_seconds = std::chrono::duration<double>(stop - start).count();

        for (std::size_t k = 1; k <= config.k_max; ++k) {
            auto est = estimate_spread(h, {curve.seeds.data(), k}, eval, config.runs);
            CurvePoint p;
            p.k = k;
            p.mean_frac = est.mean / n;
            p.std_frac = est.std_dev / n;
            p.ci95 = 1.96 * p.std_frac / std::sqrt(static_cast<double>(config.runs));
            curve.auc += p.mean_frac;
            curve.points.push_back(p);
        }
        curve.auc /= static_cast<double>(config.k_max);
        report.curves.push_back(std::move(curve));
    }
    return report;
}

double pcc(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size())
        throw std::invalid_argument("length mismatch");
    if (x.size() < 2)
        throw std::invalid_argument("need at least two points");
    const double nx = static_cast<double>(x.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= nx;
    my /= nx;
    double cov = 0.0, vx = 0.0, vy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        cov += (x[i] - mx) * (y[i] - my);
        vx += (x[i] - mx) * (x[i] - mx);
        vy += (y[i] - my) * (y[i] - my);
    }
    if (vx == 0.0 || vy == 0.0)
        throw std::invalid_argument("constant input");
    return cov / std::sqrt(vx * vy);
}

std::vector<HistogramRow> overlap_histogram(const OverlapReport& report, std::size_t bins) {
    if (bins == 0)
        throw std::invalid_argument("bins must be >= 1");
    double hi = 0.0;
    for (double v : report.neighbor_overlaps)
        hi = std::max(hi, v);
    for (double v : report.random_overlaps)
        hi = std::max(hi, v);
    if (hi == 0.0)
        hi = 1.0; // all mass in the first bin
    const double width = hi / static_cast<double>(bins);

    std::vector<HistogramRow> rows(bins);
    for (std::size_t b = 0; b < bins; ++b) {
        rows[b].lo = width * static_cast<double>(b);
        rows[b].hi = width * static_cast<double>(b + 1);
    }
    auto bin_of = [&](double v) {
        auto b = static_cast<std::size_t>(v / width);
        return std::min(b, bins - 1);
    };
    for (double v : report.neighbor_overlaps)
        ++rows[bin_of(v)].neighbor;
    for (double v : report.random_overlaps)
        ++rows[bin_of(v)].random;
    return rows;
}

} // namespace hyperim
