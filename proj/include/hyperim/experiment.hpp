// experiment.hpp - spread curves, AUC, timing, and the overlap experiment
// driver that ties seeders and diffusion together.
#pragma once

#include "hyperim/diffusion.hpp"
#include "hyperim/hypergraph.hpp"
#include "hyperim/seeding.hpp"
#include "hyperim/types.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hyperim {

struct CurvePoint {
    std::size_t k = 0;
    double mean_frac = 0.0; // mean infected fraction of n
    double std_frac = 0.0;
    double ci95 = 0.0; // 1.96 * std_frac / sqrt(runs)
};

struct AlgorithmSpec {
    std::string name;            // degree|hyperdegree|hdd|hsd|hris|hci|greedy
    std::size_t ci_radius = 1;   // hci only
    std::size_t eta = 200;       // hris only
    std::uint32_t greedy_runs = 100; // greedy only
};

struct ExperimentConfig {
    std::string dataset;
    std::size_t node_count = 0; // filled by run_curve
    double beta = 0.01;
    std::uint32_t horizon = 25;
    std::uint32_t runs = 500;
    std::size_t k_max = 25;
    std::uint64_t seed = 0;
};

struct AlgorithmCurve {
    std::string algorithm;
    std::vector<CurvePoint> points; // K = 1..k_max
    double auc = 0.0;               // mean of mean_frac over K
    double seed_selection_seconds = 0.0;
    std::vector<node_id> seeds; // the K_max seeds; point K uses the prefix
};

struct ExperimentReport {
    ExperimentConfig config;
    std::vector<AlgorithmCurve> curves; // in requested algorithm order
};

// Selects seeds once at k_max per algorithm (timed), then evaluates every
// prefix with the same run set.
ExperimentReport run_curve(const Hypergraph& h, const ExperimentConfig& config,
                           const std::vector<AlgorithmSpec>& algorithms);

// Pearson correlation coefficient.
double pcc(const std::vector<double>& x, const std::vector<double>& y);

struct HistogramRow {
    double lo = 0.0;
    double hi = 0.0;
    std::size_t neighbor = 0;
    std::size_t random = 0;
};

std::vector<HistogramRow> overlap_histogram(const OverlapReport& report, std::size_t bins = 20);

} // namespace hyperim
