// bench_kernels.cpp - timing of the OpenMP kernels against the serial
// reference implementations, with an output-equality check on each pair.
#include "hyperim/diffusion.hpp"
#include "hyperim/seeding.hpp"
#include "hyperim/synth.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace hyperim;

namespace {

double timed(const std::function<void()>& fn) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void row(const std::string& name, double serial_s, double parallel_s, bool equal) {
    std::printf("%-18s serial %8.3fs   parallel %8.3fs   speedup %5.2fx   results %s\n",
                name.c_str(), serial_s, parallel_s, serial_s / parallel_s,
                equal ? "identical" : "DIFFER");
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("openmp enabled, max threads %d\n", omp_get_max_threads());
#else
    std::printf("built without openmp; both columns run serially\n");
#endif

    GeneratorConfig config;
    config.node_count = 2000;
    config.edge_count = 2000;
    config.theta = 2.0;
    config.size_min = 1;
    config.size_max = 10;
    config.seed = 42;
    const auto h = generate(config);
    std::printf("hypergraph: n=%u m=%u\n\n", h.node_count(), h.edge_count());

    const auto seeds = seed_degree(h, 10).nodes;
    const SpreadParams params{0.02, 25, 7};

    {
        SpreadEstimate a{}, b{};
        const double ts = timed([&] { a = serial::estimate_spread(h, seeds, params, 2000); });
        const double tp = timed([&] { b = estimate_spread(h, seeds, params, 2000); });
        row("estimate_spread", ts, tp, a.mean == b.mean && a.std_dev == b.std_dev);
    }
    {
        std::vector<std::int64_t> a, b;
        const double ts = timed([&] { a = serial::hci_scores(h, 2); });
        const double tp = timed([&] { b = hci_scores(h, 2); });
        row("hci_scores(l=2)", ts, tp, a == b);
    }
    {
        std::vector<HrrSample> a, b;
        const double ts = timed([&] { a = serial::sample_hrr_batch(h, 0.05, 20000, 7); });
        const double tp = timed([&] { b = sample_hrr_batch(h, 0.05, 20000, 7); });
        bool equal = a.size() == b.size();
        for (std::size_t i = 0; equal && i < a.size(); ++i)
            equal = a[i].root == b[i].root && a[i].members == b[i].members;
        row("hrr_batch", ts, tp, equal);
    }
    {
        OverlapReport a, b;
        const double ts = timed([&] { a = serial::overlap_experiment(h, 200, params, 20); });
        const double tp = timed([&] { b = overlap_experiment(h, 200, params, 20); });
        row("overlap", ts, tp,
            a.neighbor_overlaps == b.neighbor_overlaps && a.random_overlaps == b.random_overlaps);
    }
    return 0;
}
