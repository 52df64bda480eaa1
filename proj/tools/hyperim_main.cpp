// hyperim_main.cpp - command-line front end: stats, synth, seed, curve,
// overlap, corr. Exit codes: 0 success, 1 usage error, 2 data error.
#include "hyperim/experiment.hpp"
#include "hyperim/io.hpp"
#include "hyperim/synth.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace hyperim;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

struct Options {
    std::string input;
    std::string gen_spec;
    std::string format = "edgelist";
    bool dedupe = false;
    std::string out;
    std::string out_format = "csv";
    std::vector<std::string> algos;
    double beta = 0.01;
    std::uint32_t horizon = 25;
    std::uint32_t runs = 500;
    std::size_t kmax = 25;
    std::size_t eta = 200;
    std::size_t ci_l = 1;
    std::uint32_t greedy_runs = 100;
    std::size_t pairs = 1000;
    int preset = 0;
    std::uint64_t seed = 0;
};

GeneratorConfig parse_generate_spec(const std::string& spec, std::uint64_t seed) {
    GeneratorConfig c;
    c.seed = seed;
    bool have_n = false, have_m = false;
    std::size_t pos = 0;
    while (pos < spec.size()) {
        auto end = spec.find(',', pos);
        if (end == std::string::npos)
            end = spec.size();
        const std::string item = spec.substr(pos, end - pos);
        pos = end + 1;
        const auto eq = item.find('=');
        if (eq == std::string::npos)
            throw UsageError("--generate: expected key=value, got '" + item + "'");
        const std::string key = item.substr(0, eq);
        const std::string val = item.substr(eq + 1);
        try {
            if (key == "theta")
                c.theta = std::stod(val);
            else if (key == "n") {
                c.node_count = std::stoull(val);
                have_n = true;
            } else if (key == "m") {
                c.edge_count = std::stoull(val);
                have_m = true;
            } else if (key == "smin")
                c.size_min = std::stoull(val);
            else if (key == "smax")
                c.size_max = std::stoull(val);
            else
                throw UsageError("--generate: unknown key '" + key + "'");
        } catch (const UsageError&) {
            throw;
        } catch (const std::exception&) {
            throw UsageError("--generate: bad value for '" + key + "'");
        }
    }
    if (!have_n || !have_m)
        throw UsageError("--generate requires n=.. and m=..");
    return c;
}

std::string generator_header(const GeneratorConfig& c) {
    return "hypercl theta=" + fmt(c.theta) + " n=" + std::to_string(c.node_count) +
           " m=" + std::to_string(c.edge_count) + " smin=" + std::to_string(c.size_min) +
           " smax=" + std::to_string(c.size_max) + " seed=" + std::to_string(c.seed);
}

// the hypergraph plus a dataset label for reports
std::pair<Hypergraph, std::string> load_or_generate(const Options& o) {
    if (!o.input.empty() && !o.gen_spec.empty())
        throw UsageError("choose one of --input / --generate");
    if (o.input.empty() && o.gen_spec.empty())
        throw UsageError("one of --input / --generate is required");
    if (!o.input.empty()) {
        if (o.format == "triple")
            return {load_vertex_count_triple(o.input, o.dedupe).graph, o.input};
        return {load_edge_list(o.input, o.dedupe).graph, o.input};
    }
    const auto config = parse_generate_spec(o.gen_spec, o.seed);
    return {generate(config), generator_header(config)};
}

void apply_preset(Options& o) {
    switch (o.preset) {
    case 0:
        return;
    case 1:
        o.beta = 0.01;
        o.horizon = 25;
        return;
    case 2:
        o.beta = 0.005;
        o.horizon = 35;
        return;
    case 3:
        o.beta = 0.015;
        o.horizon = 15;
        return;
    case 4:
        o.beta = 0.02;
        o.horizon = 10;
        return;
    default:
        throw UsageError("--preset must be 1..4");
    }
}

std::ostream& open_or_stdout(std::ofstream& file, const std::string& path) {
    if (path.empty())
        return std::cout;
    file.open(path);
    if (!file)
        throw std::runtime_error("cannot write " + path);
    return file;
}

int cmd_stats(const Options& o) {
    auto [h, name] = load_or_generate(o);
    const auto s = h.stats();
    std::ofstream file;
    auto& out = open_or_stdout(file, o.out);
    out << "dataset,n,m,mean_edge_size,mean_hyperdegree,mean_degree,clustering,"
           "mean_shortest_path,diameter,link_density\n";
    out << name << ',' << s.node_count << ',' << s.edge_count << ',' << fmt(s.mean_edge_size)
        << ',' << fmt(s.mean_hyperdegree) << ',' << fmt(s.mean_degree) << ','
        << fmt(s.clustering) << ',' << fmt(s.mean_shortest_path) << ',' << s.diameter << ','
        << fmt(s.link_density) << "\n";
    return 0;
}

int cmd_synth(const Options& o) {
    if (o.gen_spec.empty())
        throw UsageError("synth requires --generate");
    if (o.out.empty())
        throw UsageError("synth requires --out");
    const auto config = parse_generate_spec(o.gen_spec, o.seed);
    const auto h = generate(config);
    write_edge_list(o.out, h, generator_header(config));
    std::cout << "wrote " << o.out << " (n=" << h.node_count() << ", m=" << h.edge_count()
              << ")\n";
    return 0;
}

SeedSet run_seeder(const Hypergraph& h, const std::string& name, const Options& o) {
    if (name == "degree")
        return seed_degree(h, o.kmax);
    if (name == "hyperdegree")
        return seed_hyperdegree(h, o.kmax);
    if (name == "hdd")
        return seed_hdd(h, o.kmax);
    if (name == "hsd")
        return seed_hsd(h, o.kmax);
    if (name == "hris")
        return seed_hris(h, o.kmax, o.beta, o.eta, o.seed);
    if (name == "hci")
        return seed_hci(h, o.kmax, o.ci_l);
    if (name == "greedy")
        return seed_greedy(h, o.kmax, {o.beta, o.horizon, o.seed}, o.greedy_runs);
    throw std::invalid_argument("unknown algorithm: " + name);
}

int cmd_seed(const Options& o) {
    if (o.algos.empty())
        throw UsageError("seed requires --algos");
    auto [h, name] = load_or_generate(o);
    std::vector<SeedSet> sets;
    for (const auto& algo : o.algos)
        sets.push_back(run_seeder(h, algo, o));
    for (const auto& s : sets) {
        std::cout << s.algorithm << ':';
        for (node_id v : s.nodes)
            std::cout << ' ' << v;
        std::cout << "\n";
    }
    if (!o.out.empty()) {
        if (o.out_format == "json") {
            nlohmann::json j;
            j["dataset"] = name;
            j["k"] = o.kmax;
            j["seed"] = o.seed;
            auto& arr = j["algorithms"];
            arr = nlohmann::json::array();
            for (const auto& s : sets)
                arr.push_back({{"name", s.algorithm}, {"seeds", s.nodes}, {"params", s.params}});
            std::ofstream out(o.out);
            if (!out)
                throw std::runtime_error("cannot write " + o.out);
            out << j.dump(2) << "\n";
        } else {
            std::ofstream out(o.out);
            if (!out)
                throw std::runtime_error("cannot write " + o.out);
            out << "algorithm,rank,node\n";
            for (const auto& s : sets)
                for (std::size_t i = 0; i < s.nodes.size(); ++i)
                    out << s.algorithm << ',' << i + 1 << ',' << s.nodes[i] << "\n";
        }
    }
    return 0;
}

int cmd_curve(const Options& o) {
    if (o.algos.empty())
        throw UsageError("curve requires --algos");
    auto [h, name] = load_or_generate(o);
    ExperimentConfig config;
    config.dataset = name;
    config.beta = o.beta;
    config.horizon = o.horizon;
    config.runs = o.runs;
    config.k_max = o.kmax;
    config.seed = o.seed;
    std::vector<AlgorithmSpec> specs;
    for (const auto& algo : o.algos)
        specs.push_back({algo, o.ci_l, o.eta, o.greedy_runs});
    const auto report = run_curve(h, config, specs);

    for (const auto& curve : report.curves)
        std::cerr << curve.algorithm << ": auc=" << fmt(curve.auc)
                  << " selection=" << fmt(curve.seed_selection_seconds) << "s\n";
    if (o.out.empty()) {
        std::cout << "algorithm,K,mean_spread,std,ci95,runs\n";
        for (const auto& curve : report.curves)
            for (const auto& p : curve.points)
                std::cout << curve.algorithm << ',' << p.k << ',' << fmt(p.mean_frac) << ','
                          << fmt(p.std_frac) << ',' << fmt(p.ci95) << ',' << config.runs << "\n";
    } else if (o.out_format == "json") {
        write_report_json(o.out, report);
    } else {
        write_report_csv(o.out, report);
    }
    return 0;
}

int cmd_overlap(const Options& o, bool runs_given) {
    auto [h, name] = load_or_generate(o);
    const std::uint32_t runs_per_pair = runs_given ? o.runs : 100;
    const auto report = overlap_experiment(h, o.pairs, {o.beta, o.horizon, o.seed}, runs_per_pair);
    const auto rows = overlap_histogram(report, 20);

    double nsum = 0.0, rsum = 0.0;
    for (double v : report.neighbor_overlaps)
        nsum += v;
    for (double v : report.random_overlaps)
        rsum += v;
    std::cerr << "neighbor mean=" << fmt(nsum / report.neighbor_overlaps.size())
              << " random mean=" << fmt(rsum / report.random_overlaps.size()) << "\n";

    std::ofstream file;
    auto& out = open_or_stdout(file, o.out);
    out << "bin,neighbor_density,random_density\n";
    const auto total_n = static_cast<double>(report.neighbor_overlaps.size());
    const auto total_r = static_cast<double>(report.random_overlaps.size());
    for (const auto& row : rows)
        out << fmt(row.lo) << ',' << fmt(row.neighbor / total_n) << ','
            << fmt(row.random / total_r) << "\n";
    return 0;
}

int cmd_corr(const Options& o) {
    auto [h, name] = load_or_generate(o);
    const auto deg = h.degrees();
    std::vector<double> x(deg.begin(), deg.end());
    std::vector<double> y(h.node_count());
    for (node_id v = 0; v < h.node_count(); ++v)
        y[v] = static_cast<double>(h.hyperdegree(v));
    std::cout << "pcc=" << fmt(pcc(x, y)) << "\n";
    if (!o.out.empty()) {
        std::ofstream out(o.out);
        if (!out)
            throw std::runtime_error("cannot write " + o.out);
        out << "node,degree,hyperdegree\n";
        for (node_id v = 0; v < h.node_count(); ++v)
            out << v << ',' << deg[v] << ',' << h.hyperdegree(v) << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"influence maximization on hypergraphs"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--input", o.input, "hypergraph file (edge list or triple prefix)");
        sub->add_option("--generate", o.gen_spec, "theta=..,n=..,m=..,smin=..,smax=..");
        sub->add_option("--format", o.format, "input format")
            ->check(CLI::IsMember({"edgelist", "triple"}));
        sub->add_flag("--dedupe", o.dedupe, "drop duplicate hyperedges");
        sub->add_option("--seed", o.seed, "master RNG seed");
        sub->add_option("--out", o.out, "output path");
    };
    auto add_model = [&](CLI::App* sub) {
        auto* b = sub->add_option("--beta", o.beta, "infection probability");
        auto* t = sub->add_option("--horizon", o.horizon, "number of steps T");
        auto* p = sub->add_option("--preset", o.preset, "(beta,T) preset 1..4")
                      ->check(CLI::Range(1, 4));
        p->excludes(b);
        p->excludes(t);
    };
    auto add_algos = [&](CLI::App* sub) {
        sub->add_option("--algos", o.algos,
                        "degree,hyperdegree,hdd,hsd,hris,hci,greedy (comma-separated)")
            ->delimiter(',');
        sub->add_option("--kmax", o.kmax, "seed budget")->check(CLI::PositiveNumber);
        sub->add_option("--eta", o.eta, "HRR sample count")->check(CLI::PositiveNumber);
        sub->add_option("--ci-l", o.ci_l, "collective-influence ball radius")
            ->check(CLI::IsMember({1, 2}));
        sub->add_option("--greedy-runs", o.greedy_runs, "simulations per greedy evaluation")
            ->check(CLI::PositiveNumber);
        sub->add_option("--out-format", o.out_format, "report format")
            ->check(CLI::IsMember({"csv", "json"}));
    };

    auto* stats = app.add_subcommand("stats", "dataset property table");
    add_common(stats);

    auto* synth = app.add_subcommand("synth", "generate a random hypergraph");
    add_common(synth);

    auto* seed = app.add_subcommand("seed", "select seed sets");
    add_common(seed);
    add_model(seed);
    add_algos(seed);

    auto* curve = app.add_subcommand("curve", "spread curves with AUC and timing");
    add_common(curve);
    add_model(curve);
    add_algos(curve);
    curve->add_option("--runs", o.runs, "evaluation runs per point")->check(CLI::PositiveNumber);

    auto* overlap = app.add_subcommand("overlap", "influence overlap histogram");
    add_common(overlap);
    add_model(overlap);
    overlap->add_option("--pairs", o.pairs, "sampled pairs per group")
        ->check(CLI::PositiveNumber);
    auto* overlap_runs =
        overlap->add_option("--runs", o.runs, "repetitions per pair (default 100)")
            ->check(CLI::PositiveNumber);

    auto* corr = app.add_subcommand("corr", "degree vs hyperdegree correlation");
    add_common(corr);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        apply_preset(o);
        if (app.got_subcommand(stats))
            return cmd_stats(o);
        if (app.got_subcommand(synth))
            return cmd_synth(o);
        if (app.got_subcommand(seed))
            return cmd_seed(o);
        if (app.got_subcommand(curve))
            return cmd_curve(o);
        if (app.got_subcommand(overlap))
            return cmd_overlap(o, overlap_runs->count() > 0);
        if (app.got_subcommand(corr))
            return cmd_corr(o);
        throw UsageError("no subcommand");
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
