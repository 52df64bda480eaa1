#include "hyperim/io.hpp"

#include "json.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace hyperim {

namespace {

// shortest exact representation, stable across runs
std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

struct Relabeler {
    std::unordered_map<std::string, node_id> ids;
    std::vector<std::string> labels;

    node_id get(const std::string& label) {
        auto it = ids.find(label);
        if (it != ids.end())
            return it->second;
        const auto id = static_cast<node_id>(labels.size());
        ids.emplace(label, id);
        labels.push_back(label);
        return id;
    }
};

bool integer_token(const std::string& t) {
    if (t.empty())
        return false;
    for (char c : t)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

std::vector<std::string> read_tokens(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::vector<std::string> tokens;
    std::string t;
    while (in >> t)
        tokens.push_back(t);
    return tokens;
}

LoadedHypergraph finish(std::vector<std::vector<node_id>> edges, Relabeler relabel, bool dedupe,
                        const std::string& origin) {
    if (edges.empty())
        throw std::runtime_error(origin + ": no hyperedges");
    return {Hypergraph::build(static_cast<node_id>(relabel.labels.size()), edges, dedupe),
            std::move(relabel.labels)};
}

} // namespace

LoadedHypergraph load_edge_list(const std::string& path, bool dedupe) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);

    Relabeler relabel;
    std::vector<std::vector<node_id>> edges;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        for (char& c : line)
            if (c == ',')
                c = ' ';
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos)
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": blank line");
        if (line[first] == '#')
            continue;
        std::istringstream ss(line);
        std::vector<node_id> edge;
        std::string token;
        while (ss >> token)
            edge.push_back(relabel.get(token));
        edges.push_back(std::move(edge));
    }
    return finish(std::move(edges), std::move(relabel), dedupe, path);
}

LoadedHypergraph load_vertex_count_triple(const std::string& prefix, bool dedupe) {
    const std::string nverts_path = prefix + "-nverts.txt";
    const std::string simplices_path = prefix + "-simplices.txt";
    auto nverts = read_tokens(nverts_path);
    auto simplices = read_tokens(simplices_path);

    std::size_t needed = 0;
    for (const auto& t : nverts) {
        if (!integer_token(t))
            throw std::runtime_error(nverts_path + ": non-integer token '" + t + "'");
        needed += std::stoull(t);
    }
    for (const auto& t : simplices)
        if (!integer_token(t))
            throw std::runtime_error(simplices_path + ": non-integer token '" + t + "'");
    if (needed != simplices.size())
        throw std::runtime_error(prefix + ": length mismatch (" + std::to_string(needed) +
                                 " members declared, " + std::to_string(simplices.size()) +
                                 " present)");

    Relabeler relabel;
    std::vector<std::vector<node_id>> edges;
    std::size_t pos = 0;
    for (const auto& t : nverts) {
        const std::size_t count = std::stoull(t);
        if (count == 0)
            throw std::runtime_error(nverts_path + ": zero-size simplex");
        std::vector<node_id> edge;
        edge.reserve(count);
        for (std::size_t i = 0; i < count; ++i)
            edge.push_back(relabel.get(simplices[pos++]));
        edges.push_back(std::move(edge));
    }
    return finish(std::move(edges), std::move(relabel), dedupe, prefix);
}

void write_edge_list(const std::string& path, const Hypergraph& h, const std::string& header) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write " + path);
    if (!header.empty())
        out << "# " << header << "\n";
    for (edge_id e = 0; e < h.edge_count(); ++e) {
        auto m = h.edge_members(e);
        for (std::size_t i = 0; i < m.size(); ++i)
            out << (i ? " " : "") << m[i];
        out << "\n";
    }
}

void write_report_csv(const std::string& path, const ExperimentReport& report) {
    if (report.curves.empty())
        throw std::invalid_argument("empty report");
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write " + path);
    out << "algorithm,K,mean_spread,std,ci95,runs\n";
    for (const auto& curve : report.curves)
        for (const auto& p : curve.points)
            out << curve.algorithm << ',' << p.k << ',' << fmt(p.mean_frac) << ','
                << fmt(p.std_frac) << ',' << fmt(p.ci95) << ',' << report.config.runs << "\n";
}

void write_report_json(const std::string& path, const ExperimentReport& report) {
    if (report.curves.empty())
        throw std::invalid_argument("empty report");
    nlohmann::json j;
    j["dataset"] = report.config.dataset;
    j["n"] = report.config.node_count;
    j["beta"] = report.config.beta;
    j["horizon"] = report.config.horizon;
    j["runs"] = report.config.runs;
    j["k_max"] = report.config.k_max;
    j["seed"] = report.config.seed;
    auto& timing = j["timing_seconds"];
    for (const auto& curve : report.curves)
        timing[curve.algorithm] = curve.seed_selection_seconds;
    auto& curves = j["curves"];
    curves = nlohmann::json::array();
    for (const auto& curve : report.curves) {
        nlohmann::json c;
        c["algorithm"] = curve.algorithm;
        c["auc"] = curve.auc;
        c["seed_selection_seconds"] = curve.seed_selection_seconds;
        c["seeds"] = curve.seeds;
        auto& points = c["points"];
        points = nlohmann::json::array();
        for (const auto& p : curve.points)
            points.push_back({{"k", p.k},
                              {"mean", p.mean_frac},
                              {"std", p.std_frac},
                              {"ci95", p.ci95}});
        curves.push_back(std::move(c));
    }
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << "\n";
}

ExperimentReport read_report_json(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    nlohmann::json j;
    in >> j;

    ExperimentReport report;
    report.config.dataset = j.at("dataset").get<std::string>();
    report.config.node_count = j.at("n").get<std::size_t>();
    report.config.beta = j.at("beta").get<double>();
    report.config.horizon = j.at("horizon").get<std::uint32_t>();
    report.config.runs = j.at("runs").get<std::uint32_t>();
    report.config.k_max = j.at("k_max").get<std::size_t>();
    report.config.seed = j.at("seed").get<std::uint64_t>();
    for (const auto& c : j.at("curves")) {
        AlgorithmCurve curve;
        curve.algorithm = c.at("algorithm").get<std::string>();
        curve.auc = c.at("auc").get<double>();
        curve.seed_selection_seconds = c.at("seed_selection_seconds").get<double>();
        curve.seeds = c.at("seeds").get<std::vector<node_id>>();
        for (const auto& p : c.at("points")) {
            CurvePoint point;
            point.k = p.at("k").get<std::size_t>();
            point.mean_frac = p.at("mean").get<double>();
            point.std_frac = p.at("std").get<double>();
            point.ci95 = p.at("ci95").get<double>();
            curve.points.push_back(point);
        }
        report.curves.push_back(std::move(curve));
    }
    return report;
}

void write_incidence_csv(const std::string& path, const Hypergraph& h) {
    auto c = h.incidence_matrix();
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write " + path);
    out << "node";
    for (edge_id e = 0; e < h.edge_count(); ++e)
        out << ",e" << e;
    out << "\n";
    for (node_id v = 0; v < h.node_count(); ++v) {
        out << v;
        for (std::uint32_t x : c[v])
            out << ',' << x;
        out << "\n";
    }
}

void write_adjacency_csv(const std::string& path, const Hypergraph& h) {
    auto a = h.adjacency_matrix();
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write " + path);
    out << "node";
    for (node_id v = 0; v < h.node_count(); ++v)
        out << ",v" << v;
    out << "\n";
    for (node_id v = 0; v < h.node_count(); ++v) {
        out << v;
        for (std::uint32_t x : a[v])
            out << ',' << x;
        out << "\n";
    }
}

} // namespace hyperim
