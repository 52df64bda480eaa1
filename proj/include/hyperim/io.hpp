// io.hpp - loading / writing hypergraphs and experiment reports.
//
// Edge-list format: one hyperedge per line, whitespace- or comma-separated
// node labels (opaque strings, relabeled densely by first appearance).
// Lines starting with '#' are comments. Blank lines are an error.
//
// Triple format: a PATH prefix naming PATH-nverts.txt (one edge size per
// line) and PATH-simplices.txt (the concatenated integer member labels).
#pragma once

#include "hyperim/experiment.hpp"
#include "hyperim/hypergraph.hpp"
#include "hyperim/types.hpp"

#include <string>
#include <vector>

namespace hyperim {

struct LoadedHypergraph {
    Hypergraph graph;
    std::vector<std::string> labels; // labels[id] = original label
};

LoadedHypergraph load_edge_list(const std::string& path, bool dedupe);
LoadedHypergraph load_vertex_count_triple(const std::string& prefix, bool dedupe);

// Writes one edge per line using dense ids; `header` (if non-empty) goes
// first as a '#' comment line.
void write_edge_list(const std::string& path, const Hypergraph& h, const std::string& header);

// CSV schema: algorithm,K,mean_spread,std,ci95,runs  (spread as a fraction of n)
void write_report_csv(const std::string& path, const ExperimentReport& report);
void write_report_json(const std::string& path, const ExperimentReport& report);
ExperimentReport read_report_json(const std::string& path);

// Dense 0/1 matrices for small graphs, mainly for inspection.
void write_incidence_csv(const std::string& path, const Hypergraph& h);
void write_adjacency_csv(const std::string& path, const Hypergraph& h);

} // namespace hyperim
