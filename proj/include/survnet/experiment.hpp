// survnet — survivability analysis and restructuring for two-layer
// interdependent networks.
// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "survnet/network.hpp"

namespace survnet {

// One measurement. Metric names carry the measurement mode as a suffix
// ("surv_after_heuristic.exact", ".greedy-lazy") so every row is
// self-describing. Rows are append-only and CSV/JSON-serializable.
struct ResultRow {
  std::string experiment;
  int size = 0;   // per-experiment characteristic size (see run_experiment)
  int trial = 0;
  std::uint64_t seed = 0;
  std::string metric;
  double value = 0.0;
};

struct ExperimentConfig {
  std::string id;
  std::uint64_t master_seed = 1;
  int trials = 30;
  std::vector<int> sizes;  // empty picks the experiment's default ladder
  int l = 1;               // hop bound for the relocation pass
};

// Seeded desk-scale studies. Known ids and their size column:
//   trend-symmetric    equal constituents, in-degree 2..4; size = nodes/side
//   trend-asymmetric   constituent 1 half of constituent 2; size = |V2|
//   density-vs-gain    10 nodes/side over in-degree ranges [1,2]..[5,6];
//                      size = range index 1..5
//   oracle-compare     the two-hub benchmark plus small random instances
//                      against the exhaustive relocation oracle; size =
//                      nodes/side
//   sunlet-optimal     saturated path-sunlets against the closed form;
//                      size = cycle length, deterministic (trials ignored)
//   cluster-models     three-cluster regimes 1..3 vs an additive baseline;
//                      size = nodes/side
//   impact             failure impact before/after relocation; size =
//                      nodes/side
// Per-trial seeds derive from master_seed, the experiment id with a purpose
// tag, the size and the trial index, so any row can be reproduced alone.
std::vector<ResultRow> run_experiment(const ExperimentConfig& config);

// The 30-node, 84-arc two-hub benchmark used by oracle-compare: two mutually
// supporting hubs, a block of one-way feeds, and five marginal arcs wired so
// the oracle search space is exactly 15^5 assignments.
Network oracle_benchmark_network();

struct Aggregate {
  std::string experiment;
  std::string metric;
  int size = 0;
  double mean = 0.0;
  double stddev = 0.0;  // sample standard deviation
  int n = 0;
};
std::vector<Aggregate> aggregate_rows(const std::vector<ResultRow>& rows);

// Spearman rank correlation (average ranks on ties). Errors on mismatched
// or empty inputs; returns 0 when either side is constant.
double spearman(const std::vector<double>& x, const std::vector<double>& y);

// Writes <out_dir>/<basename>_rows.* and <basename>_summary.* in the given
// format: "csv", "json", "svg" (summary chart only) or "all". Errors when
// rows is empty or the format is unknown.
void emit_outputs(const std::vector<ResultRow>& rows,
                  const std::string& out_dir, const std::string& basename,
                  const std::string& format);

}  // namespace survnet
