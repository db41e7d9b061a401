// survnet — survivability analysis and restructuring for two-layer
// interdependent networks.
// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "survnet/network.hpp"

namespace survnet {

class InfeasibleConfig : public Error {
 public:
  explicit InfeasibleConfig(const std::string& what) : Error(what) {}
};

class ResampleLimitExceeded : public Error {
 public:
  explicit ResampleLimitExceeded(const std::string& what) : Error(what) {}
};

inline constexpr int kResampleLimit = 1000;

// Per-cluster supportability templates for the three clustering regimes,
// all over three clusters per constituent. Regime 1 pairs clusters off
// (x supports only x); regime 2 additionally funnels support from clusters
// 1 and 3 into cluster 2; regime 3 is unrestricted.
std::map<int, std::set<int>> cluster_supportability(int model);

struct GeneratorConfig {
  int n1 = 0;
  int n2 = 0;
  int deg_in_min = 1;
  int deg_in_max = 1;
  // 0 = unclustered (one cluster per side); 1..3 picks a supportability
  // regime over three clusters per side, sized by the two vectors below.
  int cluster_model = 0;
  std::vector<int> cluster_sizes_1;
  std::vector<int> cluster_sizes_2;
  std::uint64_t seed = 0;
};

// Uniform random valid network: node ids 1..n1 (constituent 1) then
// n1+1..n1+n2 (constituent 2); each node draws an in-degree uniformly from
// [deg_in_min, deg_in_max] and that many distinct supporters uniformly from
// the opposite-constituent nodes allowed to support its cluster. Since every
// node keeps at least one supporter, every sample is live; the liveness
// check is still enforced, with a resample loop capped at kResampleLimit.
Network generate_random(const GeneratorConfig& config);

struct PathSunletSpec {
  int cycle_length = 4;          // even, >= 2
  std::vector<int> path_nodes;   // per path: node count including its anchor
};

// One even directed cycle with disjoint pendant paths anchored on distinct
// cycle nodes 1..|paths|, arcs directed away from the cycle, constituents
// alternating. Errors on odd or too-short cycles, more paths than cycle
// nodes, or non-positive path sizes.
Network generate_path_sunlet(const PathSunletSpec& spec);

// Maximal arc addition under an out-degree bound delta: first the reverse of
// every existing arc (turning supports mutual), then every remaining
// cross-constituent pair, each added when absent, cluster-legal and within
// the source's remaining capacity. delta must be >= every current
// out-degree. One sweep is maximal because no rejection reason can be
// undone by later additions.
Network ma_saturate(const Network& g, int delta);

}  // namespace survnet
