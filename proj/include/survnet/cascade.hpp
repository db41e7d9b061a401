// survnet — survivability analysis and restructuring for two-layer
// interdependent networks.
// SPDX-License-Identifier: MIT
#pragma once

#include <map>
#include <set>

#include "survnet/network.hpp"

namespace survnet {

// Outcome of a failure cascade. A node stays functional only while it keeps
// at least one functional supporter, so survivors are exactly the greatest
// set in which every member still has an in-arc from a member — equivalently,
// the nodes reachable from a directed cycle of the surviving subgraph.
struct CascadeResult {
  std::set<NodeId> initial_failures;
  std::set<NodeId> nonfunctional;  // includes the initial failures
  int theta = 0;                   // |nonfunctional|
  int rounds = 0;                  // synchronous propagation waves
};

// Fails the given nodes, then propagates in synchronous waves: each wave
// removes every surviving node whose supporters have all failed. rounds
// counts the waves in which at least one node fell (the seed removal is not
// a wave). Errors on unknown node ids.
CascadeResult cascade(const Network& g, const std::set<NodeId>& failures);

// Single-seed impact across the whole network: per_node[v] is the number of
// nonfunctional nodes (v included) after failing {v} alone.
struct ImpactStats {
  int worst = 0;
  double average = 0.0;
  std::map<NodeId, int> per_node;
};
ImpactStats impact_stats(const Network& g);

}  // namespace survnet
