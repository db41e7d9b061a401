// survnet — survivability analysis and restructuring for two-layer
// interdependent networks.
// SPDX-License-Identifier: MIT
#pragma once

#include <string>
#include <vector>

#include "survnet/network.hpp"

namespace survnet {

// Outcome of structural validation. Each flag covers one rule; violations
// holds one human-readable entry per offence. validate() never throws — a
// malformed network is a reportable condition, not an error.
struct ValidationReport {
  // Every arc joins nodes of different constituents.
  bool arcs_cross_constituents = true;
  // No duplicate (source, destination) pairs and no self-loops.
  bool simple = true;
  // Every node's cluster id lies within its constituent's declared range.
  bool clustering_total = true;
  // Every arc's destination cluster is in its source's supportable set.
  bool supportability_respected = true;
  // For every cluster that supports something, at least one of the clusters
  // it supports can support it back.
  bool cluster_reciprocity = true;
  // Every node lies on a directed cycle or is reachable from one.
  bool liveness = true;
  // Cached degree counters agree with a recount over the arc list.
  bool degrees_consistent = true;

  std::vector<std::string> violations;

  bool ok() const {
    return arcs_cross_constituents && simple && clustering_total &&
           supportability_respected && cluster_reciprocity && liveness &&
           degrees_consistent;
  }
};

ValidationReport validate(const Network& g);

// Violations joined into one line, for embedding in error messages.
std::string violation_summary(const ValidationReport& r);

}  // namespace survnet
