// survnet — survivability analysis and restructuring for two-layer
// interdependent networks.
// SPDX-License-Identifier: MIT
#include "survnet/cascade.hpp"

#include <vector>

namespace survnet {

CascadeResult cascade(const Network& g, const std::set<NodeId>& failures) {
  for (NodeId v : failures)
    if (!g.has_node(v)) throw UnknownNode(v);

  CascadeResult res;
  res.initial_failures = failures;
  res.nonfunctional = failures;

  // Live in-degree per surviving node; a node whose count hits zero has lost
  // its last supporter and falls in the next wave.
  std::map<NodeId, int> live_in;
  for (NodeId v : g.node_ids())
    if (!failures.count(v)) live_in[v] = 0;
  for (const auto& [ref, dest] : g.arcs()) {
    if (failures.count(ref.source) || failures.count(dest)) continue;
    ++live_in[dest];
  }

  std::vector<NodeId> wave;
  for (const auto& [v, d] : live_in)
    if (d == 0) wave.push_back(v);

  while (!wave.empty()) {
    ++res.rounds;
    std::vector<NodeId> next;
    for (NodeId v : wave) {
      res.nonfunctional.insert(v);
      for (NodeId w : g.out_dests(v)) {
        auto it = live_in.find(w);
        if (it == live_in.end() || res.nonfunctional.count(w)) continue;
        if (--it->second == 0) next.push_back(w);
      }
    }
    wave = std::move(next);
  }

  res.theta = static_cast<int>(res.nonfunctional.size());
  return res;
}

ImpactStats impact_stats(const Network& g) {
  ImpactStats s;
  const auto ids = g.node_ids();
  if (ids.empty()) return s;
  long long total = 0;
  for (NodeId v : ids) {
    int theta = cascade(g, {v}).theta;
    s.per_node[v] = theta;
    s.worst = std::max(s.worst, theta);
    total += theta;
  }
  s.average = static_cast<double>(total) / static_cast<double>(ids.size());
  return s;
}

}  // namespace survnet
