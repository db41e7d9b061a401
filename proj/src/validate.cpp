// survnet — survivability analysis and restructuring for two-layer
// interdependent networks.
// SPDX-License-Identifier: MIT
#include "survnet/validate.hpp"

#include <map>
#include <set>
#include <sstream>

#include "survnet/cycles.hpp"

namespace survnet {

ValidationReport validate(const Network& g) {
  ValidationReport r;
  auto flag = [&r](bool& field, const std::string& msg) {
    field = false;
    r.violations.push_back(msg);
  };

  std::set<std::pair<NodeId, NodeId>> seen_pairs;
  std::map<NodeId, int> in_recount;
  for (NodeId v : g.node_ids()) in_recount[v] = 0;

  for (const auto& [ref, dest] : g.arcs()) {
    NodeId u = ref.source;
    ++in_recount[dest];
    if (u == dest) {
      flag(r.simple, "self-loop at node " + std::to_string(u));
    } else if (g.constituent(u) == g.constituent(dest)) {
      flag(r.arcs_cross_constituents,
           "intra-constituent arc (" + std::to_string(u) + "," +
               std::to_string(dest) + ")");
    }
    if (!seen_pairs.insert({u, dest}).second)
      flag(r.simple, "duplicate arc (" + std::to_string(u) + "," +
                         std::to_string(dest) + ")");
    if (!g.cluster_legal(u, dest))
      flag(r.supportability_respected,
           "arc (" + std::to_string(u) + "," + std::to_string(dest) +
               ") targets cluster " + std::to_string(g.cluster(dest)) +
               " outside the source's supportable set");
  }

  for (NodeId v : g.node_ids()) {
    int c = g.cluster(v);
    if (c < 1 || c > g.cluster_count(g.constituent(v)))
      flag(r.clustering_total,
           "node " + std::to_string(v) + " has cluster " + std::to_string(c) +
               " outside 1.." +
               std::to_string(g.cluster_count(g.constituent(v))));
    if (g.degree_in(v) != in_recount[v])
      flag(r.degrees_consistent,
           "cached in-degree of node " + std::to_string(v) +
               " disagrees with recount");
  }

  // Cluster reciprocity: aggregate each cluster's supportable set over its
  // members; a cluster that supports others must be supportable by at least
  // one of them, or its support can never be returned.
  std::map<std::pair<int, int>, std::set<int>> cluster_supports;
  for (NodeId v : g.node_ids()) {
    auto& agg = cluster_supports[{g.constituent(v), g.cluster(v)}];
    agg.insert(g.supports(v).begin(), g.supports(v).end());
  }
  for (int i = 1; i <= 2; ++i) {
    int j = 3 - i;
    for (int x = 1; x <= g.cluster_count(i); ++x) {
      auto it = cluster_supports.find({i, x});
      if (it == cluster_supports.end()) continue;  // empty cluster
      bool reciprocated = false;
      for (int y : it->second) {
        auto back = cluster_supports.find({j, y});
        if (back != cluster_supports.end() && back->second.count(x)) {
          reciprocated = true;
          break;
        }
      }
      if (!reciprocated)
        flag(r.cluster_reciprocity,
             "no cluster supported by constituent " + std::to_string(i) +
                 " cluster " + std::to_string(x) + " supports it back");
    }
  }

  std::set<NodeId> live = cycle_reachable_nodes(g);
  for (NodeId v : g.node_ids())
    if (!live.count(v))
      flag(r.liveness, "node " + std::to_string(v) +
                           " is on no cycle and unreachable from any cycle");

  return r;
}

std::string violation_summary(const ValidationReport& r) {
  std::ostringstream os;
  for (std::size_t i = 0; i < r.violations.size(); ++i) {
    if (i) os << "; ";
    os << r.violations[i];
  }
  return os.str();
}

}  // namespace survnet
