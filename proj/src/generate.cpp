// survnet — survivability analysis and restructuring for two-layer
// interdependent networks.
// SPDX-License-Identifier: MIT
#include "survnet/generate.hpp"

#include <algorithm>
#include <numeric>

#include "survnet/cycles.hpp"
#include "survnet/rng.hpp"

namespace survnet {

std::map<int, std::set<int>> cluster_supportability(int model) {
  switch (model) {
    case 1:
      return {{1, {1}}, {2, {2}}, {3, {3}}};
    case 2:
      return {{1, {1, 2}}, {2, {2}}, {3, {2, 3}}};
    case 3:
      return {{1, {1, 2, 3}}, {2, {1, 2, 3}}, {3, {1, 2, 3}}};
    default:
      throw Error("supportability model must be 1, 2 or 3");
  }
}

namespace {

struct NodePlan {
  NodeId id;
  int constituent;
  int cluster;
  std::set<int> supports;
};

std::vector<NodePlan> plan_nodes(const GeneratorConfig& c) {
  std::vector<int> sizes1 = c.cluster_sizes_1;
  std::vector<int> sizes2 = c.cluster_sizes_2;
  std::map<int, std::set<int>> tmpl;
  if (c.cluster_model == 0) {
    sizes1 = {c.n1};
    sizes2 = {c.n2};
    tmpl = {{1, {1}}};
  } else {
    tmpl = cluster_supportability(c.cluster_model);
    if (sizes1.size() != 3 || sizes2.size() != 3)
      throw InfeasibleConfig(
          "clustered generation needs three cluster sizes per constituent");
    if (std::accumulate(sizes1.begin(), sizes1.end(), 0) != c.n1 ||
        std::accumulate(sizes2.begin(), sizes2.end(), 0) != c.n2)
      throw InfeasibleConfig("cluster sizes must sum to the constituent size");
    for (int s : sizes1)
      if (s < 0) throw InfeasibleConfig("cluster sizes must be non-negative");
    for (int s : sizes2)
      if (s < 0) throw InfeasibleConfig("cluster sizes must be non-negative");
  }

  std::vector<NodePlan> plan;
  NodeId next = 1;
  for (int side = 1; side <= 2; ++side) {
    const std::vector<int>& sizes = (side == 1) ? sizes1 : sizes2;
    for (int x = 1; x <= static_cast<int>(sizes.size()); ++x)
      for (int j = 0; j < sizes[x - 1]; ++j)
        plan.push_back({next++, side, x, tmpl.at(x)});
  }
  return plan;
}

}  // namespace

Network generate_random(const GeneratorConfig& c) {
  if (c.n1 < 1 || c.n2 < 1)
    throw InfeasibleConfig("both constituents need at least one node");
  if (c.deg_in_min < 1)
    throw InfeasibleConfig("minimum in-degree must be at least 1");
  if (c.deg_in_min > c.deg_in_max)
    throw InfeasibleConfig("minimum in-degree exceeds the maximum");
  if (c.cluster_model < 0 || c.cluster_model > 3)
    throw InfeasibleConfig("cluster model must be 0..3");

  std::vector<NodePlan> plan = plan_nodes(c);

  // Legal supporters per node: opposite constituent, template permitting.
  std::map<NodeId, std::vector<NodeId>> legal;
  for (const NodePlan& v : plan) {
    auto& lst = legal[v.id];
    for (const NodePlan& u : plan)
      if (u.constituent != v.constituent && u.supports.count(v.cluster))
        lst.push_back(u.id);
    if (static_cast<int>(lst.size()) < c.deg_in_min)
      throw InfeasibleConfig(
          "node " + std::to_string(v.id) + " has only " +
          std::to_string(lst.size()) + " legal supporters but needs " +
          std::to_string(c.deg_in_min));
  }

  Rng rng(c.seed);
  for (int attempt = 0; attempt < kResampleLimit; ++attempt) {
    Network g;
    g.set_cluster_count(1, c.cluster_model == 0 ? 1 : 3);
    g.set_cluster_count(2, c.cluster_model == 0 ? 1 : 3);
    for (const NodePlan& v : plan)
      g.add_node(v.id, v.constituent, v.cluster, v.supports);

    for (const NodePlan& v : plan) {
      const std::vector<NodeId>& pool = legal[v.id];
      int want = rng.uniform_int(c.deg_in_min, c.deg_in_max);
      int k = std::min<int>(want, static_cast<int>(pool.size()));
      // Partial Fisher-Yates draw of k distinct supporters.
      std::vector<NodeId> draw(pool);
      for (int j = 0; j < k; ++j) {
        std::size_t pickj =
            static_cast<std::size_t>(j) +
            static_cast<std::size_t>(rng.below(draw.size() - j));
        std::swap(draw[j], draw[pickj]);
      }
      draw.resize(k);
      std::sort(draw.begin(), draw.end());
      for (NodeId u : draw) g.add_arc(u, v.id);
    }

    // Liveness holds whenever every node keeps a supporter (walk backward
    // long enough and a cycle appears upstream of any node), so this accept
    // check is expected to pass on the first attempt; it is kept as a guard.
    if (cycle_reachable_nodes(g).size() == g.node_count() &&
        g.arc_count() > 0)
      return g;
  }
  throw ResampleLimitExceeded("no live network after " +
                              std::to_string(kResampleLimit) + " attempts");
}

Network generate_path_sunlet(const PathSunletSpec& spec) {
  const int c = spec.cycle_length;
  if (c < 2) throw Error("cycle length must be at least 2");
  if (c % 2 != 0)
    throw Error("cycle length must be even so constituents can alternate");
  if (static_cast<int>(spec.path_nodes.size()) > c)
    throw Error("more paths than cycle nodes to anchor them on");
  for (int k : spec.path_nodes)
    if (k < 1) throw Error("each path needs at least its anchor node");

  Network g;
  for (int j = 1; j <= c; ++j)
    g.add_node(static_cast<NodeId>(j), (j % 2 == 1) ? 1 : 2);
  for (int j = 1; j < c; ++j)
    g.add_arc(static_cast<NodeId>(j), static_cast<NodeId>(j + 1));
  g.add_arc(static_cast<NodeId>(c), 1);

  NodeId next = static_cast<NodeId>(c + 1);
  for (std::size_t p = 0; p < spec.path_nodes.size(); ++p) {
    NodeId prev = static_cast<NodeId>(p + 1);  // anchor: cycle node p+1
    for (int step = 1; step < spec.path_nodes[p]; ++step) {
      int side = 3 - g.constituent(prev);
      g.add_node(next, side);
      g.add_arc(prev, next);
      prev = next++;
    }
  }
  return g;
}

Network ma_saturate(const Network& g, int delta) {
  for (NodeId v : g.node_ids())
    if (g.degree_out(v) > delta)
      throw Error("saturation bound " + std::to_string(delta) +
                  " is below the out-degree of node " + std::to_string(v));

  Network out = g;
  auto addable = [&out, delta](NodeId u, NodeId v) {
    return u != v && out.constituent(u) != out.constituent(v) &&
           !out.has_arc(u, v) && out.degree_out(u) < delta &&
           out.cluster_legal(u, v);
  };

  // Pass 1: the reverse of every existing arc, in arc order. Mutualizing
  // existing support first builds two-cycles before generic fill-in, which
  // is what keeps saturated path-sunlets at their closed-form optimum.
  for (const auto& [ref, dest] : g.arcs())
    if (addable(dest, ref.source)) out.add_arc(dest, ref.source);

  // Pass 2: every remaining ordered cross pair, ascending.
  for (NodeId u : out.node_ids())
    for (NodeId v : out.node_ids())
      if (addable(u, v)) out.add_arc(u, v);

  return out;
}

}  // namespace survnet
