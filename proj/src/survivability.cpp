// survnet — survivability analysis and restructuring for two-layer
// interdependent networks.
// SPDX-License-Identifier: MIT
#include "survnet/survivability.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>

namespace survnet {

namespace {

// Dense view of the subgraph induced by the nodes that lie on cycles; all
// directed cycles of the network live entirely inside it, so acyclicity
// checks can ignore everything else.
struct CycleCore {
  std::vector<NodeId> ids;              // ascending
  std::map<NodeId, int> dense;
  std::vector<std::vector<int>> adj;    // arcs within the core

  explicit CycleCore(const Network& g) {
    std::set<NodeId> core = cycle_nodes(g);
    ids.assign(core.begin(), core.end());
    for (int i = 0; i < static_cast<int>(ids.size()); ++i) dense[ids[i]] = i;
    adj.resize(ids.size());
    for (const auto& [ref, dest] : g.arcs()) {
      auto si = dense.find(ref.source);
      auto di = dense.find(dest);
      if (si == dense.end() || di == dense.end()) continue;
      adj[si->second].push_back(di->second);
    }
  }

  // Kahn's algorithm on the core minus the removal mask.
  bool acyclic_without(const std::vector<char>& removed) const {
    const int n = static_cast<int>(ids.size());
    std::vector<int> indeg(n, 0);
    int kept = 0;
    for (int v = 0; v < n; ++v) {
      if (removed[v]) continue;
      ++kept;
      for (int w : adj[v])
        if (!removed[w]) ++indeg[w];
    }
    std::deque<int> q;
    for (int v = 0; v < n; ++v)
      if (!removed[v] && indeg[v] == 0) q.push_back(v);
    int processed = 0;
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      ++processed;
      for (int w : adj[v]) {
        if (removed[w]) continue;
        if (--indeg[w] == 0) q.push_back(w);
      }
    }
    return processed == kept;
  }
};

HittingSet fallback_certificate(const Network& g) {
  std::set<NodeId> core = cycle_nodes(g);
  std::set<NodeId> side1, side2;
  for (NodeId v : core)
    (g.constituent(v) == 1 ? side1 : side2).insert(v);
  // Every cycle alternates constituents, so removing all cycle nodes of
  // either side breaks every cycle; take the smaller side (ties to side 1).
  HittingSet h;
  h.nodes = (side2.size() < side1.size()) ? side2 : side1;
  h.mode = "greedy";
  h.optimal = false;
  return h;
}

HittingSet exact_search(const Network& g, int min_cardinality,
                        std::uint64_t budget) {
  CycleCore core(g);
  const int n = static_cast<int>(core.ids.size());
  HittingSet result;
  result.mode = "exact";
  result.optimal = true;
  if (n == 0) return result;  // already acyclic

  std::uint64_t checks = 0;
  std::vector<char> removed(n, 0);
  int start = std::max(min_cardinality, 1);  // a non-empty core has a cycle
  for (int k = start; k <= n; ++k) {
    // Lexicographic combinations of k candidate indices; the first valid
    // subset within the smallest feasible k is the lexicographically
    // smallest minimum hitting set.
    std::vector<int> c(k);
    for (int i = 0; i < k; ++i) c[i] = i;
    while (true) {
      if (++checks > budget) {
        HittingSet best = fallback_certificate(g);
        throw BudgetExceeded(
            "exact survivability search exceeded budget of " +
                std::to_string(budget) + " acyclicity checks",
            best, budget);
      }
      std::fill(removed.begin(), removed.end(), 0);
      for (int i : c) removed[i] = 1;
      if (core.acyclic_without(removed)) {
        for (int i : c) result.nodes.insert(core.ids[i]);
        return result;
      }
      // next combination
      int i = k - 1;
      while (i >= 0 && c[i] == n - k + i) --i;
      if (i < 0) break;
      ++c[i];
      for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
    }
  }
  throw Error("internal: no hitting set found up to the core size");
}

}  // namespace

bool is_acyclic_without(const Network& g, const std::set<NodeId>& removed) {
  std::map<NodeId, int> indeg;
  for (NodeId v : g.node_ids())
    if (!removed.count(v)) indeg[v] = 0;
  for (const auto& [ref, dest] : g.arcs())
    if (!removed.count(ref.source) && !removed.count(dest)) ++indeg[dest];
  std::deque<NodeId> q;
  for (const auto& [v, d] : indeg)
    if (d == 0) q.push_back(v);
  std::size_t processed = 0;
  while (!q.empty()) {
    NodeId v = q.front();
    q.pop_front();
    ++processed;
    for (NodeId w : g.out_dests(v)) {
      if (removed.count(w)) continue;
      if (--indeg[w] == 0) q.push_back(w);
    }
  }
  return processed == indeg.size();
}

HittingSet survivability_exact(const Network& g, std::uint64_t budget) {
  return exact_search(g, 0, budget);
}

HittingSet survivability_exact_from(const Network& g, int min_cardinality,
                                    std::uint64_t budget) {
  return exact_search(g, min_cardinality, budget);
}

HittingSet survivability_greedy(const Network& g, std::size_t cap) {
  CycleSet cycles = enumerate_cycles(g, cap);
  HittingSet h;
  h.mode = "greedy";
  h.cycles_considered = cycles.size();
  h.optimal = cycles.empty();
  std::vector<char> covered(cycles.size(), 0);
  std::size_t remaining = cycles.size();
  while (remaining > 0) {
    std::map<NodeId, std::size_t> gain;
    for (std::size_t i = 0; i < cycles.size(); ++i) {
      if (covered[i]) continue;
      for (NodeId v : cycles[i].nodes) ++gain[v];
    }
    NodeId best = 0;
    std::size_t best_gain = 0;
    for (const auto& [v, cnt] : gain)
      if (cnt > best_gain) {  // map order makes ties resolve to lowest id
        best = v;
        best_gain = cnt;
      }
    h.nodes.insert(best);
    for (std::size_t i = 0; i < cycles.size(); ++i)
      if (!covered[i] && cycles[i].contains(best)) {
        covered[i] = 1;
        --remaining;
      }
  }
  if (!is_acyclic_without(g, h.nodes))
    throw Error("internal: greedy cover left a cycle");
  return h;
}

namespace {

// Some elementary cycle of the graph minus `removed`, or empty if none.
// Iterative DFS with an explicit path stack, deterministic (ascending ids).
std::vector<NodeId> find_any_cycle(const Network& g,
                                   const std::set<NodeId>& removed) {
  enum : char { kWhite, kGray, kBlack };
  std::map<NodeId, char> color;
  for (NodeId v : g.node_ids())
    if (!removed.count(v)) color[v] = kWhite;

  struct Frame {
    NodeId v;
    std::size_t child;
  };
  for (auto& [root, col] : color) {
    if (col != kWhite) continue;
    std::vector<Frame> stack;
    std::vector<NodeId> path;
    stack.push_back({root, 0});
    color[root] = kGray;
    path.push_back(root);
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& dests = g.out_dests(f.v);
      if (f.child < dests.size()) {
        NodeId w = dests[f.child++];
        if (removed.count(w)) continue;
        char cw = color[w];
        if (cw == kGray) {
          // Back edge: the cycle is the path suffix starting at w.
          auto it = std::find(path.begin(), path.end(), w);
          return std::vector<NodeId>(it, path.end());
        }
        if (cw == kWhite) {
          color[w] = kGray;
          stack.push_back({w, 0});
          path.push_back(w);
        }
      } else {
        color[f.v] = kBlack;
        path.pop_back();
        stack.pop_back();
      }
    }
  }
  return {};
}

}  // namespace

HittingSet survivability_greedy_lazy(const Network& g) {
  HittingSet h;
  h.mode = "greedy";
  std::size_t generated = 0;
  while (true) {
    std::vector<NodeId> cyc = find_any_cycle(g, h.nodes);
    if (cyc.empty()) break;
    ++generated;
    // Remove the busiest node of the found cycle: most live in+out arcs,
    // ties to the lowest id.
    NodeId best = cyc.front();
    int best_deg = -1;
    std::vector<NodeId> sorted(cyc.begin(), cyc.end());
    std::sort(sorted.begin(), sorted.end());
    for (NodeId v : sorted) {
      int deg = 0;
      for (NodeId w : g.out_dests(v))
        if (!h.nodes.count(w)) ++deg;
      for (NodeId w : g.in_neighbors(v))
        if (!h.nodes.count(w)) ++deg;
      if (deg > best_deg) {
        best = v;
        best_deg = deg;
      }
    }
    h.nodes.insert(best);
  }
  h.cycles_considered = generated;
  h.optimal = h.nodes.empty();
  return h;
}

SurvivabilityTag measure_survivability(const Network& g) {
  if (g.node_count() <= kExactMeasureNodeLimit) {
    HittingSet h = survivability_exact(g);
    return {static_cast<int>(h.nodes.size()), "exact"};
  }
  HittingSet h = survivability_greedy_lazy(g);
  return {static_cast<int>(h.nodes.size()), "greedy-lazy"};
}

UpperBoundBreakdown upper_bound(const Network& g, const MarginalArcSet& mas) {
  UpperBoundBreakdown b;
  b.M_total = static_cast<int>(mas.arcs.size());
  std::map<NodeId, int> out_count;   // marginal arcs per source
  std::map<NodeId, int> in_count;    // marginal arcs per destination
  for (const ArcRef& ref : mas.arcs) {
    ++out_count[ref.source];
    ++in_count[g.arc_dest(ref)];
  }
  for (const auto& [v, cnt] : out_count)
    if (cnt >= 2) {
      ++b.V_s;
      b.M_s += cnt;
    }
  for (const auto& [v, cnt] : in_count)
    if (g.degree_in(v) >= 1 && cnt == g.degree_in(v)) {
      ++b.V_d;
      b.M_d += cnt;
    }
  b.U = b.M_total - b.M_s + b.V_s - b.V_d;
  return b;
}

double density(const Network& g) {
  std::size_t n1 = g.constituent_nodes(1).size();
  std::size_t n2 = g.constituent_nodes(2).size();
  if (n1 == 0 || n2 == 0)
    throw Error("density undefined: a constituent is empty");
  return static_cast<double>(g.arc_count()) /
         (static_cast<double>(n1) * static_cast<double>(n2));
}

long long path_sunlet_survivability(const std::vector<int>& chain_lengths) {
  long long total = 0;
  for (int q : chain_lengths) {
    if (q < 1) throw Error("chain length must be >= 1");
    total += (q + 1) / 2;
  }
  return total;
}

}  // namespace survnet
