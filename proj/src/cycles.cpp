// survnet — survivability analysis and restructuring for two-layer
// interdependent networks.
// SPDX-License-Identifier: MIT
#include "survnet/cycles.hpp"

#include <algorithm>
#include <deque>

namespace survnet {

namespace {

// Iterative Tarjan SCC over a dense-index adjacency list, restricted to the
// nodes flagged active. Returns component ids (unordered); inactive nodes
// get component -1.
std::vector<int> tarjan_components(const std::vector<std::vector<int>>& adj,
                                   const std::vector<char>& active,
                                   int& component_count) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
  std::vector<char> on_stack(n, 0);
  std::vector<int> stack;
  component_count = 0;
  int next_index = 0;

  struct Frame {
    int v;
    std::size_t child;
  };
  std::vector<Frame> frames;

  for (int root = 0; root < n; ++root) {
    if (!active[root] || index[root] != -1) continue;
    frames.push_back({root, 0});
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!frames.empty()) {
      Frame& f = frames.back();
      int v = f.v;
      if (f.child < adj[v].size()) {
        int w = adj[v][f.child++];
        if (!active[w]) continue;
        if (index[w] == -1) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = 1;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
      } else {
        if (low[v] == index[v]) {
          int c = component_count++;
          int w;
          do {
            w = stack.back();
            stack.pop_back();
            on_stack[w] = 0;
            comp[w] = c;
          } while (w != v);
        }
        frames.pop_back();
        if (!frames.empty())
          low[frames.back().v] = std::min(low[frames.back().v], low[v]);
      }
    }
  }
  return comp;
}

// Johnson's circuit search state for one start vertex.
struct CircuitSearch {
  const std::vector<std::vector<int>>& adj;
  const std::vector<char>& in_component;
  std::vector<char> blocked;
  std::vector<std::set<int>> block_map;
  std::vector<int> path;
  std::vector<std::vector<int>>& found;
  std::size_t cap;
  int start;

  void unblock(int u) {
    blocked[u] = 0;
    std::set<int> pending;
    pending.swap(block_map[u]);
    for (int w : pending)
      if (blocked[w]) unblock(w);
  }

  bool circuit(int v) {
    bool found_here = false;
    path.push_back(v);
    blocked[v] = 1;
    for (int w : adj[v]) {
      if (!in_component[w]) continue;
      if (w == start) {
        if (found.size() >= cap) throw CycleCapExceeded(cap);
        found.push_back(path);
        found_here = true;
      } else if (!blocked[w]) {
        if (circuit(w)) found_here = true;
      }
    }
    if (found_here) {
      unblock(v);
    } else {
      for (int w : adj[v])
        if (in_component[w]) block_map[w].insert(v);
    }
    path.pop_back();
    return found_here;
  }
};

}  // namespace

bool Cycle::contains(NodeId v) const {
  return std::find(nodes.begin(), nodes.end(), v) != nodes.end();
}

CycleSet enumerate_cycles(const Network& g, std::size_t cap) {
  const std::vector<NodeId> ids = g.node_ids();
  const int n = static_cast<int>(ids.size());
  std::map<NodeId, int> dense;
  for (int i = 0; i < n; ++i) dense[ids[i]] = i;
  std::vector<std::vector<int>> adj(n);
  for (const auto& [ref, dest] : g.arcs())
    adj[dense[ref.source]].push_back(dense[dest]);
  for (auto& row : adj) std::sort(row.begin(), row.end());

  // Each elementary cycle is discovered exactly once: when the start vertex
  // equals its smallest dense index, searching only within {start..n-1}.
  // That also makes every recorded node list canonical (smallest node first).
  std::vector<std::vector<int>> found;
  for (int s = 0; s < n; ++s) {
    std::vector<char> active(n, 0);
    for (int v = s; v < n; ++v) active[v] = 1;
    int ncomp = 0;
    std::vector<int> comp = tarjan_components(adj, active, ncomp);
    std::vector<char> in_component(n, 0);
    int members = 0;
    for (int v = s; v < n; ++v)
      if (comp[v] == comp[s]) {
        in_component[v] = 1;
        ++members;
      }
    bool self_loop =
        std::binary_search(adj[s].begin(), adj[s].end(), s);
    if (members < 2 && !self_loop) continue;
    CircuitSearch search{adj,
                         in_component,
                         std::vector<char>(n, 0),
                         std::vector<std::set<int>>(n),
                         {},
                         found,
                         cap,
                         s};
    search.circuit(s);
  }

  CycleSet out;
  out.reserve(found.size());
  for (const auto& dense_nodes : found) {
    Cycle c;
    c.nodes.reserve(dense_nodes.size());
    for (int v : dense_nodes) c.nodes.push_back(ids[v]);
    c.arcs.reserve(c.nodes.size());
    for (std::size_t i = 0; i < c.nodes.size(); ++i) {
      NodeId from = c.nodes[i];
      NodeId to = c.nodes[(i + 1) % c.nodes.size()];
      auto ref = g.find_arc(from, to);
      if (!ref) throw Error("internal: cycle arc missing from network");
      c.arcs.push_back(*ref);
    }
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(),
            [](const Cycle& a, const Cycle& b) { return a.nodes < b.nodes; });
  return out;
}

SccResult strongly_connected_components(const Network& g) {
  const std::vector<NodeId> ids = g.node_ids();
  const int n = static_cast<int>(ids.size());
  std::map<NodeId, int> dense;
  for (int i = 0; i < n; ++i) dense[ids[i]] = i;
  std::vector<std::vector<int>> adj(n);
  for (const auto& [ref, dest] : g.arcs())
    adj[dense[ref.source]].push_back(dense[dest]);
  std::vector<char> active(n, 1);
  int ncomp = 0;
  std::vector<int> comp = tarjan_components(adj, active, ncomp);

  std::vector<std::vector<NodeId>> groups(ncomp);
  for (int v = 0; v < n; ++v) groups[comp[v]].push_back(ids[v]);
  for (auto& grp : groups) std::sort(grp.begin(), grp.end());
  std::sort(groups.begin(), groups.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });

  SccResult res;
  res.components = std::move(groups);
  for (int c = 0; c < static_cast<int>(res.components.size()); ++c)
    for (NodeId v : res.components[c]) res.component_of[v] = c;
  return res;
}

MarginalArcSet find_marginal_arcs(const Network& g, std::size_t cap) {
  (void)cap;
  SccResult scc = strongly_connected_components(g);
  MarginalArcSet out;
  for (const auto& [ref, dest] : g.arcs()) {
    // An arc lies on an elementary cycle iff its endpoints are strongly
    // connected (a same-component arc closes with a return path; a self-loop
    // is its own cycle). Arcs between components can never be on a cycle.
    if (scc.component_of.at(ref.source) != scc.component_of.at(dest))
      out.arcs.push_back(ref);
  }
  return out;
}

CycleSet cycles_through(const Network& g, NodeId v, const CycleSet& cycles) {
  if (!g.has_node(v)) throw UnknownNode(v);
  CycleSet out;
  for (const Cycle& c : cycles)
    if (c.contains(v)) out.push_back(c);
  return out;
}

int counter_distance(const Cycle& c, NodeId v, NodeId u) {
  const int len = static_cast<int>(c.nodes.size());
  int pos_v = -1, pos_u = -1;
  for (int i = 0; i < len; ++i) {
    if (c.nodes[i] == v) pos_v = i;
    if (c.nodes[i] == u) pos_u = i;
  }
  if (pos_v < 0)
    throw Error("counter_distance: node " + std::to_string(v) +
                " not on cycle");
  if (pos_u < 0)
    throw Error("counter_distance: node " + std::to_string(u) +
                " not on cycle");
  return ((pos_v - pos_u) % len + len) % len;
}

std::set<NodeId> cycle_nodes(const Network& g) {
  SccResult scc = strongly_connected_components(g);
  std::set<NodeId> out;
  for (const auto& comp : scc.components) {
    if (comp.size() >= 2) {
      out.insert(comp.begin(), comp.end());
    } else if (g.has_arc(comp.front(), comp.front())) {
      out.insert(comp.front());
    }
  }
  return out;
}

std::set<NodeId> cycle_reachable_nodes(const Network& g) {
  std::set<NodeId> seen = cycle_nodes(g);
  std::deque<NodeId> queue(seen.begin(), seen.end());
  while (!queue.empty()) {
    NodeId v = queue.front();
    queue.pop_front();
    for (NodeId w : g.out_dests(v))
      if (seen.insert(w).second) queue.push_back(w);
  }
  return seen;
}

}  // namespace survnet
