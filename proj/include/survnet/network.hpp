// survnet — survivability analysis and restructuring for two-layer
// interdependent networks.
// SPDX-License-Identifier: MIT
#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "survnet/types.hpp"

namespace survnet {

// Per-node attributes: which constituent network the node belongs to (1 or
// 2), its cluster within that constituent, and the set of opposite-side
// clusters it may draw support arcs toward (its supportable-cluster set).
struct NodeInfo {
  int constituent = 1;
  int cluster = 1;
  std::set<int> supports = {1};
  bool operator==(const NodeInfo&) const = default;
};

// Summary of the two constituents: node lists per cluster, how many nodes in
// each constituent actually support something (out-degree >= 1), and which
// side is the smaller supporting side (ties go to constituent 1).
struct ConstituentSummary {
  struct Side {
    int node_count = 0;
    int supporting_count = 0;
    std::map<int, std::vector<NodeId>> clusters;
  };
  std::array<Side, 2> side;
  int minimum_supporting_side = 1;
  bool supporting_tie = false;
};

// A two-constituent interdependent network modelled as one directed graph.
// Arcs point from a supporting node to the node it supports; in a valid
// network every arc crosses between the constituents and the graph is simple
// (no duplicate (source,destination) pairs — duplicates are rejected at
// construction, other structural rules are reported by validate()).
//
// Arc identity is positional: the m-th out-arc of node v is ArcRef{v, m},
// by insertion order, and relocation rewrites only the destination slot, so
// indices are stable for the lifetime of the network.
class Network {
 public:
  Network() = default;

  // ---- construction ----
  void set_cluster_count(int constituent, int count);
  void add_node(NodeId id, int constituent, int cluster = 1,
                std::set<int> supports = {1});
  ArcRef add_arc(NodeId source, NodeId dest);
  // Points an existing arc at a new destination. The new pair must not
  // duplicate an existing arc and the destination must exist.
  void relocate_arc(const ArcRef& arc, NodeId new_dest);

  // ---- queries ----
  bool has_node(NodeId id) const { return nodes_.count(id) != 0; }
  bool has_arc(NodeId source, NodeId dest) const {
    return arc_index_.count({source, dest}) != 0;
  }
  std::optional<ArcRef> find_arc(NodeId source, NodeId dest) const;
  NodeId arc_dest(const ArcRef& arc) const;
  int degree_in(NodeId id) const;
  int degree_out(NodeId id) const;
  int constituent(NodeId id) const { return info(id).constituent; }
  int cluster(NodeId id) const { return info(id).cluster; }
  const std::set<int>& supports(NodeId id) const { return info(id).supports; }
  int cluster_count(int constituent) const;
  // true when the destination's cluster is in the source's supportable set.
  bool cluster_legal(NodeId source, NodeId dest) const;

  std::size_t node_count() const { return nodes_.size(); }
  std::size_t arc_count() const { return arc_index_.size(); }
  std::vector<NodeId> node_ids() const;
  std::vector<NodeId> constituent_nodes(int constituent) const;
  // All arcs in ascending ArcRef order, with their current destinations.
  std::vector<std::pair<ArcRef, NodeId>> arcs() const;
  // Destinations of a node's out-arcs, in arc-index order.
  const std::vector<NodeId>& out_dests(NodeId id) const;
  std::vector<ArcRef> in_arcs(NodeId id) const;
  std::vector<NodeId> in_neighbors(NodeId id) const;
  ConstituentSummary constituent_summary() const;

  // ---- canonical text form ----
  // Header "k=2 gamma1=<int> gamma2=<int>", then "node <id> <constituent>
  // <cluster> supports=<comma-list>" in ascending id order, then
  // "arc <source> <dest>" grouped by ascending source in arc-index order.
  // UTF-8, LF line endings. Loading rejects duplicate (source,dest) pairs.
  static Network load(const std::string& path);
  static Network from_text(const std::string& text);
  void save(const std::string& path) const;
  std::string to_text() const;

  friend bool operator==(const Network& a, const Network& b) {
    return a.gamma_ == b.gamma_ && a.nodes_ == b.nodes_ && a.out_ == b.out_;
  }

 private:
  const NodeInfo& info(NodeId id) const;

  std::array<int, 2> gamma_{1, 1};
  std::map<NodeId, NodeInfo> nodes_;
  std::map<NodeId, std::vector<NodeId>> out_;  // destination per arc index
  std::map<NodeId, int> in_degree_;
  std::map<std::pair<NodeId, NodeId>, std::uint32_t> arc_index_;
};

}  // namespace survnet
