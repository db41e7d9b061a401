// survnet — survivability analysis and restructuring for two-layer
// interdependent networks.
// SPDX-License-Identifier: MIT
#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <vector>

#include "survnet/network.hpp"
#include "survnet/types.hpp"

namespace survnet {

// An elementary directed cycle in canonical form: the node list starts at the
// cycle's smallest node id and follows arc direction, so nodes[i] -> nodes[
// (i+1) % length] is an arc for every i. arcs[i] is that arc's ArcRef.
struct Cycle {
  std::vector<NodeId> nodes;
  std::vector<ArcRef> arcs;

  std::size_t length() const { return nodes.size(); }
  bool contains(NodeId v) const;
};

// Cycles sorted lexicographically by their canonical node lists.
using CycleSet = std::vector<Cycle>;

class CycleCapExceeded : public Error {
 public:
  explicit CycleCapExceeded(std::size_t cap)
      : Error("cycle enumeration exceeded cap of " + std::to_string(cap)),
        cap_(cap) {}
  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
};

inline constexpr std::size_t kDefaultCycleCap = 1000000;

// All elementary directed cycles, via Johnson's algorithm (Johnson, "Finding
// all the elementary circuits of a directed graph", SIAM J. Comput. 1975).
// Throws CycleCapExceeded once more than `cap` cycles have been found.
CycleSet enumerate_cycles(const Network& g, std::size_t cap = kDefaultCycleCap);

// The marginal arcs of a network: arcs that lie on no elementary directed
// cycle, in ascending ArcRef order.
struct MarginalArcSet {
  std::vector<ArcRef> arcs;
};

// Computed exactly without enumerating cycles: an arc (u,v) lies on some
// elementary cycle if and only if u and v share a strongly connected
// component (any arc inside an SCC extends to a cycle via a return path, and
// a cycle keeps all of its nodes strongly connected). The cap parameter is
// accepted for interface symmetry with enumerate_cycles but is never hit.
MarginalArcSet find_marginal_arcs(const Network& g,
                                  std::size_t cap = kDefaultCycleCap);

// The subset of `cycles` passing through node v, preserving order.
CycleSet cycles_through(const Network& g, NodeId v, const CycleSet& cycles);

// Counter-directional distance from v to u along cycle C: the number of arcs
// on the path from u to v following arc direction, i.e. (pos(v) - pos(u))
// modulo the cycle length. Zero iff u == v. Errors if either node is not on
// the cycle.
int counter_distance(const Cycle& c, NodeId v, NodeId u);

// Strongly connected components (Tarjan, iterative). Components hold their
// nodes in ascending order; the component list itself is sorted by smallest
// member, so the result is deterministic.
struct SccResult {
  std::vector<std::vector<NodeId>> components;
  std::map<NodeId, int> component_of;
};
SccResult strongly_connected_components(const Network& g);

// Nodes lying on at least one directed cycle: members of multi-node SCCs,
// plus any self-loop node.
std::set<NodeId> cycle_nodes(const Network& g);

// Nodes reachable (in arc direction) from some cycle node; includes the cycle
// nodes themselves.
std::set<NodeId> cycle_reachable_nodes(const Network& g);

}  // namespace survnet
