// survnet — survivability analysis and restructuring for two-layer
// interdependent networks.
// SPDX-License-Identifier: MIT
//
// Hand-built networks shared across the test suite. Every structural claim
// in these comments (cycle lists, hitting sets, marginal arcs) is asserted
// by tests, so the fixtures double as executable documentation.
#pragma once

#include "survnet/network.hpp"
#include "survnet/rng.hpp"

namespace fixtures {

using survnet::Network;
using survnet::NodeId;

// Four nodes, two per side, one 2-cycle (1 <-> 3) plus two one-way supports.
// Failing node 1 cascades through everything; failing node 4 stops at 4.
inline Network quad_interlock() {
  Network g;
  g.add_node(1, 1);
  g.add_node(2, 1);
  g.add_node(3, 2);
  g.add_node(4, 2);
  g.add_arc(1, 3);
  g.add_arc(2, 4);
  g.add_arc(3, 1);
  g.add_arc(3, 2);
  return g;
}

// Ten nodes: a 6-cycle (1,2,3,6,7,8) and a 4-cycle (2,4,5,10) sharing node
// 2, plus two marginal arcs (1,9) and (3,9) into the pendant node 9.
// Survivability 1 ({2}); relocating (1,9) into the 6-cycle raises it to 2.
inline Network shared_two_cycles() {
  Network g;
  for (NodeId v : {1, 3, 7, 4, 10}) g.add_node(v, 1);
  for (NodeId v : {2, 6, 8, 5, 9}) g.add_node(v, 2);
  g.add_arc(1, 2);
  g.add_arc(2, 3);
  g.add_arc(3, 6);
  g.add_arc(6, 7);
  g.add_arc(7, 8);
  g.add_arc(8, 1);
  g.add_arc(2, 4);
  g.add_arc(4, 5);
  g.add_arc(5, 10);
  g.add_arc(10, 2);
  g.add_arc(1, 9);  // marginal
  g.add_arc(3, 9);  // marginal
  return g;
}

// Six nodes: a 4-cycle (1,5,4,2) and a 2-cycle (1,6) sharing node 1, plus
// two marginal arcs (2,3) and (5,3) into the sink node 3. Survivability 1
// ({1}); exactly one of the two marginal arcs can be usefully relocated.
inline Network overlap_choice() {
  Network g;
  for (NodeId v : {1, 3, 4}) g.add_node(v, 1);
  for (NodeId v : {2, 5, 6}) g.add_node(v, 2);
  g.add_arc(4, 2);
  g.add_arc(2, 1);
  g.add_arc(1, 5);
  g.add_arc(5, 4);
  g.add_arc(1, 6);
  g.add_arc(6, 1);
  g.add_arc(2, 3);  // marginal
  g.add_arc(5, 3);  // marginal
  return g;
}

// Seven nodes, one core 4-cycle (1,2,3,4) and seven marginal arcs arranged
// so a single hop-1 relocation pass exercises every mechanism: two
// cycle-forming moves, two two-cycle fallbacks, and all three skip reasons'
// little siblings (stranding twice, no candidate once).
inline Network relocation_gauntlet() {
  Network g;
  for (NodeId v : {1, 3, 6}) g.add_node(v, 1);
  for (NodeId v : {2, 4, 5, 7}) g.add_node(v, 2);
  g.add_arc(1, 2);
  g.add_arc(1, 5);  // marginal
  g.add_arc(1, 7);  // marginal
  g.add_arc(2, 3);
  g.add_arc(2, 6);  // marginal
  g.add_arc(3, 4);
  g.add_arc(3, 5);  // marginal
  g.add_arc(3, 7);  // marginal
  g.add_arc(4, 1);
  g.add_arc(5, 6);  // marginal
  g.add_arc(6, 7);  // marginal
  return g;
}

// Two disjoint 2-cycles; the minimum hitting set is any one node of each,
// and the lexicographic tie rule must pick {1, 3}.
inline Network two_disjoint_two_cycles() {
  Network g;
  g.add_node(1, 1);
  g.add_node(3, 1);
  g.add_node(2, 2);
  g.add_node(4, 2);
  g.add_arc(1, 2);
  g.add_arc(2, 1);
  g.add_arc(3, 4);
  g.add_arc(4, 3);
  return g;
}

// Random bipartite digraph with arc probability percent/100 in each
// direction, no liveness guarantee — broader structural coverage than the
// generator's live networks.
inline Network random_bipartite(std::uint64_t seed, int n1, int n2,
                                int percent) {
  survnet::Rng rng(seed);
  Network g;
  for (int i = 1; i <= n1; ++i) g.add_node(static_cast<NodeId>(i), 1);
  for (int j = 1; j <= n2; ++j)
    g.add_node(static_cast<NodeId>(n1 + j), 2);
  for (int i = 1; i <= n1; ++i)
    for (int j = 1; j <= n2; ++j) {
      NodeId u = static_cast<NodeId>(i);
      NodeId v = static_cast<NodeId>(n1 + j);
      if (rng.below(100) < static_cast<std::uint64_t>(percent))
        g.add_arc(u, v);
      if (rng.below(100) < static_cast<std::uint64_t>(percent))
        g.add_arc(v, u);
    }
  return g;
}

}  // namespace fixtures
