// survnet — survivability analysis and restructuring for two-layer
// interdependent networks.
// SPDX-License-Identifier: MIT
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "survnet/cascade.hpp"
#include "survnet/generate.hpp"
#include "survnet/rng.hpp"
#include "survnet/survivability.hpp"

using survnet::CascadeResult;
using survnet::Network;
using survnet::NodeId;

TEST_CASE("failure waves propagate through the quad fixture") {
  Network g = fixtures::quad_interlock();

  SUBCASE("failing node 1 dooms everything in three waves") {
    CascadeResult r = survnet::cascade(g, {1});
    CHECK(r.initial_failures == std::set<NodeId>{1});
    CHECK(r.nonfunctional == std::set<NodeId>{1, 2, 3, 4});
    CHECK(r.theta == 4);
    CHECK(r.rounds == 3);  // 3 falls, then 2, then 4
  }
  SUBCASE("failing node 4 stops at node 4") {
    CascadeResult r = survnet::cascade(g, {4});
    CHECK(r.nonfunctional == std::set<NodeId>{4});
    CHECK(r.theta == 1);
    CHECK(r.rounds == 0);
  }
  SUBCASE("failing node 3 also cascades fully, in a different wave order") {
    CascadeResult r = survnet::cascade(g, {3});
    CHECK(r.theta == 4);
  }
  SUBCASE("no initial failures, no deaths in a live network") {
    CascadeResult r = survnet::cascade(g, {});
    CHECK(r.nonfunctional.empty());
    CHECK(r.theta == 0);
    CHECK(r.rounds == 0);
  }
  SUBCASE("unknown seeds are rejected") {
    CHECK_THROWS_AS(survnet::cascade(g, {42}), survnet::UnknownNode);
  }
}

TEST_CASE("theta counts the seed even when nothing else falls") {
  Network g = fixtures::shared_two_cycles();
  CascadeResult r = survnet::cascade(g, {9});  // pendant sink
  CHECK(r.nonfunctional == std::set<NodeId>{9});
  CHECK(r.theta == 1);
}

TEST_CASE("cascade agrees with greatest-fixpoint pruning on random graphs") {
  for (std::uint64_t seed = 300; seed <= 320; ++seed) {
    Network g = fixtures::random_bipartite(seed, 6, 6, 30);
    survnet::Rng rng(seed + 999);
    for (int t = 0; t < 6; ++t) {
      std::set<NodeId> fail;
      for (NodeId v : g.node_ids())
        if (rng.below(4) == 0) fail.insert(v);
      CascadeResult r = survnet::cascade(g, fail);
      CHECK(r.nonfunctional == oracle::cascade_dead(g, fail));
      CHECK(r.theta == static_cast<int>(r.nonfunctional.size()));
      // seeds are always included
      for (NodeId v : fail) CHECK(r.nonfunctional.count(v) == 1);
    }
  }
}

TEST_CASE("failing more nodes never saves anyone") {
  for (std::uint64_t seed = 330; seed <= 340; ++seed) {
    Network g = fixtures::random_bipartite(seed, 5, 5, 40);
    survnet::Rng rng(seed * 3 + 1);
    std::set<NodeId> small, large;
    for (NodeId v : g.node_ids()) {
      bool in_small = rng.below(5) == 0;
      if (in_small) small.insert(v);
      if (in_small || rng.below(5) == 0) large.insert(v);
    }
    std::set<NodeId> dead_small = survnet::cascade(g, small).nonfunctional;
    std::set<NodeId> dead_large = survnet::cascade(g, large).nonfunctional;
    for (NodeId v : dead_small) CHECK(dead_large.count(v) == 1);
  }
}

TEST_CASE("removing a minimum hitting set dooms a live network entirely") {
  survnet::GeneratorConfig c;
  c.deg_in_min = 1;
  c.deg_in_max = 2;
  for (std::uint64_t seed = 350; seed <= 360; ++seed) {
    c.n1 = c.n2 = 6;
    c.seed = seed;
    Network g = survnet::generate_random(c);
    std::set<NodeId> h = survnet::survivability_exact(g).nodes;
    CascadeResult r = survnet::cascade(g, h);
    CHECK(r.theta == static_cast<int>(g.node_count()));
  }
}

TEST_CASE("impact statistics aggregate the single-seed sweep") {
  survnet::ImpactStats s = survnet::impact_stats(fixtures::quad_interlock());
  CHECK(s.per_node.at(1) == 4);
  CHECK(s.per_node.at(2) == 2);
  CHECK(s.per_node.at(3) == 4);
  CHECK(s.per_node.at(4) == 1);
  CHECK(s.worst == 4);
  CHECK(s.average == doctest::Approx(2.75));

  SUBCASE("empty network yields zeros") {
    Network g;
    survnet::ImpactStats z = survnet::impact_stats(g);
    CHECK(z.worst == 0);
    CHECK(z.average == doctest::Approx(0.0));
    CHECK(z.per_node.empty());
  }
}
