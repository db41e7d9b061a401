// survnet — survivability analysis and restructuring for two-layer
// interdependent networks.
// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "survnet/cycles.hpp"
#include "survnet/network.hpp"
#include "survnet/survivability.hpp"

namespace survnet {

class EvenHop : public Error {
 public:
  explicit EvenHop(int l)
      : Error("hop count must be a positive odd integer, got " +
              std::to_string(l)),
        l_(l) {}
  int hop() const { return l_; }

 private:
  int l_;
};

// How a marginal arc was handled.
enum class Mechanism {
  cycle_forming,  // redirected into an existing cycle at odd counter-distance
  minimal_add,    // redirected back at one of its source's supporters
  reassigned,     // redirected to a uniform random legal destination
  skipped,        // left in place (skip_reason says why)
};
std::string to_string(Mechanism m);

struct RelocationStep {
  int step_index = 0;
  ArcRef arc{};          // stable identity of the arc acted on
  NodeId old_dest = 0;
  NodeId new_dest = 0;   // == old_dest for skipped steps and no-op draws
  Mechanism mechanism = Mechanism::skipped;
  int cycle_id = -1;     // index into the enumerated cycle universe, or -1
  int hop = 0;           // counter-distance used by cycle_forming
  std::string skip_reason;
};

// Stable skip reasons (matched by tests and the step-log consumers).
inline constexpr const char* kSkipStranded =
    "destination would lose its last support";
inline constexpr const char* kSkipNoIncoming = "source has no incoming arcs";
inline constexpr const char* kSkipNoCandidate =
    "no legal relocation candidate";
inline constexpr const char* kSkipRetryCap =
    "no valid reassignment within retry cap";

struct RestructureReport {
  std::vector<RelocationStep> steps;
  int mas_found = 0;
  int mas_relocated = 0;      // cycle_forming + reassigned
  int mas_minimal_added = 0;
  int mas_skipped = 0;
  SurvivabilityTag survivability_before;
  SurvivabilityTag survivability_after;
  UpperBoundBreakdown upper_bound;
  std::set<NodeId> used_nodes;  // destinations consumed by cycle-forming
  std::uint64_t seed = 0;
  // "enumerated" when the cycle universe fit under kRestructureEnumCap,
  // "sampled" when cycles were drawn by seeded backward walks instead,
  // "none" for modes that use no cycle universe.
  std::string cycle_source;
};

// Cycle universes above this many cycles are sampled rather than enumerated.
inline constexpr std::size_t kRestructureEnumCap = 20000;

// Single-pass marginal-arc relocation. For each marginal arc (v,w) in
// ascending ArcRef order, provided w keeps another supporter: try to point
// the arc at a node u at odd counter-distance i (descending l, l-2, ..., 1)
// on a cycle through v — drawing cycles seeded-randomly without replacement
// — such that u is not already consumed, (v,u) is absent and u's cluster is
// supportable by v; the consumed set then absorbs the backward path within
// distance i. If no cycle placement exists, fall back to pointing the arc at
// one of v's current supporters (a two-cycle), chosen seeded-randomly among
// legal ones. Anything else is recorded as skipped. Relocations only ever
// add cycles, so survivability never decreases.
//
// l must be a positive odd integer (EvenHop otherwise); the input must pass
// validation (InvalidNetwork otherwise).
std::pair<Network, RestructureReport> delta_h(const Network& g, int l,
                                              std::uint64_t seed);

// The two-cycle fallback as a standalone operation on one marginal arc.
// Draws uniformly among current supporters u of the arc's source with (v,u)
// absent and u's cluster supportable; returns a skipped step when none
// qualify. `used` is accepted for signature symmetry with the cycle-forming
// path but does not constrain the draw. Mutates g on success.
RelocationStep minimal_add(Network& g, const ArcRef& ma, std::uint64_t seed,
                           const std::set<NodeId>& used);

// One subnetwork per (constituent, cluster), in that order. Each arc lands
// in exactly one subnetwork: the first cluster (scanning constituent 1 then
// 2, clusters ascending) containing its source or its destination. Nodes of
// a subnetwork are the endpoints of its arcs.
struct ClusterTag {
  int constituent = 1;
  int cluster = 1;
};
std::vector<std::pair<ClusterTag, Network>> decompose_clusters(
    const Network& g);

// Runs the relocation pass within each cluster subnetwork in decomposition
// order, sharing one seeded stream across subnetworks, with a fresh consumed
// set per subnetwork. Support checks (a destination keeping a supporter)
// always consult the full network. Returns the merged network and one report
// per subnetwork. On a network with one cluster per side this is equivalent
// to delta_h with the same seed.
std::pair<Network, std::vector<RestructureReport>> clustered_delta_h(
    const Network& g, int l, std::uint64_t seed);

// Control arm: each marginal arc's destination is redrawn uniformly at
// random over the opposite constituent (keeping the current destination is a
// legal draw). Draws that would strand the old destination, duplicate an
// existing arc or violate cluster supportability are redrawn, up to a retry
// cap per arc, after which the arc is left in place and recorded skipped.
std::pair<Network, RestructureReport> random_reassign(const Network& g,
                                                      std::uint64_t seed);

// Exhaustive relocation oracle: tries every joint assignment of destinations
// to marginal arcs (each arc ranges over every opposite-constituent node
// whose cluster its source can support — keeping it in place included),
// discards assignments that duplicate arcs or strand a node, and evaluates
// the rest exactly. search_space is the full product before discarding;
// if it exceeds the budget, BudgetExceeded is thrown before any evaluation.
struct OptimumResult {
  int best_delta = 0;
  // Final destination per marginal arc for the best assignment found first
  // in ascending enumeration order (deterministic).
  std::vector<std::pair<ArcRef, NodeId>> witness;
  std::uint64_t search_space = 0;
  std::uint64_t assignments_evaluated = 0;
  int survivability_before = 0;
  int survivability_after = 0;
};
inline constexpr std::uint64_t kDefaultOracleBudget = 1000000;
OptimumResult exhaustive_optimum(const Network& g,
                                 std::uint64_t budget = kDefaultOracleBudget);

}  // namespace survnet
