// survnet — survivability analysis and restructuring for two-layer
// interdependent networks.
// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>

#include "survnet/cycles.hpp"
#include "survnet/network.hpp"

namespace survnet {

// A set of nodes whose removal leaves the network free of directed cycles.
// Survivability is the size of the minimum such set: the fewest node
// failures that doom every remaining node.
struct HittingSet {
  std::set<NodeId> nodes;
  std::string mode;  // "exact" or "greedy"
  std::size_t cycles_considered = 0;
  bool optimal = false;  // true only when minimality was proved
};

// Thrown when a bounded search runs out of budget. best_known, when present,
// is a valid (but not necessarily minimum) certificate found on the way.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, std::optional<HittingSet> best,
                 std::uint64_t budget)
      : Error(what), best_known(std::move(best)), budget_(budget) {}
  std::optional<HittingSet> best_known;
  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t budget_;
};

inline constexpr std::uint64_t kDefaultExactBudget = 20000000;

// Minimum directed-cycle hitting set by exhaustive search over node subsets
// in increasing cardinality; within a cardinality, subsets are tried in
// lexicographic order, so ties resolve to the lexicographically smallest
// set. Only nodes lying on some cycle are candidates (no minimum set ever
// needs another node). The budget caps the number of acyclicity checks;
// exceeding it raises BudgetExceeded carrying a valid fallback certificate
// (all cycle nodes of the smaller supporting side) flagged non-optimal.
HittingSet survivability_exact(const Network& g,
                               std::uint64_t budget = kDefaultExactBudget);

// Same search starting at a known lower bound on the answer. Sound whenever
// the caller has proved no smaller hitting set can exist — e.g. a network
// derived from another purely by adding cycles can never need fewer nodes.
HittingSet survivability_exact_from(const Network& g, int min_cardinality,
                                    std::uint64_t budget = kDefaultExactBudget);

// Greedy set cover over the fully enumerated cycle set: repeatedly remove
// the node on the most uncovered cycles (ties to the lowest id). Propagates
// CycleCapExceeded from enumeration. Carries the classic ln(#cycles)+1
// approximation guarantee of greedy set cover.
HittingSet survivability_greedy(const Network& g,
                                std::size_t cap = kDefaultCycleCap);

// Greedy by lazy constraint generation: find some surviving cycle, remove
// that cycle's highest-degree node (ties to the lowest id), repeat. Never
// enumerates the full cycle set, so it scales to networks whose cycle count
// is astronomical; offers no approximation guarantee.
HittingSet survivability_greedy_lazy(const Network& g);

// True when deleting `removed` leaves no directed cycle (Kahn's algorithm).
bool is_acyclic_without(const Network& g, const std::set<NodeId>& removed);

// A survivability value together with how it was measured.
struct SurvivabilityTag {
  int value = 0;
  std::string mode;  // "exact" or "greedy-lazy"
};

inline constexpr std::size_t kExactMeasureNodeLimit = 24;

// Measurement rule used by restructuring reports and the experiment harness:
// exact up to kExactMeasureNodeLimit total nodes, lazy greedy beyond.
SurvivabilityTag measure_survivability(const Network& g);

// Closed-form bound breakdown for how many marginal-arc relocations can
// possibly raise survivability. M_s counts marginal arcs leaving sources
// that emit two or more of them (V_s such sources); V_d counts nodes all of
// whose incoming arcs are marginal (M_d those arcs), which pins at least one
// arc per such node in place. U = M_total - M_s + V_s - V_d.
struct UpperBoundBreakdown {
  int M_total = 0;
  int M_s = 0;
  int V_s = 0;
  int V_d = 0;
  int M_d = 0;
  int U = 0;
};
UpperBoundBreakdown upper_bound(const Network& g, const MarginalArcSet& mas);

// |A| / (|V1| * |V2|); errors when either constituent is empty.
double density(const Network& g);

// Minimum hitting set size of a fully saturated path-sunlet, given the
// chain decomposition lengths: sum of ceil(q/2) over the chains.
long long path_sunlet_survivability(const std::vector<int>& chain_lengths);

}  // namespace survnet
