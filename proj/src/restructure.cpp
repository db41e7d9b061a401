// survnet — survivability analysis and restructuring for two-layer
// interdependent networks.
// SPDX-License-Identifier: MIT
#include "survnet/restructure.hpp"

#include <algorithm>
#include <map>

#include "survnet/rng.hpp"
#include "survnet/validate.hpp"

namespace survnet {

namespace {

constexpr int kSampleWalkTries = 24;
constexpr int kReassignRetryCap = 100;

std::map<NodeId, std::vector<NodeId>> build_in_adjacency(const Network& g) {
  std::map<NodeId, std::vector<NodeId>> in;
  for (NodeId v : g.node_ids()) in[v] = {};
  for (const auto& [ref, dest] : g.arcs()) in[dest].push_back(ref.source);
  for (auto& [v, preds] : in) std::sort(preds.begin(), preds.end());
  return in;
}

// Shared state for one relocation pass. The pass mutates the full working
// network g while drawing its cycle placements from a universe fixed when
// the pass started: either the enumerated cycle set of the scope graph, or
// (when that set is too large) seeded backward walks over the scope graph's
// strongly connected components. scope_refs, when set, limits which arcs
// count as a source's supporters for the two-cycle fallback (used by the
// clustered pass to stay inside one subnetwork).
struct RelocationContext {
  Network& g;
  Rng& rng;
  std::set<NodeId>& used;
  int l = 1;
  const CycleSet* cycles = nullptr;                       // enumerated mode
  const SccResult* scope_scc = nullptr;                   // sampled mode
  const std::map<NodeId, std::vector<NodeId>>* scope_in = nullptr;
  const std::set<ArcRef>* scope_refs = nullptr;
};

// Current supporters of v that qualify as two-cycle targets. any_incoming
// reports whether v has any in-arc at all (within scope); the returned list
// additionally excludes duplicates of existing arcs and cluster-illegal
// targets. Ascending, for a deterministic seeded draw.
std::vector<NodeId> two_cycle_candidates(const Network& g,
                                         const std::set<ArcRef>* scope_refs,
                                         NodeId v, bool& any_incoming) {
  any_incoming = false;
  std::vector<NodeId> out;
  for (const auto& [ref, dest] : g.arcs()) {
    if (dest != v) continue;
    if (scope_refs && !scope_refs->count(ref)) continue;
    any_incoming = true;
    NodeId u = ref.source;
    if (u == v) continue;
    if (g.has_arc(v, u)) continue;
    if (!g.cluster_legal(v, u)) continue;
    out.push_back(u);
  }
  return out;
}

RelocationStep two_cycle_fallback(Network& g, Rng& rng,
                                  const std::set<ArcRef>* scope_refs,
                                  const ArcRef& ma) {
  RelocationStep step;
  step.arc = ma;
  step.old_dest = g.arc_dest(ma);
  step.new_dest = step.old_dest;
  bool any_incoming = false;
  std::vector<NodeId> cands =
      two_cycle_candidates(g, scope_refs, ma.source, any_incoming);
  if (!any_incoming) {
    step.mechanism = Mechanism::skipped;
    step.skip_reason = kSkipNoIncoming;
    return step;
  }
  if (cands.empty()) {
    step.mechanism = Mechanism::skipped;
    step.skip_reason = kSkipNoCandidate;
    return step;
  }
  NodeId u = cands[rng.below(cands.size())];
  g.relocate_arc(ma, u);
  step.mechanism = Mechanism::minimal_add;
  step.new_dest = u;
  return step;
}

void process_marginal_arc(RelocationContext& ctx, const ArcRef& ma,
                          std::vector<RelocationStep>& steps) {
  const NodeId v = ma.source;
  const NodeId w = ctx.g.arc_dest(ma);

  RelocationStep step;
  step.step_index = static_cast<int>(steps.size());
  step.arc = ma;
  step.old_dest = w;
  step.new_dest = w;

  // Moving (v,w) must not strand w: it needs another supporter right now.
  if (ctx.g.degree_in(w) < 2) {
    step.mechanism = Mechanism::skipped;
    step.skip_reason = kSkipStranded;
    steps.push_back(step);
    return;
  }

  if (ctx.cycles) {
    // Enumerated universe: draw cycles through v without replacement; on
    // each, try the longest admissible odd counter-distance first.
    std::vector<int> through;
    for (int i = 0; i < static_cast<int>(ctx.cycles->size()); ++i)
      if ((*ctx.cycles)[i].contains(v)) through.push_back(i);
    ctx.rng.shuffle(through);
    for (int ci : through) {
      const Cycle& c = (*ctx.cycles)[ci];
      const int len = static_cast<int>(c.length());
      int pos_v = 0;
      while (c.nodes[pos_v] != v) ++pos_v;
      for (int hop = ctx.l; hop >= 1; hop -= 2) {
        if (hop > len - 1) continue;
        NodeId u = c.nodes[((pos_v - hop) % len + len) % len];
        if (ctx.used.count(u)) continue;
        if (ctx.g.has_arc(v, u)) continue;
        if (!ctx.g.cluster_legal(v, u)) continue;
        ctx.g.relocate_arc(ma, u);
        step.mechanism = Mechanism::cycle_forming;
        step.new_dest = u;
        step.cycle_id = ci;
        step.hop = hop;
        for (int d = 0; d <= hop; ++d)
          ctx.used.insert(c.nodes[((pos_v - d) % len + len) % len]);
        steps.push_back(step);
        return;
      }
    }
  } else if (ctx.scope_scc) {
    // Sampled universe: walk backward from v inside its strongly connected
    // component; a completed simple walk of odd length i ending at u is a
    // path u -> ... -> v of existing arcs, so (v,u) closes a new cycle and
    // the walk's nodes are exactly the counter-distance <= i set to consume.
    auto itc = ctx.scope_scc->component_of.find(v);
    bool on_cycle =
        itc != ctx.scope_scc->component_of.end() &&
        ctx.scope_scc->components[itc->second].size() >= 2;
    if (on_cycle) {
      const int comp = itc->second;
      for (int hop = ctx.l; hop >= 1; hop -= 2) {
        for (int attempt = 0; attempt < kSampleWalkTries; ++attempt) {
          std::vector<NodeId> path{v};
          NodeId cur = v;
          bool complete = true;
          for (int s = 0; s < hop; ++s) {
            std::vector<NodeId> preds;
            for (NodeId p : ctx.scope_in->at(cur)) {
              auto pc = ctx.scope_scc->component_of.find(p);
              if (pc == ctx.scope_scc->component_of.end() ||
                  pc->second != comp)
                continue;
              if (std::find(path.begin(), path.end(), p) != path.end())
                continue;
              preds.push_back(p);
            }
            if (preds.empty()) {
              complete = false;
              break;
            }
            cur = preds[ctx.rng.below(preds.size())];
            path.push_back(cur);
          }
          if (!complete) continue;
          NodeId u = cur;
          if (ctx.used.count(u)) continue;
          if (ctx.g.has_arc(v, u)) continue;
          if (!ctx.g.cluster_legal(v, u)) continue;
          ctx.g.relocate_arc(ma, u);
          step.mechanism = Mechanism::cycle_forming;
          step.new_dest = u;
          step.cycle_id = -1;
          step.hop = hop;
          for (NodeId n : path) ctx.used.insert(n);
          steps.push_back(step);
          return;
        }
      }
    }
  }

  // No cycle placement: fall back to a two-cycle with one of v's supporters.
  RelocationStep fb = two_cycle_fallback(ctx.g, ctx.rng, ctx.scope_refs, ma);
  fb.step_index = step.step_index;
  steps.push_back(fb);
}

void tally(RestructureReport& rep) {
  rep.mas_relocated = rep.mas_minimal_added = rep.mas_skipped = 0;
  for (const RelocationStep& s : rep.steps) {
    switch (s.mechanism) {
      case Mechanism::cycle_forming:
      case Mechanism::reassigned:
        ++rep.mas_relocated;
        break;
      case Mechanism::minimal_add:
        ++rep.mas_minimal_added;
        break;
      case Mechanism::skipped:
        ++rep.mas_skipped;
        break;
    }
  }
}

struct ArcSelection {
  ClusterTag tag;
  std::vector<std::pair<ArcRef, NodeId>> arcs;
};

// Every arc lands in the first (constituent, cluster) group — constituent 1
// then 2, clusters ascending — that contains its source or its destination.
std::vector<ArcSelection> partition_arcs(const Network& g) {
  std::set<ArcRef> assigned;
  std::vector<ArcSelection> out;
  for (int i = 1; i <= 2; ++i) {
    for (int x = 1; x <= g.cluster_count(i); ++x) {
      ArcSelection sel{ClusterTag{i, x}, {}};
      for (const auto& [ref, dest] : g.arcs()) {
        if (assigned.count(ref)) continue;
        bool pick = (g.constituent(ref.source) == i &&
                     g.cluster(ref.source) == x) ||
                    (g.constituent(dest) == i && g.cluster(dest) == x);
        if (pick) {
          sel.arcs.push_back({ref, dest});
          assigned.insert(ref);
        }
      }
      out.push_back(std::move(sel));
    }
  }
  return out;
}

Network build_subnetwork(const Network& g, const ArcSelection& sel) {
  Network y;
  y.set_cluster_count(1, g.cluster_count(1));
  y.set_cluster_count(2, g.cluster_count(2));
  std::set<NodeId> nodes;
  for (const auto& [ref, dest] : sel.arcs) {
    nodes.insert(ref.source);
    nodes.insert(dest);
  }
  for (NodeId v : nodes)
    y.add_node(v, g.constituent(v), g.cluster(v), g.supports(v));
  for (const auto& [ref, dest] : sel.arcs) y.add_arc(ref.source, dest);
  return y;
}

}  // namespace

std::string to_string(Mechanism m) {
  switch (m) {
    case Mechanism::cycle_forming:
      return "cycle_forming";
    case Mechanism::minimal_add:
      return "minimal_add";
    case Mechanism::reassigned:
      return "reassigned";
    case Mechanism::skipped:
      return "skipped";
  }
  return "unknown";
}

std::pair<Network, RestructureReport> delta_h(const Network& input, int l,
                                              std::uint64_t seed) {
  if (l < 1 || l % 2 == 0) throw EvenHop(l);
  ValidationReport vr = validate(input);
  if (!vr.ok())
    throw InvalidNetwork("invalid network: " + violation_summary(vr));

  Network g = input;
  RestructureReport rep;
  rep.seed = seed;
  rep.survivability_before = measure_survivability(input);
  MarginalArcSet mas = find_marginal_arcs(input);
  rep.mas_found = static_cast<int>(mas.arcs.size());
  rep.upper_bound = upper_bound(input, mas);

  Rng rng(seed);
  std::set<NodeId> used;
  CycleSet cycles;
  SccResult scc;
  std::map<NodeId, std::vector<NodeId>> in_adj;
  bool enumerated = true;
  try {
    cycles = enumerate_cycles(input, kRestructureEnumCap);
  } catch (const CycleCapExceeded&) {
    enumerated = false;
    scc = strongly_connected_components(input);
    in_adj = build_in_adjacency(input);
  }
  rep.cycle_source = enumerated ? "enumerated" : "sampled";

  RelocationContext ctx{g,
                        rng,
                        used,
                        l,
                        enumerated ? &cycles : nullptr,
                        enumerated ? nullptr : &scc,
                        enumerated ? nullptr : &in_adj,
                        nullptr};
  for (const ArcRef& ma : mas.arcs) process_marginal_arc(ctx, ma, rep.steps);
  tally(rep);
  rep.used_nodes = used;
  rep.survivability_after = measure_survivability(g);
  return {g, rep};
}

RelocationStep minimal_add(Network& g, const ArcRef& ma, std::uint64_t seed,
                           const std::set<NodeId>& used) {
  (void)used;  // the two-cycle draw is not constrained by consumed nodes
  Rng rng(seed);
  return two_cycle_fallback(g, rng, nullptr, ma);
}

std::vector<std::pair<ClusterTag, Network>> decompose_clusters(
    const Network& g) {
  std::vector<std::pair<ClusterTag, Network>> out;
  for (const ArcSelection& sel : partition_arcs(g))
    out.push_back({sel.tag, build_subnetwork(g, sel)});
  return out;
}

std::pair<Network, std::vector<RestructureReport>> clustered_delta_h(
    const Network& input, int l, std::uint64_t seed) {
  if (l < 1 || l % 2 == 0) throw EvenHop(l);
  ValidationReport vr = validate(input);
  if (!vr.ok())
    throw InvalidNetwork("invalid network: " + violation_summary(vr));

  Network g = input;
  MarginalArcSet global = find_marginal_arcs(input);
  std::set<ArcRef> global_ma(global.arcs.begin(), global.arcs.end());

  Rng rng(seed);
  std::vector<RestructureReport> reports;
  for (const ArcSelection& sel : partition_arcs(input)) {
    Network y = build_subnetwork(input, sel);

    std::vector<ArcRef> mas_here;
    for (const auto& [ref, dest] : sel.arcs)
      if (global_ma.count(ref)) mas_here.push_back(ref);

    RestructureReport rep;
    rep.seed = seed;
    rep.mas_found = static_cast<int>(mas_here.size());
    MarginalArcSet local;
    for (const ArcRef& ref : mas_here) {
      auto lref = y.find_arc(ref.source, input.arc_dest(ref));
      if (lref) local.arcs.push_back(*lref);
    }
    std::sort(local.arcs.begin(), local.arcs.end());
    rep.upper_bound = upper_bound(y, local);
    rep.survivability_before = measure_survivability(y);

    std::set<ArcRef> scope_refs;
    for (const auto& [ref, dest] : sel.arcs) scope_refs.insert(ref);

    CycleSet cycles;
    SccResult scc;
    std::map<NodeId, std::vector<NodeId>> in_adj;
    bool enumerated = true;
    try {
      cycles = enumerate_cycles(y, kRestructureEnumCap);
    } catch (const CycleCapExceeded&) {
      enumerated = false;
      scc = strongly_connected_components(y);
      in_adj = build_in_adjacency(y);
    }
    rep.cycle_source = enumerated ? "enumerated" : "sampled";

    std::set<NodeId> used;
    RelocationContext ctx{g,
                          rng,
                          used,
                          l,
                          enumerated ? &cycles : nullptr,
                          enumerated ? nullptr : &scc,
                          enumerated ? nullptr : &in_adj,
                          &scope_refs};
    for (const ArcRef& ma : mas_here) process_marginal_arc(ctx, ma, rep.steps);
    tally(rep);
    rep.used_nodes = used;

    // Replay this subnetwork's relocations onto its own copy so the
    // before/after pair is measured within the same scope.
    Network y_after = y;
    for (const RelocationStep& s : rep.steps) {
      if (s.new_dest == s.old_dest) continue;
      auto lref = y_after.find_arc(s.arc.source, s.old_dest);
      if (!lref) throw Error("internal: subnetwork replay lost an arc");
      y_after.relocate_arc(*lref, s.new_dest);
    }
    rep.survivability_after = measure_survivability(y_after);
    reports.push_back(std::move(rep));
  }

  ValidationReport after = validate(g);
  if (!after.ok())
    throw Error("internal: clustered relocation broke invariants: " +
                violation_summary(after));
  return {g, std::move(reports)};
}

std::pair<Network, RestructureReport> random_reassign(const Network& input,
                                                      std::uint64_t seed) {
  Network g = input;
  RestructureReport rep;
  rep.seed = seed;
  rep.cycle_source = "none";
  rep.survivability_before = measure_survivability(input);
  MarginalArcSet mas = find_marginal_arcs(input);
  rep.mas_found = static_cast<int>(mas.arcs.size());
  rep.upper_bound = upper_bound(input, mas);

  Rng rng(seed);
  std::vector<NodeId> side1 = g.constituent_nodes(1);
  std::vector<NodeId> side2 = g.constituent_nodes(2);

  for (const ArcRef& ma : mas.arcs) {
    NodeId v = ma.source;
    NodeId w = g.arc_dest(ma);
    const std::vector<NodeId>& pool =
        (g.constituent(v) == 1) ? side2 : side1;

    RelocationStep step;
    step.step_index = static_cast<int>(rep.steps.size());
    step.arc = ma;
    step.old_dest = w;
    step.new_dest = w;

    bool done = false;
    for (int t = 0; t < kReassignRetryCap && !pool.empty(); ++t) {
      NodeId d = pool[rng.below(pool.size())];
      if (d == w) {  // keeping the current destination is a legal draw
        step.mechanism = Mechanism::reassigned;
        done = true;
        break;
      }
      if (g.has_arc(v, d)) continue;
      if (!g.cluster_legal(v, d)) continue;
      if (g.degree_in(w) < 2) continue;  // any move would strand w
      g.relocate_arc(ma, d);
      step.mechanism = Mechanism::reassigned;
      step.new_dest = d;
      done = true;
      break;
    }
    if (!done) {
      step.mechanism = Mechanism::skipped;
      step.skip_reason = kSkipRetryCap;
    }
    rep.steps.push_back(step);
  }
  tally(rep);
  rep.survivability_after = measure_survivability(g);
  return {g, rep};
}

OptimumResult exhaustive_optimum(const Network& input, std::uint64_t budget) {
  MarginalArcSet mas = find_marginal_arcs(input);
  const int levels = static_cast<int>(mas.arcs.size());

  OptimumResult res;
  res.search_space = 1;

  std::vector<std::vector<NodeId>> cand(levels);
  for (int i = 0; i < levels; ++i) {
    NodeId v = mas.arcs[i].source;
    int other = 3 - input.constituent(v);
    for (NodeId u : input.constituent_nodes(other))
      if (input.cluster_legal(v, u)) cand[i].push_back(u);
    if (cand[i].empty()) cand[i].push_back(input.arc_dest(mas.arcs[i]));
    std::uint64_t factor = cand[i].size();
    if (res.search_space > budget / factor)
      throw BudgetExceeded(
          "relocation oracle search space exceeds budget of " +
              std::to_string(budget),
          std::nullopt, budget);
    res.search_space *= factor;
  }

  HittingSet base = survivability_exact(input);
  res.survivability_before = static_cast<int>(base.nodes.size());
  res.survivability_after = res.survivability_before;
  res.best_delta = 0;
  for (int i = 0; i < levels; ++i)
    res.witness.push_back({mas.arcs[i], input.arc_dest(mas.arcs[i])});

  // Assignment state over the network with every marginal arc lifted out:
  // each level adds its chosen destination back. Conflicts (duplicate
  // (source,dest) pairs) and stranded nodes (in-degree zero at a full
  // assignment) are discarded without evaluation.
  std::set<ArcRef> ma_set(mas.arcs.begin(), mas.arcs.end());
  std::map<std::pair<NodeId, NodeId>, int> pair_count;
  std::map<NodeId, int> indeg;
  for (NodeId v : input.node_ids()) indeg[v] = 0;
  for (const auto& [ref, dest] : input.arcs()) {
    if (ma_set.count(ref)) continue;
    ++pair_count[{ref.source, dest}];
    ++indeg[dest];
  }
  int zero_in = 0;
  for (const auto& [v, d] : indeg)
    if (d == 0) ++zero_in;

  std::vector<NodeId> chosen(levels);
  auto evaluate_leaf = [&]() {
    if (zero_in != 0) return;
    ++res.assignments_evaluated;
    // Rebuilt rather than relocated in place: applying the assignment arc
    // by arc can pass through a duplicate pair when one choice lands on a
    // destination another marginal arc is about to vacate, even though the
    // final assignment is conflict-free.
    Network trial;
    trial.set_cluster_count(1, input.cluster_count(1));
    trial.set_cluster_count(2, input.cluster_count(2));
    for (NodeId v : input.node_ids())
      trial.add_node(v, input.constituent(v), input.cluster(v),
                     input.supports(v));
    for (const auto& [ref, dest] : input.arcs())
      if (!ma_set.count(ref)) trial.add_arc(ref.source, dest);
    for (int i = 0; i < levels; ++i)
      trial.add_arc(mas.arcs[i].source, chosen[i]);
    HittingSet h = survivability_exact_from(
        trial, static_cast<int>(base.nodes.size()));
    int delta = static_cast<int>(h.nodes.size()) - res.survivability_before;
    if (delta > res.best_delta) {
      res.best_delta = delta;
      res.survivability_after = static_cast<int>(h.nodes.size());
      for (int i = 0; i < levels; ++i) res.witness[i] = {mas.arcs[i], chosen[i]};
    }
  };

  // Iterative depth-first product walk, ascending at every level, so the
  // first-found best assignment is deterministic.
  std::vector<std::size_t> pick(levels, 0);
  int level = 0;
  if (levels == 0) {
    evaluate_leaf();
    return res;
  }
  while (level >= 0) {
    if (pick[level] == cand[level].size()) {
      pick[level] = 0;
      --level;
      if (level >= 0) {
        // undo the previous choice at this level
        NodeId v = mas.arcs[level].source;
        NodeId u = chosen[level];
        --pair_count[{v, u}];
        if (--indeg[u] == 0) ++zero_in;
        ++pick[level];
      }
      continue;
    }
    NodeId v = mas.arcs[level].source;
    NodeId u = cand[level][pick[level]];
    if (pair_count[{v, u}] >= 1) {
      ++pick[level];
      continue;
    }
    ++pair_count[{v, u}];
    if (indeg[u]++ == 0) --zero_in;
    chosen[level] = u;
    if (level + 1 == levels) {
      evaluate_leaf();
      --pair_count[{v, u}];
      if (--indeg[u] == 0) ++zero_in;
      ++pick[level];
    } else {
      ++level;
    }
  }
  return res;
}

}  // namespace survnet
