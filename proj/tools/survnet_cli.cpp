// survnet — survivability analysis and restructuring for two-layer
// interdependent networks.
// SPDX-License-Identifier: MIT
//
// Command-line front end: generate, cycles, survivability, restructure,
// cascade, and experiment subcommands over the canonical network format.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "survnet/cascade.hpp"
#include "survnet/cycles.hpp"
#include "survnet/experiment.hpp"
#include "survnet/generate.hpp"
#include "survnet/network.hpp"
#include "survnet/restructure.hpp"
#include "survnet/survivability.hpp"
#include "survnet/validate.hpp"

namespace {

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stoi(item));
  }
  return out;
}

std::vector<survnet::NodeId> parse_node_list(const std::string& text) {
  std::vector<survnet::NodeId> out;
  for (int v : parse_int_list(text)) {
    if (v < 0) throw survnet::Error("node ids must be non-negative");
    out.push_back(static_cast<survnet::NodeId>(v));
  }
  return out;
}

void print_validation(const survnet::Network& g) {
  survnet::ValidationReport r = survnet::validate(g);
  if (!r.ok())
    std::cout << "warnings=" << survnet::violation_summary(r) << "\n";
}

int cmd_generate(int n1, int n2, int deg_min, int deg_max, int model,
                 const std::string& sizes1, const std::string& sizes2,
                 std::uint64_t seed, const std::string& out) {
  survnet::GeneratorConfig gc;
  gc.n1 = n1;
  gc.n2 = n2;
  gc.deg_in_min = deg_min;
  gc.deg_in_max = deg_max;
  gc.cluster_model = model;
  if (!sizes1.empty()) gc.cluster_sizes_1 = parse_int_list(sizes1);
  if (!sizes2.empty()) gc.cluster_sizes_2 = parse_int_list(sizes2);
  gc.seed = seed;
  survnet::Network g = survnet::generate_random(gc);
  g.save(out);
  std::cout << "nodes=" << g.node_count() << "\n";
  std::cout << "arcs=" << g.arc_count() << "\n";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", survnet::density(g));
  std::cout << "density=" << buf << "\n";
  std::cout << "out=" << out << "\n";
  return 0;
}

int cmd_cycles(const std::string& file, std::uint64_t cap, bool marginal,
               std::optional<survnet::NodeId> through) {
  survnet::Network g = survnet::Network::load(file);
  if (marginal) {
    survnet::MarginalArcSet mas = survnet::find_marginal_arcs(g);
    std::cout << "marginal_arcs=" << mas.arcs.size() << "\n";
    for (const survnet::ArcRef& a : mas.arcs)
      std::cout << a.source << " -> " << g.arc_dest(a) << "\n";
    return 0;
  }
  survnet::CycleSet cycles = survnet::enumerate_cycles(g, cap);
  if (through) {
    survnet::CycleSet hit = survnet::cycles_through(g, *through, cycles);
    std::cout << "cycles_through=" << hit.size() << "\n";
    for (const survnet::Cycle& c : hit) {
      for (std::size_t k = 0; k < c.nodes.size(); ++k)
        std::cout << (k ? " " : "") << c.nodes[k];
      std::cout << "\n";
    }
    return 0;
  }
  std::cout << "cycles=" << cycles.size() << "\n";
  for (const survnet::Cycle& c : cycles) {
    for (std::size_t k = 0; k < c.nodes.size(); ++k)
      std::cout << (k ? " " : "") << c.nodes[k];
    std::cout << "\n";
  }
  return 0;
}

int cmd_survivability(const std::string& file, const std::string& mode,
                      std::uint64_t cap, std::uint64_t budget,
                      bool with_upper_bound) {
  survnet::Network g = survnet::Network::load(file);
  survnet::HittingSet h;
  if (mode == "exact") {
    h = survnet::survivability_exact(g, budget);
  } else if (mode == "greedy") {
    h = survnet::survivability_greedy(g, cap);
  } else if (mode == "greedy-lazy") {
    h = survnet::survivability_greedy_lazy(g);
  } else {
    throw survnet::Error("unknown mode '" + mode +
                         "' (expected exact, greedy, or greedy-lazy)");
  }
  std::cout << "survivability=" << h.nodes.size() << "\n";
  std::cout << "mode=" << h.mode << "\n";
  std::cout << "optimal=" << (h.optimal ? "true" : "false") << "\n";
  std::cout << "cycles_considered=" << h.cycles_considered << "\n";
  std::cout << "nodes=";
  bool first = true;
  for (survnet::NodeId v : h.nodes) {
    std::cout << (first ? "" : ",") << v;
    first = false;
  }
  std::cout << "\n";
  if (with_upper_bound) {
    survnet::MarginalArcSet mas = survnet::find_marginal_arcs(g);
    survnet::UpperBoundBreakdown ub = survnet::upper_bound(g, mas);
    std::cout << "m_total=" << ub.M_total << " m_s=" << ub.M_s
              << " v_s=" << ub.V_s << " v_d=" << ub.V_d << " m_d=" << ub.M_d
              << " upper_bound=" << ub.U << "\n";
  }
  return 0;
}

int cmd_restructure(const std::string& file, int l, std::uint64_t seed,
                    const std::string& mode, bool clustered,
                    const std::string& out) {
  survnet::Network g = survnet::Network::load(file);
  survnet::Network result;
  std::vector<survnet::RelocationStep> steps;
  survnet::SurvivabilityTag before, after;
  if (mode == "heuristic") {
    if (clustered) {
      auto [g2, reports] = survnet::clustered_delta_h(g, l, seed);
      result = std::move(g2);
      before = survnet::measure_survivability(g);
      after = survnet::measure_survivability(result);
      auto parts = survnet::decompose_clusters(g);  // same order as reports
      for (std::size_t i = 0; i < reports.size(); ++i) {
        const survnet::RestructureReport& rep = reports[i];
        std::cout << "# subnetwork constituent=" << parts[i].first.constituent
                  << " cluster=" << parts[i].first.cluster
                  << " mas_found=" << rep.mas_found
                  << " relocated=" << rep.mas_relocated
                  << " minimal_added=" << rep.mas_minimal_added
                  << " skipped=" << rep.mas_skipped << "\n";
        for (const survnet::RelocationStep& s : rep.steps)
          steps.push_back(s);
      }
    } else {
      auto [g2, rep] = survnet::delta_h(g, l, seed);
      result = std::move(g2);
      before = rep.survivability_before;
      after = rep.survivability_after;
      steps = rep.steps;
      std::cout << "mas_found=" << rep.mas_found << "\n";
      std::cout << "relocated=" << rep.mas_relocated << "\n";
      std::cout << "minimal_added=" << rep.mas_minimal_added << "\n";
      std::cout << "skipped=" << rep.mas_skipped << "\n";
      std::cout << "upper_bound=" << rep.upper_bound.U << "\n";
      std::cout << "cycle_source=" << rep.cycle_source << "\n";
    }
  } else if (mode == "random") {
    auto [g2, rep] = survnet::random_reassign(g, seed);
    result = std::move(g2);
    before = rep.survivability_before;
    after = rep.survivability_after;
    steps = rep.steps;
    std::cout << "mas_found=" << rep.mas_found << "\n";
    std::cout << "reassigned=" << rep.mas_relocated << "\n";
    std::cout << "skipped=" << rep.mas_skipped << "\n";
  } else if (mode == "oracle") {
    survnet::OptimumResult opt = survnet::exhaustive_optimum(g);
    // Rebuilt rather than relocated in place: a witness destination may
    // match a pair that another marginal arc vacates in the same
    // assignment, which an arc-by-arc replay would reject as a duplicate.
    std::set<survnet::ArcRef> moved;
    for (const auto& [arc, dest] : opt.witness) moved.insert(arc);
    survnet::Network fresh;
    fresh.set_cluster_count(1, g.cluster_count(1));
    fresh.set_cluster_count(2, g.cluster_count(2));
    for (survnet::NodeId v : g.node_ids())
      fresh.add_node(v, g.constituent(v), g.cluster(v), g.supports(v));
    for (const auto& [ref, dest] : g.arcs())
      if (moved.count(ref) == 0) fresh.add_arc(ref.source, dest);
    for (const auto& [arc, dest] : opt.witness) fresh.add_arc(arc.source, dest);
    result = std::move(fresh);
    before = {opt.survivability_before, "exact"};
    after = {opt.survivability_after, "exact"};
    std::cout << "search_space=" << opt.search_space << "\n";
    std::cout << "assignments_evaluated=" << opt.assignments_evaluated
              << "\n";
    std::cout << "best_delta=" << opt.best_delta << "\n";
  } else {
    throw survnet::Error("unknown mode '" + mode +
                         "' (expected heuristic, random, or oracle)");
  }
  std::cout << "step,source,arc_index,old_dest,new_dest,mechanism,cycle_id,"
               "hop,reason\n";
  for (const survnet::RelocationStep& s : steps)
    std::cout << s.step_index << "," << s.arc.source << "," << s.arc.index
              << "," << s.old_dest << "," << s.new_dest << ","
              << survnet::to_string(s.mechanism) << "," << s.cycle_id << ","
              << s.hop << "," << s.skip_reason << "\n";
  std::cout << "survivability_before=" << before.value << "\n";
  std::cout << "survivability_after=" << after.value << "\n";
  std::cout << "measure_mode=" << after.mode << "\n";
  if (!out.empty()) {
    result.save(out);
    std::cout << "out=" << out << "\n";
  }
  print_validation(result);
  return 0;
}

int cmd_cascade(const std::string& file, const std::string& fail_list,
                bool sweep) {
  survnet::Network g = survnet::Network::load(file);
  if (sweep) {
    survnet::ImpactStats stats = survnet::impact_stats(g);
    std::cout << "node,theta\n";
    for (const auto& [v, theta] : stats.per_node)
      std::cout << v << "," << theta << "\n";
    std::cout << "worst=" << stats.worst << "\n";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", stats.average);
    std::cout << "avg=" << buf << "\n";
    return 0;
  }
  if (fail_list.empty())
    throw survnet::Error("cascade needs --fail <nodes> or --sweep");
  std::vector<survnet::NodeId> failures = parse_node_list(fail_list);
  survnet::CascadeResult r =
      survnet::cascade(g, {failures.begin(), failures.end()});
  std::cout << "theta=" << r.theta << "\n";
  std::cout << "rounds=" << r.rounds << "\n";
  std::cout << "nonfunctional=";
  bool first = true;
  for (survnet::NodeId v : r.nonfunctional) {
    std::cout << (first ? "" : ",") << v;
    first = false;
  }
  std::cout << "\n";
  return 0;
}

survnet::ExperimentConfig load_experiment_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw survnet::IoError("cannot open '" + path + "'");
  survnet::ExperimentConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(f, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw survnet::ParseError(lineno, "expected key=value");
    std::string key = line.substr(0, eq);
    std::string value = line.substr(eq + 1);
    if (key == "id") {
      cfg.id = value;
    } else if (key == "seed") {
      cfg.master_seed = std::stoull(value);
    } else if (key == "trials") {
      cfg.trials = std::stoi(value);
    } else if (key == "sizes") {
      cfg.sizes = parse_int_list(value);
    } else if (key == "l") {
      cfg.l = std::stoi(value);
    } else {
      throw survnet::ParseError(lineno, "unknown key '" + key + "'");
    }
  }
  return cfg;
}

int cmd_experiment(const std::string& config_file, const std::string& id,
                   int trials, std::uint64_t seed, const std::string& sizes,
                   int l, const std::string& out_dir,
                   const std::string& format) {
  survnet::ExperimentConfig cfg;
  if (!config_file.empty()) {
    cfg = load_experiment_config(config_file);
  } else if (!id.empty()) {
    cfg.id = id;
  } else {
    throw survnet::Error("experiment needs --config FILE or --id ID");
  }
  if (trials >= 0) cfg.trials = trials;
  if (seed != 0) cfg.master_seed = seed;
  if (!sizes.empty()) cfg.sizes = parse_int_list(sizes);
  if (l > 0) cfg.l = l;
  std::vector<survnet::ResultRow> rows = survnet::run_experiment(cfg);
  survnet::emit_outputs(rows, out_dir, cfg.id, format);
  std::cout << "experiment=" << cfg.id << "\n";
  std::cout << "rows=" << rows.size() << "\n";
  std::cout << "out_dir=" << out_dir << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"survivability analysis and restructuring for two-layer "
               "interdependent networks"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "generate a random network");
  int n1 = 5, n2 = 5, deg_min = 1, deg_max = 1, model = 0;
  std::string sizes1, sizes2, gen_out = "network.txt";
  std::uint64_t gen_seed = 1;
  gen->add_option("--n1", n1, "nodes in constituent 1")->required();
  gen->add_option("--n2", n2, "nodes in constituent 2")->required();
  gen->add_option("--deg-min", deg_min, "minimum in-degree");
  gen->add_option("--deg-max", deg_max, "maximum in-degree");
  gen->add_option("--model", model, "supportability model (0-3)");
  gen->add_option("--cluster-sizes1", sizes1,
                  "comma-separated cluster sizes, constituent 1");
  gen->add_option("--cluster-sizes2", sizes2,
                  "comma-separated cluster sizes, constituent 2");
  gen->add_option("--seed", gen_seed, "generator seed");
  gen->add_option("--out", gen_out, "output network file")->required();

  // cycles
  auto* cyc = app.add_subcommand("cycles", "enumerate elementary cycles");
  std::string cyc_file;
  std::uint64_t cyc_cap = survnet::kDefaultCycleCap;
  bool cyc_marginal = false;
  int cyc_through = -1;
  cyc->add_option("file", cyc_file, "network file")->required();
  cyc->add_option("--cap", cyc_cap, "abort past this many cycles");
  cyc->add_flag("--marginal", cyc_marginal,
                "list marginal arcs instead of cycles");
  cyc->add_option("--through", cyc_through, "only cycles through this node");

  // survivability
  auto* srv = app.add_subcommand("survivability",
                                 "minimum cycle-breaking node set");
  std::string srv_file, srv_mode = "exact";
  std::uint64_t srv_cap = survnet::kDefaultCycleCap;
  std::uint64_t srv_budget = survnet::kDefaultExactBudget;
  bool srv_ub = false;
  srv->add_option("file", srv_file, "network file")->required();
  srv->add_option("--mode", srv_mode, "exact, greedy, or greedy-lazy");
  srv->add_option("--cap", srv_cap, "cycle cap for greedy mode");
  srv->add_option("--budget", srv_budget, "subset-check budget for exact");
  srv->add_flag("--upper-bound", srv_ub,
                "also print the relocation upper bound");

  // restructure
  auto* res = app.add_subcommand("restructure",
                                 "relocate marginal arcs to harden cycles");
  std::string res_file, res_mode = "heuristic", res_out;
  int res_l = 1;
  std::uint64_t res_seed = 1;
  bool res_clustered = false;
  res->add_option("file", res_file, "network file")->required();
  res->add_option("--l", res_l, "reach parameter (cycles up to hop l)")
      ->required();
  res->add_option("--seed", res_seed, "relocation seed");
  res->add_option("--mode", res_mode, "heuristic, random, or oracle");
  res->add_flag("--clustered", res_clustered,
                "run per cluster subnetwork, then merge");
  res->add_option("--out", res_out, "write the restructured network here");

  // cascade
  auto* cas = app.add_subcommand("cascade", "propagate failures to fixpoint");
  std::string cas_file, cas_fail;
  bool cas_sweep = false;
  cas->add_option("file", cas_file, "network file")->required();
  cas->add_option("--fail", cas_fail, "comma-separated seed failures");
  cas->add_flag("--sweep", cas_sweep, "single-node sweep with impact stats");

  // experiment
  auto* exp = app.add_subcommand("experiment", "run a study and emit tables");
  std::string exp_config, exp_id, exp_sizes, exp_dir = "results",
              exp_format = "all";
  int exp_trials = -1, exp_l = 0;
  std::uint64_t exp_seed = 0;
  exp->add_option("--config", exp_config, "key=value config file");
  exp->add_option("--id", exp_id, "experiment id");
  exp->add_option("--trials", exp_trials, "trials per point");
  exp->add_option("--seed", exp_seed, "master seed");
  exp->add_option("--sizes", exp_sizes, "comma-separated size sweep");
  exp->add_option("--l", exp_l, "reach parameter");
  exp->add_option("--out-dir", exp_dir, "output directory");
  exp->add_option("--format", exp_format, "csv, json, svg, or all");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed())
      return cmd_generate(n1, n2, deg_min, deg_max, model, sizes1, sizes2,
                          gen_seed, gen_out);
    if (cyc->parsed())
      return cmd_cycles(cyc_file, cyc_cap, cyc_marginal,
                        cyc_through >= 0
                            ? std::optional<survnet::NodeId>(
                                  static_cast<survnet::NodeId>(cyc_through))
                            : std::nullopt);
    if (srv->parsed())
      return cmd_survivability(srv_file, srv_mode, srv_cap, srv_budget,
                               srv_ub);
    if (res->parsed())
      return cmd_restructure(res_file, res_l, res_seed, res_mode,
                             res_clustered, res_out);
    if (cas->parsed()) return cmd_cascade(cas_file, cas_fail, cas_sweep);
    if (exp->parsed())
      return cmd_experiment(exp_config, exp_id, exp_trials, exp_seed,
                            exp_sizes, exp_l, exp_dir, exp_format);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
