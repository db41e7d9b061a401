// survnet — survivability analysis and restructuring for two-layer
// interdependent networks.
// SPDX-License-Identifier: MIT
#include "survnet/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include "json.hpp"
#include "survnet/cascade.hpp"
#include "survnet/generate.hpp"
#include "survnet/restructure.hpp"
#include "survnet/rng.hpp"
#include "survnet/survivability.hpp"

namespace survnet {

namespace {

namespace fs = std::filesystem;

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

void push_row(std::vector<ResultRow>& rows, const std::string& exp, int size,
              int trial, std::uint64_t seed, const std::string& metric,
              double value) {
  rows.push_back({exp, size, trial, seed, metric, value});
}

void run_trend(const ExperimentConfig& c, bool symmetric,
               std::vector<ResultRow>& rows) {
  std::vector<int> sizes =
      c.sizes.empty() ? std::vector<int>{10, 20, 30, 40, 50} : c.sizes;
  for (int n : sizes) {
    for (int t = 0; t < c.trials; ++t) {
      GeneratorConfig gc;
      gc.n1 = symmetric ? n : std::max(1, n / 2);
      gc.n2 = n;
      gc.deg_in_min = 2;
      gc.deg_in_max = 4;
      gc.seed = derive_seed(c.master_seed, c.id + "/gen", n, t);
      Network g = generate_random(gc);

      auto [g_h, rep_h] = delta_h(
          g, c.l, derive_seed(c.master_seed, c.id + "/heuristic", n, t));
      auto [g_r, rep_r] = random_reassign(
          g, derive_seed(c.master_seed, c.id + "/random", n, t));

      auto put = [&](const std::string& metric, double v) {
        push_row(rows, c.id, n, t, gc.seed, metric, v);
      };
      put("density", density(g));
      put("mas_found", rep_h.mas_found);
      put("upper_bound_u", rep_h.upper_bound.U);
      put("surv_before." + rep_h.survivability_before.mode,
          rep_h.survivability_before.value);
      put("surv_after_heuristic." + rep_h.survivability_after.mode,
          rep_h.survivability_after.value);
      put("delta_heuristic." + rep_h.survivability_after.mode,
          rep_h.survivability_after.value - rep_h.survivability_before.value);
      put("surv_after_random." + rep_r.survivability_after.mode,
          rep_r.survivability_after.value);
      put("delta_random." + rep_r.survivability_after.mode,
          rep_r.survivability_after.value - rep_r.survivability_before.value);
      put("relocated_heuristic", rep_h.mas_relocated);
      put("minimal_added_heuristic", rep_h.mas_minimal_added);
      put("skipped_heuristic", rep_h.mas_skipped);
    }
  }
}

void run_density(const ExperimentConfig& c, std::vector<ResultRow>& rows) {
  const std::vector<std::pair<int, int>> ranges{
      {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}};
  for (int idx = 1; idx <= static_cast<int>(ranges.size()); ++idx) {
    for (int t = 0; t < c.trials; ++t) {
      GeneratorConfig gc;
      gc.n1 = gc.n2 = 10;
      gc.deg_in_min = ranges[idx - 1].first;
      gc.deg_in_max = ranges[idx - 1].second;
      gc.seed = derive_seed(c.master_seed, c.id + "/gen", idx, t);
      Network g = generate_random(gc);
      auto [g_h, rep] = delta_h(
          g, c.l, derive_seed(c.master_seed, c.id + "/heuristic", idx, t));
      auto put = [&](const std::string& metric, double v) {
        push_row(rows, c.id, idx, t, gc.seed, metric, v);
      };
      put("deg_min", gc.deg_in_min);
      put("deg_max", gc.deg_in_max);
      put("density", density(g));
      put("surv_before." + rep.survivability_before.mode,
          rep.survivability_before.value);
      put("surv_after_heuristic." + rep.survivability_after.mode,
          rep.survivability_after.value);
      put("delta_heuristic." + rep.survivability_after.mode,
          rep.survivability_after.value - rep.survivability_before.value);
    }
  }
}

void oracle_rows(const std::string& id, const Network& g, int size, int trial,
                 std::uint64_t gen_seed, std::uint64_t heur_seed,
                 std::vector<ResultRow>& rows) {
  HittingSet before = survivability_exact(g);
  auto [g_h, rep] = delta_h(g, 1, heur_seed);
  HittingSet after_h = survivability_exact(g_h);
  OptimumResult opt = exhaustive_optimum(g);
  double dh = static_cast<double>(after_h.nodes.size()) -
              static_cast<double>(before.nodes.size());
  auto put = [&](const std::string& metric, double v) {
    push_row(rows, id, size, trial, gen_seed, metric, v);
  };
  put("surv_before_exact", static_cast<double>(before.nodes.size()));
  put("delta_heuristic_exact", dh);
  put("delta_oracle", opt.best_delta);
  put("upper_bound_u", rep.upper_bound.U);
  put("search_space", static_cast<double>(opt.search_space));
  put("assignments_evaluated",
      static_cast<double>(opt.assignments_evaluated));
  put("sandwich_ok",
      (dh <= opt.best_delta && opt.best_delta <= rep.upper_bound.U) ? 1.0
                                                                    : 0.0);
}

void run_oracle_compare(const ExperimentConfig& c,
                        std::vector<ResultRow>& rows) {
  {
    Network bench = oracle_benchmark_network();
    oracle_rows(c.id, bench, 15, 0, 0,
                derive_seed(c.master_seed, c.id + "/bench-heuristic", 0, 0),
                rows);
  }
  for (int t = 0; t < c.trials; ++t) {
    // Find a small instance with one to four marginal arcs so the oracle has
    // something to optimize.
    for (int attempt = 0; attempt < 200; ++attempt) {
      GeneratorConfig gc;
      gc.n1 = gc.n2 = 7;
      gc.deg_in_min = 1;
      gc.deg_in_max = 2;
      gc.seed = derive_seed(c.master_seed, c.id + "/gen", t, attempt);
      Network g = generate_random(gc);
      std::size_t m = find_marginal_arcs(g).arcs.size();
      if (m < 1 || m > 4) continue;
      oracle_rows(c.id, g, 7, t, gc.seed,
                  derive_seed(c.master_seed, c.id + "/heuristic", t, attempt),
                  rows);
      break;
    }
  }
}

void run_sunlet(const ExperimentConfig& c, std::vector<ResultRow>& rows) {
  std::vector<int> sizes =
      c.sizes.empty() ? std::vector<int>{4, 6, 8} : c.sizes;
  for (int len : sizes) {
    for (int variant = 0; variant < 2; ++variant) {
      PathSunletSpec spec;
      spec.cycle_length = len;
      std::string suffix = "_bare";
      std::vector<int> chains{len};
      if (variant == 1) {
        // With out-degree 2 and reverse-first saturation, each anchor spends
        // its second out-slot on its path arc, so the two anchor-adjacent
        // cycle reverses are rejected: the instance decomposes into a chain
        // of c-2 two-cycles plus one (k-1)-chain per path.
        spec.path_nodes = {3, 3};
        suffix = "_paths33";
        chains = {len - 2, 2, 2};
      }
      Network s = generate_path_sunlet(spec);
      Network sat = ma_saturate(s, 2);
      auto [after_net, rep] = delta_h(
          sat, c.l,
          derive_seed(c.master_seed, c.id + "/heuristic", len, variant));
      long long closed = path_sunlet_survivability(chains);
      int exact_after =
          static_cast<int>(survivability_exact(after_net).nodes.size());
      auto put = [&](const std::string& metric, double v) {
        push_row(rows, c.id, len, 0, 0, metric, v);
      };
      put("closed_form" + suffix, static_cast<double>(closed));
      put("exact_after" + suffix, exact_after);
      put("match" + suffix, exact_after == closed ? 1.0 : 0.0);
      put("mas_after_saturation" + suffix, rep.mas_found);
    }
  }
}

void run_cluster_models(const ExperimentConfig& c,
                        std::vector<ResultRow>& rows) {
  const int block = c.sizes.empty() ? 20 : std::max(1, c.sizes.front());
  const int n = 3 * block;
  for (int m = 1; m <= 3; ++m) {
    std::string tag = "/m" + std::to_string(m);
    for (int t = 0; t < c.trials; ++t) {
      GeneratorConfig gc;
      gc.n1 = gc.n2 = n;
      gc.deg_in_min = 2;
      gc.deg_in_max = 4;
      gc.cluster_model = m;
      gc.cluster_sizes_1 = {block, block, block};
      gc.cluster_sizes_2 = {block, block, block};
      gc.seed = derive_seed(c.master_seed, c.id + tag + "/gen", block, t);
      Network g = generate_random(gc);
      SurvivabilityTag before = measure_survivability(g);
      auto [g2, reps] = clustered_delta_h(
          g, c.l, derive_seed(c.master_seed, c.id + tag + "/heuristic",
                              block, t));
      SurvivabilityTag after = measure_survivability(g2);
      std::string pre = "model" + std::to_string(m);
      auto put = [&](const std::string& metric, double v) {
        push_row(rows, c.id, n, t, gc.seed, metric, v);
      };
      put(pre + "_surv_before." + before.mode, before.value);
      put(pre + "_surv_after." + after.mode, after.value);
      put(pre + "_delta." + after.mode, after.value - before.value);
    }
  }
  // Additive baseline: three independent unclustered blocks, summed.
  for (int t = 0; t < c.trials; ++t) {
    double tot_before = 0.0, tot_after = 0.0;
    std::string mode;
    std::uint64_t first_seed = 0;
    for (int b = 1; b <= 3; ++b) {
      GeneratorConfig gc;
      gc.n1 = gc.n2 = block;
      gc.deg_in_min = 2;
      gc.deg_in_max = 4;
      gc.seed = derive_seed(c.master_seed, c.id + "/baseline/gen", b, t);
      if (b == 1) first_seed = gc.seed;
      Network g = generate_random(gc);
      auto [g2, rep] = delta_h(
          g, c.l,
          derive_seed(c.master_seed, c.id + "/baseline/heuristic", b, t));
      tot_before += rep.survivability_before.value;
      tot_after += rep.survivability_after.value;
      mode = rep.survivability_after.mode;
    }
    push_row(rows, c.id, n, t, first_seed, "additive_surv_before." + mode,
             tot_before);
    push_row(rows, c.id, n, t, first_seed, "additive_surv_after." + mode,
             tot_after);
  }
}

void run_impact(const ExperimentConfig& c, std::vector<ResultRow>& rows) {
  std::vector<int> sizes =
      c.sizes.empty() ? std::vector<int>{10, 20, 30, 40, 50} : c.sizes;
  for (int n : sizes) {
    for (int t = 0; t < c.trials; ++t) {
      GeneratorConfig gc;
      gc.n1 = gc.n2 = n;
      gc.deg_in_min = 2;
      gc.deg_in_max = 4;
      gc.seed = derive_seed(c.master_seed, c.id + "/gen", n, t);
      Network g = generate_random(gc);
      auto [g2, rep] = delta_h(
          g, c.l, derive_seed(c.master_seed, c.id + "/heuristic", n, t));
      ImpactStats a = impact_stats(g);
      ImpactStats b = impact_stats(g2);
      auto put = [&](const std::string& metric, double v) {
        push_row(rows, c.id, n, t, gc.seed, metric, v);
      };
      put("impact_avg_before", a.average);
      put("impact_avg_after", b.average);
      put("impact_avg_increase", b.average - a.average);
      put("impact_worst_before", a.worst);
      put("impact_worst_after", b.worst);
      put("worst_not_decreased", b.worst >= a.worst ? 1.0 : 0.0);
    }
  }
}

}  // namespace

Network oracle_benchmark_network() {
  Network g;
  for (NodeId i = 1; i <= 15; ++i) g.add_node(i, 1);
  for (NodeId j = 16; j <= 30; ++j) g.add_node(j, 2);
  // Hub 1 (node 1) mutually supports 16..28; hub 16 mutually supports 2..13.
  for (NodeId j = 16; j <= 28; ++j) g.add_arc(1, j);
  for (NodeId j = 16; j <= 28; ++j) g.add_arc(j, 1);
  for (NodeId i = 2; i <= 13; ++i) g.add_arc(i, 16);
  for (NodeId i = 2; i <= 13; ++i) g.add_arc(16, i);
  // One-way feeds thickening the strongly connected block.
  for (NodeId j = 17; j <= 28; ++j) g.add_arc(2, j);
  for (NodeId j = 17; j <= 28; ++j) g.add_arc(3, j);
  for (NodeId j = 17; j <= 21; ++j) g.add_arc(4, j);
  // Five marginal arcs into and out of the pendant nodes 14, 15, 29, 30.
  g.add_arc(14, 29);
  g.add_arc(15, 30);
  g.add_arc(16, 14);
  g.add_arc(17, 14);
  g.add_arc(18, 15);
  return g;
}

std::vector<ResultRow> run_experiment(const ExperimentConfig& config) {
  std::vector<ResultRow> rows;
  if (config.trials < 0) throw Error("trials must be non-negative");
  if (config.id == "trend-symmetric") {
    run_trend(config, true, rows);
  } else if (config.id == "trend-asymmetric") {
    run_trend(config, false, rows);
  } else if (config.id == "density-vs-gain") {
    run_density(config, rows);
  } else if (config.id == "oracle-compare") {
    run_oracle_compare(config, rows);
  } else if (config.id == "sunlet-optimal") {
    run_sunlet(config, rows);
  } else if (config.id == "cluster-models") {
    run_cluster_models(config, rows);
  } else if (config.id == "impact") {
    run_impact(config, rows);
  } else {
    throw Error("unknown experiment '" + config.id + "'");
  }
  return rows;
}

std::vector<Aggregate> aggregate_rows(const std::vector<ResultRow>& rows) {
  std::map<std::tuple<std::string, std::string, int>, std::vector<double>>
      groups;
  for (const ResultRow& r : rows)
    groups[{r.experiment, r.metric, r.size}].push_back(r.value);
  std::vector<Aggregate> out;
  for (const auto& [key, values] : groups) {
    Aggregate a;
    a.experiment = std::get<0>(key);
    a.metric = std::get<1>(key);
    a.size = std::get<2>(key);
    a.n = static_cast<int>(values.size());
    double sum = std::accumulate(values.begin(), values.end(), 0.0);
    a.mean = sum / a.n;
    if (a.n > 1) {
      double ss = 0.0;
      for (double v : values) ss += (v - a.mean) * (v - a.mean);
      a.stddev = std::sqrt(ss / (a.n - 1));
    }
    out.push_back(std::move(a));
  }
  return out;
}

namespace {

std::vector<double> average_ranks(const std::vector<double>& v) {
  const std::size_t n = v.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&v](std::size_t a, std::size_t b) { return v[a] < v[b]; });
  std::vector<double> ranks(n, 0.0);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && v[order[j + 1]] == v[order[i]]) ++j;
    double avg = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = avg;
    i = j + 1;
  }
  return ranks;
}

}  // namespace

double spearman(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.empty())
    throw Error("rank correlation needs two equal-length nonempty vectors");
  std::vector<double> rx = average_ranks(x);
  std::vector<double> ry = average_ranks(y);
  const double n = static_cast<double>(x.size());
  double mx = std::accumulate(rx.begin(), rx.end(), 0.0) / n;
  double my = std::accumulate(ry.begin(), ry.end(), 0.0) / n;
  double cov = 0.0, vx = 0.0, vy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    cov += (rx[i] - mx) * (ry[i] - my);
    vx += (rx[i] - mx) * (rx[i] - mx);
    vy += (ry[i] - my) * (ry[i] - my);
  }
  if (vx == 0.0 || vy == 0.0) return 0.0;
  return cov / std::sqrt(vx * vy);
}

namespace {

void write_rows_csv(const std::vector<ResultRow>& rows,
                    const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  f << "experiment,size,trial,seed,metric,value\n";
  for (const ResultRow& r : rows)
    f << r.experiment << "," << r.size << "," << r.trial << "," << r.seed
      << "," << r.metric << "," << fmt_double(r.value) << "\n";
}

void write_summary_csv(const std::vector<Aggregate>& aggs,
                       const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  f << "experiment,metric,size,mean,stddev,n\n";
  for (const Aggregate& a : aggs)
    f << a.experiment << "," << a.metric << "," << a.size << ","
      << fmt_double(a.mean) << "," << fmt_double(a.stddev) << "," << a.n
      << "\n";
}

void write_json(const std::vector<ResultRow>& rows,
                const std::vector<Aggregate>& aggs, const std::string& rows_path,
                const std::string& summary_path) {
  nlohmann::json jrows = nlohmann::json::array();
  for (const ResultRow& r : rows)
    jrows.push_back({{"experiment", r.experiment},
                     {"size", r.size},
                     {"trial", r.trial},
                     {"seed", r.seed},
                     {"metric", r.metric},
                     {"value", r.value}});
  nlohmann::json jaggs = nlohmann::json::array();
  for (const Aggregate& a : aggs)
    jaggs.push_back({{"experiment", a.experiment},
                     {"metric", a.metric},
                     {"size", a.size},
                     {"mean", a.mean},
                     {"stddev", a.stddev},
                     {"n", a.n}});
  std::ofstream fr(rows_path, std::ios::binary);
  if (!fr) throw IoError("cannot open '" + rows_path + "' for writing");
  fr << jrows.dump(2) << "\n";
  std::ofstream fs_(summary_path, std::ios::binary);
  if (!fs_) throw IoError("cannot open '" + summary_path + "' for writing");
  fs_ << jaggs.dump(2) << "\n";
}

void write_summary_svg(const std::vector<Aggregate>& aggs,
                       const std::string& path) {
  // Mean-vs-size polyline per metric; presentation only.
  const double W = 760, H = 460, ML = 70, MR = 20, MT = 20, MB = 50;
  std::map<std::string, std::vector<std::pair<int, double>>> series;
  for (const Aggregate& a : aggs) series[a.metric].push_back({a.size, a.mean});
  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  for (auto& [m, pts] : series) {
    std::sort(pts.begin(), pts.end());
    for (auto& [sz, mean] : pts) {
      xmin = std::min(xmin, static_cast<double>(sz));
      xmax = std::max(xmax, static_cast<double>(sz));
      ymin = std::min(ymin, mean);
      ymax = std::max(ymax, mean);
    }
  }
  if (xmax <= xmin) {
    xmin -= 1;
    xmax += 1;
  }
  if (ymax <= ymin) {
    ymin -= 1;
    ymax += 1;
  }
  auto sx = [&](double x) {
    return ML + (x - xmin) / (xmax - xmin) * (W - ML - MR);
  };
  auto sy = [&](double y) {
    return H - MB - (y - ymin) / (ymax - ymin) * (H - MT - MB);
  };
  const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                           "#ff7f0e", "#8c564b", "#17becf", "#e377c2",
                           "#bcbd22", "#7f7f7f"};
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W
     << "\" height=\"" << H << "\" viewBox=\"0 0 " << W << " " << H
     << "\">\n";
  os << "<rect width=\"" << W << "\" height=\"" << H
     << "\" fill=\"white\"/>\n";
  for (int tick = 0; tick <= 4; ++tick) {
    double xv = xmin + (xmax - xmin) * tick / 4.0;
    double yv = ymin + (ymax - ymin) * tick / 4.0;
    os << "<line x1=\"" << sx(xv) << "\" y1=\"" << MT << "\" x2=\"" << sx(xv)
       << "\" y2=\"" << H - MB << "\" stroke=\"#dddddd\"/>\n";
    os << "<line x1=\"" << ML << "\" y1=\"" << sy(yv) << "\" x2=\"" << W - MR
       << "\" y2=\"" << sy(yv) << "\" stroke=\"#dddddd\"/>\n";
    os << "<text x=\"" << sx(xv) << "\" y=\"" << H - MB + 18
       << "\" font-size=\"11\" text-anchor=\"middle\">" << fmt_double(xv)
       << "</text>\n";
    os << "<text x=\"" << ML - 8 << "\" y=\"" << sy(yv) + 4
       << "\" font-size=\"11\" text-anchor=\"end\">" << fmt_double(yv)
       << "</text>\n";
  }
  os << "<line x1=\"" << ML << "\" y1=\"" << H - MB << "\" x2=\"" << W - MR
     << "\" y2=\"" << H - MB << "\" stroke=\"black\"/>\n";
  os << "<line x1=\"" << ML << "\" y1=\"" << MT << "\" x2=\"" << ML
     << "\" y2=\"" << H - MB << "\" stroke=\"black\"/>\n";
  int idx = 0;
  for (const auto& [metric, pts] : series) {
    const char* color = palette[idx % 10];
    std::ostringstream poly;
    for (const auto& [sz, mean] : pts)
      poly << sx(sz) << "," << sy(mean) << " ";
    if (pts.size() > 1)
      os << "<polyline fill=\"none\" stroke=\"" << color
         << "\" stroke-width=\"1.5\" points=\"" << poly.str() << "\"/>\n";
    for (const auto& [sz, mean] : pts)
      os << "<circle cx=\"" << sx(sz) << "\" cy=\"" << sy(mean)
         << "\" r=\"3\" fill=\"" << color << "\"/>\n";
    os << "<text x=\"" << ML + 10 << "\" y=\"" << MT + 14 + 14 * idx
       << "\" font-size=\"11\" fill=\"" << color << "\">" << metric
       << "</text>\n";
    ++idx;
  }
  os << "</svg>\n";
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  f << os.str();
}

}  // namespace

void emit_outputs(const std::vector<ResultRow>& rows,
                  const std::string& out_dir, const std::string& basename,
                  const std::string& format) {
  if (rows.empty()) throw Error("nothing to emit: result table is empty");
  if (format != "csv" && format != "json" && format != "svg" &&
      format != "all")
    throw Error("unknown output format '" + format + "'");
  fs::create_directories(out_dir);
  std::vector<Aggregate> aggs = aggregate_rows(rows);
  const std::string base = out_dir + "/" + basename;
  if (format == "csv" || format == "all") {
    write_rows_csv(rows, base + "_rows.csv");
    write_summary_csv(aggs, base + "_summary.csv");
  }
  if (format == "json" || format == "all") {
    write_json(rows, aggs, base + "_rows.json", base + "_summary.json");
  }
  if (format == "svg" || format == "all") {
    write_summary_svg(aggs, base + "_summary.svg");
  }
}

}  // namespace survnet
