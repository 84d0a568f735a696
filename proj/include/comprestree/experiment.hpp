#pragma once

#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "comprestree/algorithms/baselines.hpp"
#include "comprestree/algorithms/treestar.hpp"
#include "comprestree/algorithms/unicast.hpp"
#include "comprestree/algorithms/wcds.hpp"
#include "comprestree/io.hpp"

namespace comprestree {

struct NetworkSpec {
  std::string kind = "random";  // random | grid | file | inline
  int n = 100;
  double width = 200.0;
  double height = 200.0;
  double radius = 30.0;
  int rows = 10;
  int cols = 10;
  double spacing = 1.0;
  std::string corner = "lower_left";
  std::string path;
  io::json inline_network;

  Network build(std::uint64_t seed) const {
    if (kind == "random") return gen_random(n, width, height, radius, seed);
    if (kind == "grid") {
      Corner c = corner == "lower_left" ? Corner::LowerLeft
                 : corner == "lower_right" ? Corner::LowerRight
                 : corner == "upper_left"  ? Corner::UpperLeft
                 : corner == "upper_right" ? Corner::UpperRight
                                           : throw Error(ErrorCode::InvalidArgument, "unknown corner '" + corner + "'");
      return gen_grid(rows, cols, spacing, radius, c);
    }
    if (kind == "file") return io::network_from_json(io::read_file(path));
    if (kind == "inline") return io::network_from_json(inline_network);
    throw Error(ErrorCode::InvalidArgument, "unknown network kind '" + kind + "'");
  }

  void set(const std::string& name, double v) {
    if (name == "n") n = static_cast<int>(v);
    else if (name == "width") width = v;
    else if (name == "height") height = v;
    else if (name == "radius") radius = v;
    else if (name == "spacing") spacing = v;
    else throw Error(ErrorCode::InvalidArgument, "network has no parameter '" + name + "'");
  }
};

struct ExperimentConfig {
  NetworkSpec network;
  io::EntropySpec entropy;
  std::string cost_model = "wl";  // wl | wl-ns | multicast | unicast
  std::vector<std::string> methods{"ind", "cluster", "treestar", "dsc"};
  std::string sweep;  // parameter name; empty for no sweep
  std::vector<double> sweep_values;
  std::vector<std::uint64_t> seeds{1};
  std::string csv_path;
  std::string json_path;
  double rx_cost = 0.0;
  bool timing = false;

  void check() const {
    if (methods.empty()) throw Error(ErrorCode::InvalidArgument, "at least one method is required");
    if (seeds.empty()) throw Error(ErrorCode::InvalidArgument, "at least one seed is required");
    for (double v : sweep_values)
      if (!std::isfinite(v) || v <= 0.0) throw Error(ErrorCode::InvalidArgument, "sweep values must be finite and positive");
    if (!sweep.empty() && sweep_values.empty()) throw Error(ErrorCode::InvalidArgument, "sweep needs values");
    if (!(rx_cost >= 0.0)) throw Error(ErrorCode::InvalidArgument, "rx_cost must be >= 0");
  }
};

inline ExperimentConfig config_from_json(const io::json& j) {
  io::check_keys(j, {"network", "entropy", "cost_model", "methods", "sweep", "seeds", "csv", "json", "rx_cost", "timing"},
                 "config");
  ExperimentConfig c;
  if (j.contains("network")) {
    const io::json& nj = j.at("network");
    io::check_keys(nj, {"kind", "n", "width", "height", "radius", "rows", "cols", "spacing", "corner", "path", "network"},
                   "network spec");
    NetworkSpec& s = c.network;
    s.kind = io::get_or<std::string>(nj, "kind", s.kind);
    s.n = io::get_or(nj, "n", s.n);
    s.width = io::get_or(nj, "width", s.width);
    s.height = io::get_or(nj, "height", s.height);
    s.radius = io::get_or(nj, "radius", s.kind == "grid" ? 1.0 : s.radius);
    s.rows = io::get_or(nj, "rows", s.rows);
    s.cols = io::get_or(nj, "cols", s.cols);
    s.spacing = io::get_or(nj, "spacing", s.spacing);
    s.corner = io::get_or<std::string>(nj, "corner", s.corner);
    s.path = io::get_or<std::string>(nj, "path", s.path);
    if (nj.contains("network")) s.inline_network = nj.at("network");
  }
  if (j.contains("entropy")) c.entropy = io::entropy_from_json(j.at("entropy"));
  c.cost_model = io::get_or<std::string>(j, "cost_model", c.cost_model);
  c.methods = io::get_or(j, "methods", c.methods);
  if (j.contains("sweep")) {
    io::check_keys(j.at("sweep"), {"param", "values"}, "sweep");
    c.sweep = io::get_req<std::string>(j.at("sweep"), "param", "sweep");
    c.sweep_values = io::get_req<std::vector<double>>(j.at("sweep"), "values", "sweep");
  }
  c.seeds = io::get_or(j, "seeds", c.seeds);
  c.csv_path = io::get_or<std::string>(j, "csv", "");
  c.json_path = io::get_or<std::string>(j, "json", "");
  c.rx_cost = io::get_or(j, "rx_cost", 0.0);
  c.timing = io::get_or(j, "timing", false);
  c.check();
  return c;
}

struct MethodOutcome {
  CostBreakdown cost;
  std::optional<Solution> solution;  // absent for the DSC bound
};

// Runs one named method on an instance and evaluates it.
inline MethodOutcome run_method(const Instance& inst, const std::string& method, const std::string& cost_model,
                                CostOptions opts = {}) {
  auto evaluated = [&](Solution s) {
    MethodOutcome m;
    m.cost = eval_cost(s.scheme, s.tree, inst, opts);
    m.solution = std::move(s);
    return m;
  };
  if (method == "ind") return evaluated(ind_solution(inst));
  if (method == "dsc") {
    MethodOutcome m;
    m.cost.total = m.cost.nc = dsc_lower_bound(inst);
    return m;
  }
  if (method == "cluster") return evaluated(cluster_greedy(inst).solution);
  if (method == "unicast") return evaluated(unicast_arborescence(inst));
  if (method == "wcds") {
    if (cost_model != "wl") throw Error(ErrorCode::InvalidArgument, "wcds construction needs the wl cost model");
    return evaluated(tree_from_wcds(inst, wcds_greedy(inst.net())));
  }
  if (method == "treestar") {
    if (cost_model == "wl") return evaluated(greedy_treestar(inst, TreeStarModel::WLSG).solution);
    if (cost_model == "wl-ns") return evaluated(greedy_treestar(inst, TreeStarModel::WLNS).solution);
    if (cost_model == "multicast") return evaluated(greedy_treestar(inst, TreeStarModel::MulticastNS).solution);
    throw Error(ErrorCode::InvalidArgument, "treestar has no '" + cost_model + "' variant");
  }
  throw Error(ErrorCode::InvalidArgument, "unknown method '" + method + "'");
}

struct ResultRow {
  std::string method;
  std::string seed;
  double sweep = 0.0;
  double total = 0.0;
  double nc = 0.0;
  double ic = 0.0;
  double normalized = 0.0;
  double elapsed_ms = 0.0;
  std::string error;
};

inline int thread_cap() {
  if (const char* s = std::getenv("COMPRESTREE_THREADS")) {
    int v = std::atoi(s);
    if (v > 0) return v;
  }
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

inline std::vector<ResultRow> run_experiment(const ExperimentConfig& cfg) {
  cfg.check();
  const std::vector<double> sweep_values = cfg.sweep.empty() ? std::vector<double>{0.0} : cfg.sweep_values;
  struct Task {
    double sweep;
    std::uint64_t seed;
  };
  std::vector<Task> tasks;
  for (double sv : sweep_values)
    for (std::uint64_t seed : cfg.seeds) tasks.push_back({sv, seed});
  std::vector<std::vector<ResultRow>> results(tasks.size());

  auto work = [&](std::size_t t) {
    const Task& task = tasks[t];
    NetworkSpec ns = cfg.network;
    io::EntropySpec es = cfg.entropy;
    if (!cfg.sweep.empty()) {
      try {
        es.set(cfg.sweep, task.sweep);
      } catch (const Error&) {
        ns.set(cfg.sweep, task.sweep);
      }
    }
    std::vector<ResultRow>& rows = results[t];
    auto fail_all = [&](const std::string& msg) {
      for (const auto& m : cfg.methods)
        rows.push_back({m, std::to_string(task.seed), task.sweep, NAN, NAN, NAN, NAN, 0.0, msg});
    };
    std::optional<Instance> inst;
    try {
      Network net = ns.build(task.seed);
      EntropyModel model = es.build(net);
      inst.emplace(std::move(net), std::move(model));
    } catch (const std::exception& e) {
      fail_all(e.what());
      return;
    }
    const CostOptions opts{cfg.rx_cost};
    const Solution ind_sol = ind_solution(*inst);
    const double ind = eval_cost(ind_sol.scheme, ind_sol.tree, *inst, opts).total;
    for (const auto& m : cfg.methods) {
      ResultRow r{m, std::to_string(task.seed), task.sweep, 0, 0, 0, 0, 0, ""};
      auto t0 = std::chrono::steady_clock::now();
      try {
        auto out = run_method(*inst, m, cfg.cost_model, opts);
        r.total = out.cost.total;
        r.nc = out.cost.nc;
        r.ic = out.cost.ic;
        r.normalized = ind > 0.0 ? r.total / ind : (r.total == 0.0 ? 1.0 : kInf);
      } catch (const std::exception& e) {
        r.total = r.nc = r.ic = r.normalized = NAN;
        r.error = e.what();
      }
      if (cfg.timing)
        r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      rows.push_back(std::move(r));
    }
  };

  const int threads = std::min<int>(thread_cap(), static_cast<int>(tasks.size()));
  if (threads <= 1) {
    for (std::size_t t = 0; t < tasks.size(); ++t) work(t);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i)
      pool.emplace_back([&] {
        for (std::size_t t; (t = next++) < tasks.size();) work(t);
      });
    for (auto& th : pool) th.join();
  }

  // per-seed rows in declared order, then one mean row per method and sweep value
  std::vector<ResultRow> out;
  for (std::size_t s = 0; s < sweep_values.size(); ++s) {
    const std::size_t first = s * cfg.seeds.size();
    for (std::size_t k = 0; k < cfg.seeds.size(); ++k)
      for (const auto& r : results[first + k]) out.push_back(r);
    if (cfg.seeds.size() < 2) continue;
    for (std::size_t m = 0; m < cfg.methods.size(); ++m) {
      ResultRow mean{cfg.methods[m], "mean", sweep_values[s], 0, 0, 0, 0, 0, ""};
      int ok = 0;
      for (std::size_t k = 0; k < cfg.seeds.size(); ++k) {
        const auto& rows = results[first + k];
        if (m >= rows.size() || !rows[m].error.empty()) continue;
        ++ok;
        mean.total += rows[m].total;
        mean.nc += rows[m].nc;
        mean.ic += rows[m].ic;
        mean.normalized += rows[m].normalized;
        mean.elapsed_ms += rows[m].elapsed_ms;
      }
      if (ok == 0) {
        mean.total = mean.nc = mean.ic = mean.normalized = NAN;
        mean.error = "no successful seed";
      } else {
        for (double* f : {&mean.total, &mean.nc, &mean.ic, &mean.normalized, &mean.elapsed_ms}) *f /= ok;
      }
      out.push_back(mean);
    }
  }
  return out;
}

// Result record of a single algorithm run.
inline io::json result_record(const std::string& algo, const MethodOutcome& out, NodeId bs, std::size_t iters,
                              double elapsed_ms) {
  io::json j = {{"algo", algo}, {"cost", io::to_json(out.cost)}, {"iters", iters}, {"elapsed_ms", elapsed_ms}};
  j["tree"] = out.solution ? io::to_json(*out.solution, bs) : io::json(nullptr);
  return j;
}

inline std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

inline std::string to_csv(const std::vector<ResultRow>& rows) {
  std::string s = "method,seed,sweep,total,nc,ic,normalized,elapsed_ms\n";
  for (const auto& r : rows) {
    s += r.method + "," + r.seed + "," + format_number(r.sweep) + "," + format_number(r.total) + "," +
         format_number(r.nc) + "," + format_number(r.ic) + "," + format_number(r.normalized) + "," +
         format_number(r.elapsed_ms) + "\n";
  }
  return s;
}

inline io::json rows_to_json(const std::vector<ResultRow>& rows) {
  io::json arr = io::json::array();
  auto num = [](double v) { return std::isnan(v) ? io::json(nullptr) : io::json(v); };
  for (const auto& r : rows) {
    io::json j = {{"method", r.method}, {"seed", r.seed}, {"sweep", r.sweep},
                  {"cost", {{"total", num(r.total)}, {"nc", num(r.nc)}, {"ic", num(r.ic)}}},
                  {"normalized", num(r.normalized)}, {"elapsed_ms", r.elapsed_ms}};
    if (!r.error.empty()) j["error"] = r.error;
    arr.push_back(j);
  }
  return arr;
}

}  // namespace comprestree
