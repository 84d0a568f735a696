#pragma once

#include <cmath>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "comprestree/experiment.hpp"
#include "comprestree/oracle/bound.hpp"
#include "comprestree/oracle/brute.hpp"
#include "comprestree/oracle/simulate.hpp"

namespace comprestree {

struct CheckLine {
  std::string fixture;
  std::string name;
  bool ok = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckLine> lines;
  double worst_ratio = 0.0;  // greedy / restricted optimum
  double min_slack = kInf;   // bound factor minus ratio

  std::size_t failures() const {
    std::size_t f = 0;
    for (const auto& l : lines) f += !l.ok;
    return f;
  }
};

namespace detail {

inline std::string fmt(double v) { return format_number(v); }

inline bool close(double a, double b, double tol) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); }

}  // namespace detail

// Fixture: {"name", "network", "entropy", "tolerance"?, "expect": [{"method",
// "cost_model"?, "total"?, "nc"?, "ic"?}]}. Expected values are checked, then
// oracle cross-checks run when the instance fits `max_sensors`.
inline void verify_fixture(const io::json& fx, std::size_t max_sensors, VerifyReport& rep) {
  io::check_keys(fx, {"name", "network", "entropy", "tolerance", "expect"}, "fixture");
  const std::string name = io::get_req<std::string>(fx, "name", "fixture");
  const double tol = io::get_or(fx, "tolerance", 1e-9);
  auto add = [&](std::string what, bool ok, std::string detail) {
    rep.lines.push_back({name, std::move(what), ok, std::move(detail)});
  };
  Network net = io::network_from_json(fx.at("network"));
  io::EntropySpec es = io::entropy_from_json(fx.at("entropy"));
  Instance inst(net, es.build(net));

  for (const io::json& e : io::get_or(fx, "expect", io::json::array())) {
    io::check_keys(e, {"method", "cost_model", "total", "nc", "ic"}, "expectation");
    const std::string method = io::get_req<std::string>(e, "method", "expectation");
    const std::string cm = io::get_or<std::string>(e, "cost_model", "wl");
    try {
      auto out = run_method(inst, method, cm);
      for (const char* field : {"total", "nc", "ic"}) {
        if (!e.contains(field)) continue;
        double want = e.at(field).get<double>();
        double got = std::string(field) == "total" ? out.cost.total : std::string(field) == "nc" ? out.cost.nc : out.cost.ic;
        add(method + "/" + cm + " " + field, detail::close(got, want, tol),
            "got " + detail::fmt(got) + " expected " + detail::fmt(want));
      }
    } catch (const std::exception& ex) {
      add(method + "/" + cm, false, ex.what());
    }
  }

  const double dsc = dsc_lower_bound(inst);
  for (const char* method : {"ind", "cluster", "treestar", "wcds", "unicast"}) {
    try {
      auto out = run_method(inst, method, "wl");
      auto sim = oracle::simulate(out.solution->scheme, out.solution->tree, inst);
      add(std::string(method) + " simulation", sim.delivered && detail::close(sim.energy, out.cost.total, 1e-9),
          "eval " + detail::fmt(out.cost.total) + " simulated " + detail::fmt(sim.energy));
      add(std::string(method) + " >= dsc", out.cost.total >= dsc - 1e-9,
          detail::fmt(out.cost.total) + " vs " + detail::fmt(dsc));
    } catch (const std::exception& ex) {
      add(method, false, ex.what());
    }
  }

  if (net.sensor_count() == 0 || net.sensor_count() > max_sensors) return;
  try {
    auto opt = oracle::brute_restricted_opt(inst, CostModel::WL, SolutionSpace::SG);
    auto greedy = run_method(inst, "treestar", "wl");
    if (opt.cost > 0.0) {
      double b = beta(inst.model(), net, SolutionSpace::SG).value;
      auto br = oracle::check_bound(greedy.cost.total, opt.cost, b, net.sensor_count());
      rep.worst_ratio = std::max(rep.worst_ratio, br.ratio);
      rep.min_slack = std::min(rep.min_slack, br.slack);
      add("greedy within 4 beta^2 H_n", br.ok,
          "ratio " + detail::fmt(br.ratio) + " bound " + detail::fmt(br.factor));
    }
    add("greedy >= restricted optimum", greedy.cost.total >= opt.cost - 1e-9,
        detail::fmt(greedy.cost.total) + " vs " + detail::fmt(opt.cost));
    auto uopt = oracle::brute_restricted_opt(inst, CostModel::Unicast, SolutionSpace::NS);
    auto arb = run_method(inst, "unicast", "unicast");
    add("arborescence is the unicast optimum", detail::close(arb.cost.total, uopt.cost, 1e-9),
        detail::fmt(arb.cost.total) + " vs " + detail::fmt(uopt.cost));
  } catch (const std::exception& ex) {
    add("oracle", false, ex.what());
  }
}

inline VerifyReport verify_directory(const std::string& dir, std::size_t max_sensors) {
  VerifyReport rep;
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  if (files.empty()) rep.lines.push_back({dir, "fixtures present", false, "no *.json fixtures"});
  for (const auto& f : files) {
    try {
      verify_fixture(io::read_file(f.string()), max_sensors, rep);
    } catch (const std::exception& ex) {
      rep.lines.push_back({f.filename().string(), "load", false, ex.what()});
    }
  }
  return rep;
}

}  // namespace comprestree
