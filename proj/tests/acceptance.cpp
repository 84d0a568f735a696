// Acceptance gate: one PASS/FAIL line per criterion, non-zero exit on any failure.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>

#include <comprestree/algorithms/baselines.hpp>
#include <comprestree/algorithms/reductions.hpp>
#include <comprestree/algorithms/treestar.hpp>
#include <comprestree/algorithms/unicast.hpp>
#include <comprestree/algorithms/wcds.hpp>
#include <comprestree/oracle/bound.hpp>
#include <comprestree/oracle/brute.hpp>
#include <comprestree/oracle/exact.hpp>

#include "fixtures.hpp"
#include "random_instances.hpp"

using namespace comprestree;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream note;
  void fail(const std::string& why) {
    if (ok) note << why;
    ok = false;
  }
};

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

// Every (total, dsc) pair seen in criteria 1-5, for criterion 9.
struct DscLedger {
  std::size_t checked = 0;
  std::size_t violations = 0;
  double worst = kInf;  // min of total - dsc
  std::string first;
  std::map<std::string, std::size_t> by_source;
  void add(const std::string& what, double total, double dsc) {
    ++checked;
    worst = std::min(worst, total - dsc);
    if (total < dsc - 1e-9) {
      if (violations++ == 0) first = what;
      by_source[what.substr(0, what.find(' '))]++;
    }
  }
  // oracle optima are not method outputs; tracked for the report only
  std::size_t oracle_checked = 0, oracle_below = 0;
  void oracle(double total, double dsc) {
    ++oracle_checked;
    oracle_below += total < dsc - 1e-9;
  }
  void add(const std::string& what, const Solution& s, const Instance& inst) {
    add(what, eval_cost(s.scheme, s.tree, inst).total, dsc_lower_bound(inst));
  }
} g_dsc;

void c1(Outcome& o) {
  for (double eps : {0.0, 0.1}) {
    auto inst = fixtures::six_node_instance(eps);
    auto check = [&](const char* what, double got, double want) {
      if (!near(got, want, 1e-9)) {
        std::ostringstream s;
        s << what << " at eps=" << eps << ": " << got << " vs " << want << "; ";
        o.fail(s.str());
      }
    };
    check("IND", ind_cost(inst), 9.0);
    auto cl = cluster_evaluate(inst, {{1}, {2, 5}, {3, 4}}).solution;
    auto cc = eval_cost(cl.scheme, cl.tree, inst);
    check("Cluster total", cc.total, 6.0 + 3.0 * eps);
    check("Cluster NC", cc.nc, 4.0 + 5.0 * eps);
    check("Cluster IC", cc.ic, 2.0 - 2.0 * eps);
    auto ex = fixtures::example_tree();
    auto ec = eval_cost(ex.scheme, ex.tree, inst);
    check("Example total", ec.total, 2.0 + 7.0 * eps);
    check("Example NC", ec.nc, 1.0 + 8.0 * eps);
    check("Example IC", ec.ic, 1.0 - eps);
    check("DSC", dsc_lower_bound(inst), 1.0 + 8.0 * eps);
    auto un = fixtures::example_tree_unicast();
    check("Unicast accounting", eval_cost(un.scheme, un.tree, inst).total, 5.0 + 7.0 * eps);
    g_dsc.add("c1 ind", ind_solution(inst), inst);
    g_dsc.add("c1 cluster", cl, inst);
    g_dsc.add("c1 example", ex, inst);
    g_dsc.add("c1 example unicast", un, inst);
    g_dsc.add("c1 cluster greedy", cluster_greedy(inst).solution, inst);
    g_dsc.add("c1 treestar", greedy_treestar(inst, TreeStarModel::WLSG).solution, inst);
  }
  if (o.ok) o.note << "18 values at eps in {0, 0.1}";
}

void c2(Outcome& o) {
  auto net = gen_grid(10, 10, 1.0, 1.0);
  double worst = 0.0;
  for (double c : {1.0, 10.0, 100.0}) {
    Instance inst(net, EntropyModel::rainfall(net, 1.0, c));
    auto g = greedy_treestar(inst, TreeStarModel::WLSG).solution;
    double nc = eval_cost(g.scheme, g.tree, inst).nc, dsc = dsc_lower_bound(inst);
    worst = std::max(worst, std::abs(nc - dsc));
    if (!near(nc, dsc, 1e-9)) {
      std::ostringstream s;
      s << "c=" << c << ": NC " << nc << " DSC " << dsc << "; ";
      o.fail(s.str());
    }
    g_dsc.add("c2 treestar", g, inst);
  }
  o.note << " max |NC-DSC| " << worst;
}

void c3(Outcome& o) {
  const double cs[] = {1, 10, 50, 100, 500};
  double first_ts = 0.0;
  for (double c : cs) {
    double ind = 0, cl = 0, ts = 0;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      auto net = gen_random(100, 200, 200, 30, seed);
      Instance inst(net, EntropyModel::rainfall(net, 1.0, c));
      double base = ind_cost(inst);
      auto cs_ = cluster_greedy(inst).solution;
      auto tr = greedy_treestar(inst, TreeStarModel::WLSG).solution;
      ind += 1.0;
      cl += eval_cost(cs_.scheme, cs_.tree, inst).total / base;
      ts += eval_cost(tr.scheme, tr.tree, inst).total / base;
      g_dsc.add("c3 cluster", cs_, inst);
      g_dsc.add("c3 treestar", tr, inst);
      g_dsc.add("c3 ind", ind_solution(inst), inst);
    }
    ind /= 10, cl /= 10, ts /= 10;
    if (c == 1) first_ts = ts;
    o.note << " c=" << c << ":" << ts << "/" << cl;
    if (!(ts <= cl + 1e-12 && cl <= ind + 1e-12)) o.fail("ordering broken at c=" + std::to_string(c) + "; ");
    if (c == 500 && !(ts < 0.5 * first_ts)) o.fail("c=500 not below half of c=1; ");
  }
}

void c4(Outcome& o) {
  std::mt19937_64 rng(404);
  double worst = 0.0;
  for (int t = 0; t < 50; ++t) {
    auto net = randinst::network(rng, 2 + t % 7);  // up to 7 sensors
    Instance inst(net, randinst::matrix_model(rng, net, 2.0));
    auto s = unicast_arborescence(inst);
    double got = eval_cost(s.scheme, s.tree, inst).total;
    double opt = oracle::brute_restricted_opt(inst, CostModel::Unicast, SolutionSpace::NS).cost;
    worst = std::max(worst, std::abs(got - opt));
    if (!near(got, opt, 1e-9)) o.fail("trial " + std::to_string(t) + " differs; ");
    g_dsc.add("c4 unicast", s, inst);
    g_dsc.oracle(opt, dsc_lower_bound(inst));
  }
  o.note << " 50 instances, max |diff| " << worst;
}

void c5(Outcome& o) {
  std::mt19937_64 rng(505);
  double min_slack = kInf, worst_ratio = 0.0;
  for (int t = 0; t < 50; ++t) {
    auto net = randinst::network(rng, 3 + t % 7);  // up to 8 sensors
    Instance inst(net, randinst::matrix_model(rng, net, 2.0));
    auto g = greedy_treestar(inst, TreeStarModel::WLSG).solution;
    double got = eval_cost(g.scheme, g.tree, inst).total;
    auto opt = oracle::brute_restricted_opt(inst, CostModel::WL, SolutionSpace::SG);
    double b = beta(inst.model(), net, SolutionSpace::SG).value;
    auto br = oracle::check_bound(got, opt.cost, b, net.sensor_count());
    min_slack = std::min(min_slack, br.slack);
    worst_ratio = std::max(worst_ratio, br.ratio);
    if (!br.ok) o.fail("bound violated in trial " + std::to_string(t) + "; ");
    g_dsc.add("c5 treestar", g, inst);
    g_dsc.oracle(opt.cost, dsc_lower_bound(inst));
  }
  double worst_gap = 0.0;
  for (int t = 0; t < 50; ++t) {
    auto net = randinst::network(rng, 2 + t % 5);  // up to 5 sensors
    Instance inst(net, randinst::matrix_model(rng, net, 2.0));
    double r = oracle::brute_restricted_opt(inst, CostModel::WL, SolutionSpace::NS).cost;
    double u = oracle::brute_unrestricted(inst, CostModel::WL, SolutionSpace::NS).cost;
    worst_gap = std::max(worst_gap, r / u);
    if (r > 2.0 * u * (1.0 + 1e-12)) o.fail("restricted > 2x unrestricted in trial " + std::to_string(t) + "; ");
    g_dsc.oracle(u, dsc_lower_bound(inst));
  }
  o.note << " worst ratio " << worst_ratio << ", min slack " << min_slack << ", worst restricted/unrestricted "
         << worst_gap;
}

void c6(Outcome& o) {
  std::mt19937_64 rng(606);
  int mismatches = 0;
  for (int t = 0; t < 200; ++t) {
    auto net = randinst::network(rng, 3 + t % 8);  // up to 10 nodes
    Instance inst(net, t % 2 ? randinst::matrix_model(rng, net) : randinst::decay_model(rng, net, 2.0));
    int blocks = 1 + static_cast<int>(rng() % net.sensor_count());
    Forest f(net, randinst::partition(rng, net, blocks));
    if (f.components() <= 1) {
      f = Forest(net);
      if (f.components() <= 1) continue;
    }
    TreeStar st;
    oracle::BruteStar b;
    try {
      st = mce_treestar_wlsg(f, inst);
    } catch (const Error& e) {
      st.center = kNoNode;
    }
    b = oracle::brute_mce_wlsg(f, inst);
    if (st.center == kNoNode || b.center == kNoNode) {
      if (st.center != b.center) ++mismatches, o.fail("candidate existence differs; ");
      continue;
    }
    auto leaves = st.leaves;
    std::sort(leaves.begin(), leaves.end());
    bool same = near(st.cost(), b.cost, 1e-9) && st.center == b.center && leaves == b.leaves;
    if (!same) {
      ++mismatches;
      o.fail("trial " + std::to_string(t) + " differs; ");
    }
  }
  o.note << " 200 states, " << mismatches << " mismatches";
}

void c7(Outcome& o) {
  std::mt19937_64 rng(707);
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    Network net = t % 2 ? randinst::network(rng, 4 + t % 7, {0.2, false})
                        : gen_random(10, 30, 30, 12, 7000 + static_cast<std::uint64_t>(t));
    auto s = wcds_greedy(net);
    if (!is_wcds(net, s)) o.fail("invalid WCDS in trial " + std::to_string(t) + "; ");
    if (net.size() > 10) continue;
    std::size_t delta = 0;
    for (NodeId v : net.sensors()) delta = std::max(delta, net.degree(v));
    auto opt = oracle::brute_min_wcds(net);
    double bound = (oracle::harmonic(delta) + 1.0) * static_cast<double>(opt.size());
    worst = std::max(worst, static_cast<double>(s.size()) / static_cast<double>(opt.size()));
    if (static_cast<double>(s.size()) > bound + 1e-9) o.fail("size bound violated in trial " + std::to_string(t) + "; ");
  }
  o.note << " 100 graphs, worst |S|/|S*| " << worst;
}

void c8(Outcome& o) {
  std::mt19937_64 rng(808);
  std::size_t checks = 0;
  for (int t = 0; t < 40; ++t) {
    auto net = randinst::network(rng, 3 + t % 6);  // up to 8 nodes
    Instance inst(net, randinst::matrix_model(rng, net));
    Forest f(net, randinst::partition(rng, net, 1 + static_cast<int>(rng() % 4)));
    for (NodeId r : net.sensors()) {
      auto ours = wlns_best_cost_per_k(f, inst, r);
      auto ref = oracle::directed_steiner_per_k(reduce_to_directed_steiner(f, inst, r));
      if (ours.size() != ref.size()) o.fail("k range differs; ");
      for (std::size_t k = 1; k < std::min(ours.size(), ref.size()); ++k, ++checks)
        if (!(ours[k] == ref[k] || near(ours[k], ref[k], 1e-9))) o.fail("directed steiner differs in trial " + std::to_string(t) + "; ");
      double a = multicast_best_ceff(f, inst, r);
      double b = oracle::group_steiner_min_density(reduce_to_group_steiner(f, inst, r));
      ++checks;
      if (!(a == b || near(a, b, 1e-9))) o.fail("group steiner differs in trial " + std::to_string(t) + "; ");
    }
  }
  o.note << " " << checks << " comparisons";
}

void c9(Outcome& o) {
  if (g_dsc.checked == 0) o.fail("nothing recorded");
  if (g_dsc.violations) {
    std::string where;
    for (const auto& [src, k] : g_dsc.by_source) where += " " + src + ":" + std::to_string(k);
    o.fail(std::to_string(g_dsc.violations) + " below DSC (by source" + where + ", first " + g_dsc.first + ");");
  }
  o.note << " " << g_dsc.checked << " schemes, min total-DSC " << g_dsc.worst << "; exhaustive optima below DSC: "
         << g_dsc.oracle_below << "/" << g_dsc.oracle_checked;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double seconds;
    std::function<void(Outcome&)> run;
  };
  const Criterion all[] = {
      {"C1 six-node fixture values", 1, c1},          {"C2 grid NC equals DSC", 10, c2},
      {"C3 rainfall sweep shape", 300, c3},         {"C4 unicast optimality", 120, c4},
      {"C5 approximation bound", 300, c5},          {"C6 mce treestar exactness", 60, c6},
      {"C7 WCDS validity and size", 120, c7},       {"C8 reduction soundness", 120, c8},
      {"C9 DSC dominance", 1, c9},
  };
  int failures = 0;
  for (const auto& c : all) {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.seconds) o.fail(" over time budget");
    failures += !o.ok;
    std::printf("%s %s (%.2fs / %.0fs) %s\n", o.ok ? "PASS" : "FAIL", c.name, secs, c.seconds, o.note.str().c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
