#include <gtest/gtest.h>

#include <comprestree/algorithms/baselines.hpp>
#include <comprestree/algorithms/treestar.hpp>
#include <comprestree/algorithms/unicast.hpp>
#include <comprestree/algorithms/wcds.hpp>
#include <comprestree/oracle/bound.hpp>
#include <comprestree/oracle/brute.hpp>
#include <comprestree/oracle/exact.hpp>
#include <comprestree/oracle/simulate.hpp>

#include "fixtures.hpp"
#include "random_instances.hpp"

using namespace comprestree;

TEST(Oracle, SteinerBasics) {
  auto net = fixtures::six_node();
  EXPECT_DOUBLE_EQ(oracle::steiner_exact(net, {4, 0}), 3.0);
  // 4-cycle with weights 1,2,3,4; three terminals drop the heaviest arc
  auto cyc = build_network({{0}, {1}, {2}, {3}}, {{0, 1, 1.0}, {1, 2, 2.0}, {2, 3, 3.0}, {3, 0, 4.0}}, 0);
  EXPECT_DOUBLE_EQ(oracle::steiner_exact(cyc, {0, 1, 2, 3}), 6.0);
  EXPECT_DOUBLE_EQ(oracle::steiner_exact(cyc, {0, 2, 3}), 6.0);
}

TEST(Oracle, CdsExact) {
  auto net = fixtures::six_node();
  auto r = oracle::cds_exact(net, 1, {0, 2, 3});
  EXPECT_DOUBLE_EQ(r.weight, 1.0);
  EXPECT_EQ(r.nodes, (std::vector<NodeId>{1}));
  EXPECT_DOUBLE_EQ(oracle::cds_exact(net, 4, {0}).weight, 3.0);
}

TEST(Oracle, BoundFactor) {
  auto b = oracle::check_bound(10.0, 10.0, 1.0, 5);
  EXPECT_NEAR(b.factor, 4.0 * (1 + 0.5 + 1.0 / 3 + 0.25 + 0.2), 1e-12);
  EXPECT_DOUBLE_EQ(b.ratio, 1.0);
  EXPECT_TRUE(b.ok);
  EXPECT_FALSE(oracle::check_bound(100.0, 1.0, 1.0, 5).ok);
  EXPECT_THROW(oracle::check_bound(1.0, 0.0, 1.0, 5), Error);
}

TEST(Oracle, SixNodeOptimum) {
  for (double eps : {0.0, 0.1}) {
    auto inst = fixtures::six_node_instance(eps);
    auto opt = oracle::brute_restricted_opt(inst, CostModel::WL, SolutionSpace::SG);
    EXPECT_LE(opt.cost, 2.0 + 7.0 * eps + 1e-12);
    EXPECT_GE(opt.cost, dsc_lower_bound(inst) - 1e-12);
  }
}

TEST(Oracle, TwoSensorsClosedForm) {
  // bs - a - b, unicast, heterogeneous entropies
  auto net = build_network({{0}, {1}, {2}}, {{0, 1, 1.0}, {1, 2, 2.0}}, 0);
  std::vector<std::vector<double>> hc = {{0, 0, 0}, {0, 0, 0.4}, {0, 0.7, 0}};
  Instance inst(net, EntropyModel::matrix({0, 1.0, 1.5}, hc));
  const double ha = 1.0, hb = 1.5, hab = 0.4, hba = 0.7, da = 1.0, db = 3.0, dab = 2.0;
  double both_roots = ha * da + hb * db;
  // a parent of b: X_a to b (site b) or X_b to a (site a)
  double a_over_b = ha * da + std::min(ha * dab + hba * db, hb * dab + hba * da);
  double b_over_a = hb * db + std::min(hb * dab + hab * da, ha * dab + hab * db);
  double want = std::min({both_roots, a_over_b, b_over_a});
  EXPECT_NEAR(oracle::brute_restricted_opt(inst, CostModel::Unicast, SolutionSpace::NS).cost, want, 1e-12);
}

TEST(Oracle, IndependentDataGivesIndependentCost) {
  auto inst = fixtures::six_node_instance(1.0);
  EXPECT_NEAR(oracle::brute_restricted_opt(inst, CostModel::Unicast, SolutionSpace::NS).cost, 9.0, 1e-12);
}

TEST(Oracle, SingleSensorRestrictedEqualsUnrestricted) {
  auto net = build_network({{0}, {1}, {2}}, {{0, 1}, {1, 2}}, 0);
  std::vector<std::vector<double>> hc(3, std::vector<double>(3, 0.0));
  Instance inst(net, EntropyModel::matrix({0, 0, 2.0}, hc));
  for (auto m : {CostModel::WL, CostModel::Unicast})
    EXPECT_NEAR(oracle::brute_restricted_opt(inst, m, SolutionSpace::NS).cost,
                oracle::brute_unrestricted(inst, m, SolutionSpace::NS).cost, 1e-12);
}

TEST(Oracle, RestrictedWithinFactorOfUnrestricted) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 8; ++t) {
    auto net = randinst::network(rng, 3 + t % 3);
    Instance inst(net, randinst::matrix_model(rng, net));
    double b = beta(inst.model(), net, SolutionSpace::NS).value;
    for (auto m : {CostModel::WL, CostModel::Unicast}) {
      double r = oracle::brute_restricted_opt(inst, m, SolutionSpace::NS).cost;
      double u = oracle::brute_unrestricted(inst, m, SolutionSpace::NS).cost;
      EXPECT_LE(u, r + 1e-12);
      EXPECT_LE(r, (2.0 + b) * u + 1e-9);
    }
  }
}

TEST(Oracle, SimulationAgreesWithEvaluation) {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 15; ++t) {
    auto net = randinst::network(rng, 6 + t % 5);
    Instance inst(net, randinst::decay_model(rng, net, 3.0));
    std::vector<Solution> sols = {ind_solution(inst), cluster_greedy(inst).solution, unicast_arborescence(inst),
                                  greedy_treestar(inst, TreeStarModel::WLSG).solution,
                                  tree_from_wcds(inst, wcds_greedy(net))};
    for (const auto& s : sols) {
      auto sim = oracle::simulate(s.scheme, s.tree, inst);
      EXPECT_TRUE(sim.delivered);
      EXPECT_NEAR(sim.energy, eval_cost(s.scheme, s.tree, inst).total, 1e-9);
      EXPECT_NEAR(eval_cost(s.scheme, s.tree, inst, CostOptions{0.3}).total, sim.energy + 0.3 * sim.receptions, 1e-9);
    }
  }
}

TEST(Oracle, BudgetsAreEnforced) {
  auto net = gen_grid(3, 4, 1.0, 1.0);
  Instance inst(net, EntropyModel::uniform(net.size(), 1.0, 0.1));
  try {
    oracle::brute_restricted_opt(inst, CostModel::WL, SolutionSpace::SG);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BudgetExceeded);
  }
  EXPECT_THROW(oracle::brute_unrestricted(inst, CostModel::WL, SolutionSpace::SG), Error);
  oracle::OracleBudget tiny;
  tiny.cds_universe = 4;
  EXPECT_THROW(oracle::cds_exact(net, 1, {2}, tiny), Error);
}
