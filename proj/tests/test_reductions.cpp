#include <gtest/gtest.h>

#include <comprestree/algorithms/reductions.hpp>
#include <comprestree/oracle/exact.hpp>

#include "fixtures.hpp"
#include "random_instances.hpp"

using namespace comprestree;

TEST(Reductions, DirectedSteinerMatchesEnumeration) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 15; ++t) {
    auto net = randinst::network(rng, 4 + t % 4);
    Instance inst(net, randinst::matrix_model(rng, net));
    Forest f(net, randinst::partition(rng, net, 3));
    for (NodeId r : net.sensors()) {
      auto ours = wlns_best_cost_per_k(f, inst, r);
      auto ref = oracle::directed_steiner_per_k(reduce_to_directed_steiner(f, inst, r));
      ASSERT_EQ(ours.size(), ref.size());
      for (std::size_t k = 1; k < ours.size(); ++k) EXPECT_NEAR(ours[k], ref[k], 1e-9) << "t=" << t << " r=" << r;
    }
  }
}

TEST(Reductions, GroupSteinerMatchesEnumeration) {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 15; ++t) {
    auto net = randinst::network(rng, 4 + t % 4);
    Instance inst(net, randinst::matrix_model(rng, net));
    Forest f(net, randinst::partition(rng, net, 3));
    for (NodeId r : net.sensors()) {
      double ours = multicast_best_ceff(f, inst, r);
      double ref = oracle::group_steiner_min_density(reduce_to_group_steiner(f, inst, r));
      if (ours == kInf) EXPECT_EQ(ref, kInf);
      else EXPECT_NEAR(ours, ref, 1e-9) << "t=" << t << " r=" << r;
    }
  }
}

TEST(Reductions, SingletonForestOneTerminalIsBestNeighbour) {
  auto inst = fixtures::six_node_instance(0.1);
  Forest f(inst.net());
  auto ds = reduce_to_directed_steiner(f, inst, 1);
  EXPECT_EQ(ds.terminals.size(), 4u);
  auto per_k = oracle::directed_steiner_per_k(ds);
  // cheapest single leaf next to 1 is 2: H(1) w(1) + 0.1 * 1
  EXPECT_NEAR(per_k[1], 1.1, 1e-12);
}

TEST(Reductions, TerminalsFollowComponents) {
  auto inst = fixtures::six_node_instance(0.1);
  std::vector<int> one_foreign = {-1, 0, 0, 0, 1, 0};
  auto ds = reduce_to_directed_steiner(Forest(inst.net(), one_foreign), inst, 1);
  EXPECT_EQ(ds.terminals.size(), 1u);
  std::vector<int> merged = {-1, 0, 0, 0, 0, 0};
  EXPECT_TRUE(reduce_to_directed_steiner(Forest(inst.net(), merged), inst, 1).terminals.empty());
  auto gs = reduce_to_group_steiner(Forest(inst.net(), merged), inst, 1);
  EXPECT_EQ(gs.groups.size(), 1u);
  EXPECT_EQ(oracle::group_steiner_min_density(gs), kInf);
}

TEST(Reductions, GroupDensitySingleAdjacentMember) {
  // bs - 1 - 2; only 2 is foreign; edge 1-2 of weight W
  for (double w : {1.0, 4.0}) {
    auto net = build_network({{0}, {1}, {2}}, {{0, 1}, {1, 2, w}}, 0);
    Instance inst(net, EntropyModel::uniform(3, 1.0, 0.2));
    auto gs = reduce_to_group_steiner(Forest(net), inst, 1);
    // edge H(1) W plus pendant 0.2 * d(2) over two participants
    EXPECT_NEAR(oracle::group_steiner_min_density(gs), (w + 0.2 * (1.0 + w)) / 2.0, 1e-12);
  }
}
