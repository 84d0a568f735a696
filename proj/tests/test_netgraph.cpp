#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace comprestree;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::ParseError;
}

}  // namespace

TEST(Netgraph, SixNodeDistances) {
  auto net = fixtures::six_node();
  auto d = shortest_paths(net);
  EXPECT_EQ(net.size(), 6u);
  EXPECT_EQ(net.sensor_count(), 5u);
  const double want[] = {0, 1, 1, 2, 3, 2};
  for (NodeId v = 0; v < 6; ++v) EXPECT_DOUBLE_EQ(d.to_bs(v), want[v]) << v;
  EXPECT_EQ(d.path(4, 0), (std::vector<NodeId>{4, 3, 1, 0}));
  EXPECT_EQ(d.hops(4, 0), 3u);
}

TEST(Netgraph, WeightedShortestPathAvoidsHeavyEdge) {
  auto net = build_network({{0}, {1}, {2}}, {{0, 1, 5.0}, {0, 2, 1.0}, {1, 2, 1.0}}, 0);
  auto d = shortest_paths(net);
  EXPECT_DOUBLE_EQ(d(1, 0), 2.0);
  EXPECT_EQ(d.next_hop(1, 0), 2);
}

TEST(Netgraph, RejectsMalformedInput) {
  EXPECT_EQ(code_of([] { build_network({{0}, {1}}, {{0, 1}, {1, 0}}, 0); }), ErrorCode::DuplicateEdge);
  EXPECT_EQ(code_of([] { build_network({{0}, {1}}, {{0, 1, 0.0}}, 0); }), ErrorCode::NonpositiveWeight);
  EXPECT_EQ(code_of([] { build_network({{0, 0, 0, -1.0}, {1}}, {{0, 1}}, 0); }), ErrorCode::NonpositiveWeight);
  EXPECT_EQ(code_of([] { build_network({{0}, {1}, {2}}, {{0, 1}}, 0); }), ErrorCode::Disconnected);
  EXPECT_EQ(code_of([] { build_network({{0}, {1}}, {{0, 1}}, 5); }), ErrorCode::InvalidNode);
  EXPECT_EQ(code_of([] { build_network({{0}, {2}}, {{0, 2}}, 0); }), ErrorCode::InvalidNode);
}

TEST(Netgraph, GridShapes) {
  auto g = gen_grid(10, 10, 1.0, 1.0);
  EXPECT_EQ(g.size(), 101u);
  EXPECT_EQ(g.sensor_count(), 100u);
  EXPECT_EQ(g.bs(), 100);
  EXPECT_EQ(g.edges().size(), 180u + 1u);  // 4-neighbour lattice plus the bs link
  auto d = shortest_paths(g);
  EXPECT_DOUBLE_EQ(d.to_bs(0), 1.0);
  EXPECT_DOUBLE_EQ(d.to_bs(99), 19.0);
  auto lone = gen_grid(1, 1, 1.0, 1.0);
  EXPECT_EQ(lone.sensor_count(), 1u);
  auto two = gen_grid(2, 2, 1.0, 1.0);
  EXPECT_EQ(two.sensor_count(), 4u);
  EXPECT_EQ(two.edges().size(), 4u + 1u);
  auto ur = gen_grid(3, 4, 1.0, 1.0, Corner::UpperRight);
  EXPECT_EQ(ur.bs(), 12);
  EXPECT_TRUE(ur.adjacent(12, 11));
  EXPECT_EQ(ur.degree(12), 1u);
  EXPECT_EQ(gen_grid(3, 3, 1.0, 1.5).edges().size(), 20u + 1u);  // diagonals join
  EXPECT_THROW(gen_grid(3, 3, 1.0, 0.5), Error);
}

TEST(Netgraph, RandomIsDeterministicAndConnected) {
  auto a = gen_random(40, 100, 100, 30, 7);
  auto b = gen_random(40, 100, 100, 30, 7);
  ASSERT_EQ(a.edges().size(), b.edges().size());
  for (std::size_t i = 0; i < a.nodes().size(); ++i) EXPECT_EQ(a.nodes()[i].x, b.nodes()[i].x);
  double best = kInf;
  for (const Node& n : a.nodes()) best = std::min(best, std::hypot(n.x, n.y));
  EXPECT_DOUBLE_EQ(std::hypot(a.node(a.bs()).x, a.node(a.bs()).y), best);
  EXPECT_EQ(code_of([] { gen_random(30, 1000, 1000, 1, 3, 5); }), ErrorCode::CannotConnect);
}

TEST(Netgraph, RectangleLayout) {
  auto r = gen_random(100, 300, 30, 30, 7);
  for (const Node& n : r.nodes()) {
    EXPECT_LE(n.x, 300.0);
    EXPECT_LE(n.y, 30.0);
  }
}
