#pragma once

#include <comprestree/ctree.hpp>

namespace fixtures {

using namespace comprestree;

// Small example network: bs = 0, sensors 1..5, unit weights.
// Hop distances to the bs: d1 = d2 = 1, d3 = d5 = 2, d4 = 3.
inline Network six_node() {
  std::vector<Node> nodes = {{0, 0.0, 0.0}, {1, 1.0, 0.0}, {2, 0.0, 1.0},
                             {3, 2.0, 0.0}, {4, 3.0, 0.0}, {5, 1.0, 1.0}};
  std::vector<Edge> edges = {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {1, 5}, {2, 5}, {3, 4}};
  return build_network(nodes, edges, 0);
}

inline Instance six_node_instance(double eps) { return Instance(six_node(), EntropyModel::uniform(6, 1.0, eps)); }

// Tree rooted at 1 with children 2, 3, 5 and 4 below 3; nodes 1 and 4
// broadcast, X4|X3 is computed at 3, the rest at the child.
inline Solution example_tree() {
  Solution s;
  s.tree.parent = {kNoNode, 0, 1, 1, 3, 1};
  s.scheme = MovementScheme::empty(6, CostModel::WL);
  s.scheme.raw[1].broadcasters = {1};
  s.scheme.raw[4].broadcasters = {4};
  s.scheme.site = {kNoNode, kNoNode, 2, 3, 3, 5};
  return s;
}

// Same tree with point-to-point delivery.
inline Solution example_tree_unicast() {
  Solution s = example_tree();
  s.scheme = MovementScheme::empty(6, CostModel::Unicast);
  s.scheme.raw[1].unicast = {0, 2, 3, 5};
  s.scheme.raw[4].unicast = {3};
  s.scheme.site = {kNoNode, kNoNode, 2, 3, 3, 5};
  return s;
}

// Ten-sensor network with long-range links around a few hubs:
// bs-4, 4-1, 4-5, 1-3, 3-2, 5-9, 9-8, 8-10, 10-6, 10-7.
// Hubs 1, 4, 5 are expensive to broadcast from, 3 slightly.
inline Network hubs10() {
  std::vector<Node> nodes;
  for (NodeId v = 0; v <= 10; ++v) nodes.push_back({v, static_cast<double>(v), 0.0, 1.0});
  nodes[1].w = nodes[4].w = nodes[5].w = 2.0;
  nodes[3].w = 1.2;
  std::vector<Edge> edges = {{0, 4}, {4, 1}, {4, 5}, {1, 3}, {3, 2}, {5, 9}, {9, 8}, {8, 10}, {10, 6}, {10, 7}};
  return build_network(nodes, edges, 0);
}

}  // namespace fixtures
