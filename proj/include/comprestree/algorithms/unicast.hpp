#pragma once

#include <vector>

#include "comprestree/algorithms/arborescence.hpp"
#include "comprestree/ctree.hpp"

namespace comprestree {

// Point-to-point model over all sensor pairs. Arc u -> v carries the cheaper
// of "X_u goes to v, v compresses" and "X_v goes to u, u compresses"; arc
// bs -> v makes v a root. The minimum arborescence from the bs is the optimal
// restricted solution since costs split per tree edge.
inline Solution unicast_arborescence(const Instance& inst) {
  const Network& net = inst.net();
  const auto n = static_cast<int>(net.size());
  const NodeId bs = net.bs();
  std::vector<Arc> arcs;
  std::vector<char> at_child;  // which branch each arc uses
  for (NodeId v : net.sensors()) {
    arcs.push_back({bs, v, inst.h(v) * inst.d_bs(v)});
    at_child.push_back(1);
    for (NodeId u : net.sensors()) {
      if (u == v) continue;
      double duv = inst.d(u, v);
      double b1 = inst.h(u) * duv + inst.hc(v, u) * inst.d_bs(v);
      double b2 = inst.h(v) * duv + inst.hc(v, u) * inst.d_bs(u);
      arcs.push_back({u, v, b1 <= b2 ? b1 : b2});
      at_child.push_back(b1 <= b2);
    }
  }
  Solution sol;
  sol.tree.parent.assign(net.size(), kNoNode);
  sol.scheme = MovementScheme::empty(net.size(), CostModel::Unicast);
  if (net.sensor_count() == 0) return sol;
  auto arb = min_arborescence(n, bs, arcs);
  for (NodeId v : net.sensors()) {
    int i = arb.arc[static_cast<std::size_t>(v)];
    NodeId u = arcs[static_cast<std::size_t>(i)].from;
    sol.tree.parent[static_cast<std::size_t>(v)] = u;
    if (u == bs) {
      sol.scheme.raw[static_cast<std::size_t>(v)].unicast.push_back(bs);
    } else if (at_child[static_cast<std::size_t>(i)]) {
      sol.scheme.raw[static_cast<std::size_t>(u)].unicast.push_back(v);
      sol.scheme.site[static_cast<std::size_t>(v)] = v;
    } else {
      sol.scheme.raw[static_cast<std::size_t>(v)].unicast.push_back(u);
      sol.scheme.site[static_cast<std::size_t>(v)] = u;
    }
  }
  for (auto& p : sol.scheme.raw) p.normalize();
  return sol;
}

}  // namespace comprestree
