#pragma once

#include <algorithm>
#include <vector>

#include "comprestree/ctree.hpp"

namespace comprestree::oracle {

struct SimResult {
  double energy = 0.0;      // transmit energy, entropy units x weight
  double receptions = 0.0;  // bits received over all transmissions
  bool delivered = true;    // every transmitter held the value it sent
};

// Replays a scheme one transmission at a time: broadcasts in BFS order from
// the source, multicast links outward from the source, unicast and
// conditional traffic hop by hop along shortest paths.
inline SimResult simulate(const MovementScheme& scheme, const CompressionTree& tree, const Instance& inst) {
  const Network& net = inst.net();
  const NodeId bs = net.bs();
  SimResult out;
  auto send_along = [&](NodeId from, NodeId to, double bits) {
    auto path = inst.dist().path(from, to);
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      out.energy += bits * net.edge_weight(path[i], path[i + 1]);
      out.receptions += bits;
    }
  };
  for (NodeId v : net.sensors()) {
    RawPlan p = scheme.raw[static_cast<std::size_t>(v)];
    p.normalize();
    const double bits = inst.h(v);
    std::vector<char> holds(net.size(), 0);
    holds[static_cast<std::size_t>(v)] = 1;
    // broadcasts: fire whichever pending broadcaster already holds the value
    std::vector<NodeId> pending = p.broadcasters;
    while (!pending.empty()) {
      auto it = std::find_if(pending.begin(), pending.end(), [&](NodeId b) { return holds[static_cast<std::size_t>(b)]; });
      if (it == pending.end()) {
        out.delivered = false;
        break;
      }
      NodeId b = *it;
      pending.erase(it);
      out.energy += bits * net.tx_weight(b);
      for (const Neighbor& nb : net.neighbors(b)) {
        holds[static_cast<std::size_t>(nb.id)] = 1;
        out.receptions += bits;
      }
    }
    auto links = p.links;
    while (!links.empty()) {
      auto it = std::find_if(links.begin(), links.end(), [&](const auto& l) {
        return holds[static_cast<std::size_t>(l.first)] || holds[static_cast<std::size_t>(l.second)];
      });
      if (it == links.end()) {
        out.delivered = false;
        break;
      }
      holds[static_cast<std::size_t>(it->first)] = holds[static_cast<std::size_t>(it->second)] = 1;
      out.energy += bits * net.edge_weight(it->first, it->second);
      out.receptions += bits;
      links.erase(it);
    }
    for (NodeId t : p.unicast) send_along(v, t, bits);
  }
  for (NodeId v : net.sensors()) {
    NodeId par = tree.parent[static_cast<std::size_t>(v)];
    if (par == bs) continue;
    send_along(scheme.site[static_cast<std::size_t>(v)], bs, inst.hc(v, par));
  }
  return out;
}

}  // namespace comprestree::oracle
