#pragma once

#include <algorithm>
#include <functional>
#include <vector>

#include "comprestree/netgraph.hpp"

namespace comprestree {

// Enumerates every connected node set containing `root` exactly once. The
// visitor returns false to skip all supersets reached through that set
// (valid when its objective is monotone under growth).
template <class Visit>
void for_each_connected_subset(const Network& net, NodeId root, Visit&& visit) {
  const std::size_t n = net.size();
  std::vector<char> blocked(n, 0);
  std::vector<NodeId> members{root};
  blocked[static_cast<std::size_t>(root)] = 1;

  std::function<void(std::vector<NodeId>)> rec = [&](std::vector<NodeId> frontier) {
    if (!visit(static_cast<const std::vector<NodeId>&>(members))) return;
    while (!frontier.empty()) {
      NodeId v = frontier.back();
      frontier.pop_back();
      members.push_back(v);
      std::vector<NodeId> next = frontier;
      std::vector<NodeId> added;
      for (const Neighbor& nb : net.neighbors(v)) {
        auto u = static_cast<std::size_t>(nb.id);
        if (!blocked[u]) {
          blocked[u] = 1;
          added.push_back(nb.id);
          next.push_back(nb.id);
        }
      }
      rec(std::move(next));
      for (NodeId a : added) blocked[static_cast<std::size_t>(a)] = 0;
      members.pop_back();
      // v stays blocked: later siblings must not contain it
    }
  };

  std::vector<NodeId> frontier;
  for (const Neighbor& nb : net.neighbors(root)) {
    blocked[static_cast<std::size_t>(nb.id)] = 1;
    frontier.push_back(nb.id);
  }
  std::reverse(frontier.begin(), frontier.end());
  rec(std::move(frontier));
}

}  // namespace comprestree
