#pragma once

#include <algorithm>
#include <vector>

#include "comprestree/ctree.hpp"

namespace comprestree {

namespace detail {

inline std::vector<int> sensor_components(const Network& net, int* count = nullptr) {
  const NodeId bs = net.bs();
  return component_labels(net, [bs](NodeId v) { return v != bs; }, count);
}

}  // namespace detail

// Both weak-connectivity conditions on the sensor subgraph: S dominates every
// sensor, and the edges touching S keep each sensor component connected.
inline bool is_wcds(const Network& net, const std::vector<NodeId>& s) {
  const std::size_t n = net.size();
  const NodeId bs = net.bs();
  std::vector<char> in(n, 0);
  for (NodeId v : s) {
    if (!net.is_sensor(v)) return false;
    in[static_cast<std::size_t>(v)] = 1;
  }
  for (NodeId v : net.sensors()) {
    if (in[static_cast<std::size_t>(v)]) continue;
    bool dominated = false;
    for (const Neighbor& nb : net.neighbors(v))
      if (nb.id != bs && in[static_cast<std::size_t>(nb.id)]) dominated = true;
    if (!dominated) return false;
  }
  auto full = detail::sensor_components(net);
  // components over edges with at least one endpoint in S
  std::vector<int> label(n, -1);
  for (NodeId start : net.sensors()) {
    if (label[static_cast<std::size_t>(start)] >= 0) continue;
    label[static_cast<std::size_t>(start)] = start;
    std::vector<NodeId> stack{start};
    while (!stack.empty()) {
      NodeId v = stack.back();
      stack.pop_back();
      for (const Neighbor& nb : net.neighbors(v)) {
        if (nb.id == bs || label[static_cast<std::size_t>(nb.id)] >= 0) continue;
        if (!in[static_cast<std::size_t>(v)] && !in[static_cast<std::size_t>(nb.id)]) continue;
        label[static_cast<std::size_t>(nb.id)] = start;
        stack.push_back(nb.id);
      }
    }
  }
  // same partition as the sensor subgraph itself
  std::vector<int> rep(n, -1);
  for (NodeId v : net.sensors()) {
    auto f = static_cast<std::size_t>(full[static_cast<std::size_t>(v)]);
    if (rep[f] < 0) rep[f] = label[static_cast<std::size_t>(v)];
    else if (rep[f] != label[static_cast<std::size_t>(v)]) return false;
  }
  return true;
}

// White/gray/black greedy on the sensor subgraph. Each step blackens the gray
// node, or white node next to a gray one, that covers the most white nodes.
inline std::vector<NodeId> wcds_greedy(const Network& net) {
  enum Color : char { White, Gray, Black };
  const std::size_t n = net.size();
  const NodeId bs = net.bs();
  std::vector<Color> color(n, White);
  auto sensor_degree = [&](NodeId v) {
    std::size_t d = 0;
    for (const Neighbor& nb : net.neighbors(v)) d += nb.id != bs;
    return d;
  };
  auto yield = [&](NodeId v) {
    std::size_t y = color[static_cast<std::size_t>(v)] == White;
    for (const Neighbor& nb : net.neighbors(v)) y += nb.id != bs && color[static_cast<std::size_t>(nb.id)] == White;
    return y;
  };
  auto blacken = [&](NodeId v, std::vector<NodeId>& out) {
    color[static_cast<std::size_t>(v)] = Black;
    out.push_back(v);
    for (const Neighbor& nb : net.neighbors(v))
      if (nb.id != bs && color[static_cast<std::size_t>(nb.id)] == White) color[static_cast<std::size_t>(nb.id)] = Gray;
  };

  int ncomp = 0;
  auto comp = detail::sensor_components(net, &ncomp);
  std::vector<NodeId> s;
  for (int c = 0; c < ncomp; ++c) {
    std::vector<NodeId> members;
    for (NodeId v : net.sensors())
      if (comp[static_cast<std::size_t>(v)] == c) members.push_back(v);
    if (members.empty()) continue;
    NodeId seed = members.front();
    for (NodeId v : members)
      if (sensor_degree(v) > sensor_degree(seed)) seed = v;
    blacken(seed, s);
    for (;;) {
      NodeId best = kNoNode;
      std::size_t best_y = 0;
      for (NodeId v : members) {
        Color cv = color[static_cast<std::size_t>(v)];
        if (cv == Black) continue;
        if (cv == White) {
          bool next_to_gray = false;
          for (const Neighbor& nb : net.neighbors(v))
            if (nb.id != bs && color[static_cast<std::size_t>(nb.id)] == Gray) next_to_gray = true;
          if (!next_to_gray) continue;
        }
        std::size_t y = yield(v);
        if (y > best_y) {
          best = v;
          best_y = y;
        }
      }
      if (best == kNoNode) break;
      blacken(best, s);
    }
  }
  std::sort(s.begin(), s.end());
  return s;
}

// Every member of S broadcasts its raw value once. The tree is grown over the
// edges touching S from the member nearest the bs; each non-member then hangs
// off its cheapest member neighbour.
inline Solution tree_from_wcds(const Instance& inst, const std::vector<NodeId>& s_in) {
  const Network& net = inst.net();
  const std::size_t n = net.size();
  const NodeId bs = net.bs();
  std::vector<NodeId> s = s_in;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  if (!is_wcds(net, s)) throw Error(ErrorCode::InvalidWCDS, "node set is not a weakly connected dominating set");
  std::vector<char> in(n, 0);
  for (NodeId v : s) in[static_cast<std::size_t>(v)] = 1;

  Solution sol;
  sol.tree.parent.assign(n, kNoNode);
  sol.scheme = MovementScheme::empty(n, CostModel::WL);
  for (NodeId v : s) sol.scheme.raw[static_cast<std::size_t>(v)].broadcasters = {v};

  int ncomp = 0;
  auto comp = detail::sensor_components(net, &ncomp);
  std::vector<char> seen(n, 0);
  for (int c = 0; c < ncomp; ++c) {
    NodeId root = kNoNode;
    for (NodeId v : s)
      if (comp[static_cast<std::size_t>(v)] == c && (root == kNoNode || inst.d_bs(v) < inst.d_bs(root))) root = v;
    sol.tree.parent[static_cast<std::size_t>(root)] = bs;
    seen[static_cast<std::size_t>(root)] = 1;
    std::vector<NodeId> queue{root};
    for (std::size_t k = 0; k < queue.size(); ++k) {
      NodeId v = queue[k];
      for (const Neighbor& nb : net.neighbors(v)) {
        if (nb.id == bs || seen[static_cast<std::size_t>(nb.id)]) continue;
        if (!in[static_cast<std::size_t>(v)] && !in[static_cast<std::size_t>(nb.id)]) continue;
        seen[static_cast<std::size_t>(nb.id)] = 1;
        sol.tree.parent[static_cast<std::size_t>(nb.id)] = v;
        queue.push_back(nb.id);
      }
    }
    extend_plan_to(sol.scheme.raw[static_cast<std::size_t>(root)], root, bs, inst, CostModel::WL);
  }

  auto in_subtree_of = [&](NodeId x, NodeId top) {
    for (NodeId v = x; v != bs && v != kNoNode; v = sol.tree.parent[static_cast<std::size_t>(v)])
      if (v == top) return true;
    return false;
  };
  for (NodeId u : net.sensors()) {
    if (in[static_cast<std::size_t>(u)]) continue;
    NodeId best = sol.tree.parent[static_cast<std::size_t>(u)];
    for (const Neighbor& nb : net.neighbors(u)) {
      if (nb.id == bs || !in[static_cast<std::size_t>(nb.id)] || nb.id == best) continue;
      double c = inst.hc(u, nb.id), cb = inst.hc(u, best);
      if ((c < cb || (c == cb && nb.id < best)) && !in_subtree_of(nb.id, u)) best = nb.id;
    }
    sol.tree.parent[static_cast<std::size_t>(u)] = best;
  }

  for (NodeId v : net.sensors()) {
    NodeId p = sol.tree.parent[static_cast<std::size_t>(v)];
    if (p == bs) continue;
    // a non-member always hears its member parent; a member child is heard by
    // its non-member parent
    sol.scheme.site[static_cast<std::size_t>(v)] = in[static_cast<std::size_t>(p)] ? v : p;
  }
  for (auto& p : sol.scheme.raw) p.normalize();
  return sol;
}

}  // namespace comprestree
