#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "comprestree/algorithms/arborescence.hpp"
#include "comprestree/ctree.hpp"

namespace comprestree {

inline double ind_cost(const Instance& inst) {
  double c = 0.0;
  for (NodeId v : inst.net().sensors()) c += inst.h(v) * inst.d_bs(v);
  return c;
}

// Every sensor is its own root and ships X_v straight to the bs.
inline Solution ind_solution(const Instance& inst) {
  const Network& net = inst.net();
  Solution s;
  s.tree.parent.assign(net.size(), kNoNode);
  s.scheme = MovementScheme::empty(net.size(), CostModel::Unicast);
  for (NodeId v : net.sensors()) {
    s.tree.parent[static_cast<std::size_t>(v)] = net.bs();
    s.scheme.raw[static_cast<std::size_t>(v)].unicast = {net.bs()};
  }
  return s;
}

// Sensors by distance to the bs (ties by id), each charged its entropy given
// all closer ones.
inline double dsc_lower_bound(const Instance& inst) {
  std::vector<NodeId> order = inst.net().sensors();
  std::stable_sort(order.begin(), order.end(), [&](NodeId a, NodeId b) { return inst.d_bs(a) < inst.d_bs(b); });
  double total = 0.0;
  for (std::size_t k = 0; k < order.size(); ++k) {
    std::span<const NodeId> before(order.data(), k);
    total += inst.d_bs(order[k]) * inst.model().conditional_on_set(order[k], before);
  }
  return total;
}

struct ClusterEval {
  double cost = kInf;
  NodeId head = kNoNode;
  std::vector<NodeId> members;                    // sorted
  std::vector<std::pair<NodeId, NodeId>> arcs;    // (parent, child) inside the cluster
};

// Members ship raw values to the head over shortest paths; the head encodes
// along a minimum conditional-entropy arborescence rooted at itself and sends
// everything to the bs.
inline ClusterEval cluster_cost(const Instance& inst, std::vector<NodeId> members) {
  std::sort(members.begin(), members.end());
  ClusterEval best;
  best.members = members;
  const std::size_t k = members.size();
  if (k == 0) return best;

  double min_in_sum = 0.0;
  std::vector<double> min_in(k, 0.0);
  if (k > 1) {
    for (std::size_t c = 0; c < k; ++c) {
      double m = kInf;
      for (std::size_t p = 0; p < k; ++p)
        if (p != c) m = std::min(m, inst.hc(members[c], members[p]));
      min_in[c] = m;
      min_in_sum += m;
    }
  }
  std::vector<std::pair<double, std::size_t>> order;
  for (std::size_t q = 0; q < k; ++q) {
    double gather = 0.0;
    for (NodeId v : members) gather += inst.h(v) * inst.d(v, members[q]);
    double lb = gather + inst.d_bs(members[q]) * (inst.h(members[q]) + min_in_sum - min_in[q]);
    order.emplace_back(lb, q);
  }
  std::sort(order.begin(), order.end());
  for (const auto& [lb, q] : order) {
    if (lb >= best.cost) break;
    const NodeId head = members[q];
    double gather = 0.0;
    for (NodeId v : members) gather += inst.h(v) * inst.d(v, head);
    std::vector<Arc> arcs;
    for (std::size_t p = 0; p < k; ++p)
      for (std::size_t c = 0; c < k; ++c)
        if (p != c && c != q) arcs.push_back({static_cast<int>(p), static_cast<int>(c), inst.hc(members[c], members[p])});
    double joint = inst.h(head);
    std::vector<std::pair<NodeId, NodeId>> chosen;
    if (k > 1) {
      auto arb = min_arborescence(static_cast<int>(k), static_cast<int>(q), arcs);
      joint += arb.weight;
      for (std::size_t c = 0; c < k; ++c)
        if (c != q) chosen.emplace_back(members[static_cast<std::size_t>(arb.parent[c])], members[c]);
    }
    double cost = gather + inst.d_bs(head) * joint;
    if (cost < best.cost) {
      best.cost = cost;
      best.head = head;
      best.arcs = std::move(chosen);
    }
  }
  return best;
}

struct ClusterResult {
  std::vector<ClusterEval> clusters;
  Solution solution;
};

inline Solution cluster_solution(const Instance& inst, const std::vector<ClusterEval>& clusters) {
  const Network& net = inst.net();
  const NodeId bs = net.bs();
  Solution s;
  s.tree.parent.assign(net.size(), kNoNode);
  s.scheme = MovementScheme::empty(net.size(), CostModel::Unicast);
  for (const ClusterEval& c : clusters) {
    s.tree.parent[static_cast<std::size_t>(c.head)] = bs;
    s.scheme.raw[static_cast<std::size_t>(c.head)].unicast = {bs};
    for (NodeId v : c.members)
      if (v != c.head) s.scheme.raw[static_cast<std::size_t>(v)].unicast = {c.head};
    for (const auto& [p, ch] : c.arcs) {
      s.tree.parent[static_cast<std::size_t>(ch)] = p;
      s.scheme.site[static_cast<std::size_t>(ch)] = c.head;
    }
  }
  return s;
}

inline ClusterResult cluster_evaluate(const Instance& inst, const std::vector<std::vector<NodeId>>& groups) {
  ClusterResult r;
  for (const auto& g : groups) r.clusters.push_back(cluster_cost(inst, g));
  r.solution = cluster_solution(inst, r.clusters);
  return r;
}

// Starts from singletons and keeps merging the pair of network-adjacent
// clusters with the largest cost decrease (ties: smallest member ids).
inline ClusterResult cluster_greedy(const Instance& inst) {
  const Network& net = inst.net();
  const NodeId bs = net.bs();
  std::vector<ClusterEval> cl;
  std::vector<int> owner(net.size(), -1);
  for (NodeId v : net.sensors()) {
    owner[static_cast<std::size_t>(v)] = static_cast<int>(cl.size());
    cl.push_back(cluster_cost(inst, {v}));
  }
  std::vector<char> alive(cl.size(), 1);
  std::map<std::pair<int, int>, ClusterEval> merged;  // cached unions of adjacent pairs

  auto key_of = [&](int c) { return cl[static_cast<std::size_t>(c)].members.front(); };
  auto neighbours_of = [&](int c) {
    std::vector<int> out;
    for (NodeId v : cl[static_cast<std::size_t>(c)].members)
      for (const Neighbor& nb : net.neighbors(v)) {
        if (nb.id == bs) continue;
        int o = owner[static_cast<std::size_t>(nb.id)];
        if (o != c) out.push_back(o);
      }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  };
  auto cache_pair = [&](int a, int b) {
    if (a > b) std::swap(a, b);
    if (merged.count({a, b})) return;
    std::vector<NodeId> u = cl[static_cast<std::size_t>(a)].members;
    const auto& mb = cl[static_cast<std::size_t>(b)].members;
    u.insert(u.end(), mb.begin(), mb.end());
    merged.emplace(std::pair{a, b}, cluster_cost(inst, u));
  };
  for (int c = 0; c < static_cast<int>(cl.size()); ++c)
    for (int o : neighbours_of(c)) cache_pair(c, o);

  for (;;) {
    const std::pair<int, int>* best = nullptr;
    double best_gain = 1e-12;
    std::pair<NodeId, NodeId> best_key{kNoNode, kNoNode};
    for (const auto& [pr, ev] : merged) {
      double gain = cl[static_cast<std::size_t>(pr.first)].cost + cl[static_cast<std::size_t>(pr.second)].cost - ev.cost;
      std::pair<NodeId, NodeId> key = std::minmax(key_of(pr.first), key_of(pr.second));
      double tol = 1e-12 * std::max(1.0, std::abs(best_gain));
      if (gain > best_gain + tol || (best && std::abs(gain - best_gain) <= tol && key < best_key)) {
        best = &pr;
        best_gain = gain;
        best_key = key;
      }
    }
    if (!best) break;
    auto [a, b] = *best;
    cl[static_cast<std::size_t>(a)] = merged.at({a, b});
    alive[static_cast<std::size_t>(b)] = 0;
    for (NodeId v : cl[static_cast<std::size_t>(a)].members) owner[static_cast<std::size_t>(v)] = a;
    for (auto it = merged.begin(); it != merged.end();) {
      if (it->first.first == a || it->first.second == a || it->first.first == b || it->first.second == b)
        it = merged.erase(it);
      else
        ++it;
    }
    for (int o : neighbours_of(a)) cache_pair(a, o);
  }

  ClusterResult r;
  for (std::size_t c = 0; c < cl.size(); ++c)
    if (alive[c]) r.clusters.push_back(cl[c]);
  r.solution = cluster_solution(inst, r.clusters);
  return r;
}

}  // namespace comprestree
