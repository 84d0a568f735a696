#pragma once

#include <vector>

#include "comprestree/ctree.hpp"

namespace comprestree {

namespace detail {

// eval_cost without validation, for scoring many candidate moves.
inline double raw_total(const MovementScheme& s, const CompressionTree& t, const Instance& inst) {
  const NodeId bs = inst.bs();
  double total = 0.0;
  for (NodeId v : inst.net().sensors()) {
    const RawPlan& p = s.raw[static_cast<std::size_t>(v)];
    if (!p.empty()) total += inst.h(v) * plan_cost_per_bit(p, v, inst.net(), inst.dist());
    NodeId par = t.parent[static_cast<std::size_t>(v)];
    if (par != bs) total += inst.hc(v, par) * inst.d_bs(s.site[static_cast<std::size_t>(v)]);
  }
  return total;
}

inline bool in_subtree(const CompressionTree& t, NodeId x, NodeId top, NodeId bs) {
  for (NodeId v = x; v != bs && v != kNoNode; v = t.parent[static_cast<std::size_t>(v)])
    if (v == top) return true;
  return false;
}

}  // namespace detail

// Hill climbing over "deliver X_v to neighbours that would rather hang off v".
// Under WL one move broadcasts X_v and re-parents every neighbour whose
// conditional gets cheaper. Single-neighbour moves are scored on total cost,
// so a move may pay off only through the raw plans it lets us drop (moving a
// child's site onto the child, say).
inline Solution local_improve(const Solution& in, const Instance& inst) {
  const Network& net = inst.net();
  const NodeId bs = net.bs();
  const CostModel model = in.scheme.cost_model;
  Solution cur = in;
  double cur_cost = detail::raw_total(cur.scheme, cur.tree, inst);

  auto current_cond = [&](const Solution& s, NodeId u) {
    NodeId p = s.tree.parent[static_cast<std::size_t>(u)];
    if (p == bs) return inst.h(u) * inst.d_bs(u);
    return inst.hc(u, p) * inst.d_bs(s.scheme.site[static_cast<std::size_t>(u)]);
  };
  auto wants = [&](const Solution& s, NodeId v, NodeId u) {
    return u != bs && s.tree.parent[static_cast<std::size_t>(u)] != v &&
           inst.hc(u, v) * inst.d_bs(u) < current_cond(s, u) &&
           !detail::in_subtree(s.tree, v, u, bs);
  };
  auto admissible = [&](const Solution& s, NodeId v, NodeId u) {
    if (u == bs) return false;
    if (s.tree.parent[static_cast<std::size_t>(u)] == v) return s.scheme.site[static_cast<std::size_t>(u)] != u;
    return !detail::in_subtree(s.tree, v, u, bs);
  };

  const std::size_t cap = net.size() * net.size();
  for (std::size_t moves = 0; moves < cap; ++moves) {
    Solution best;
    double best_cost = cur_cost - 1e-12;
    bool found = false;
    auto consider = [&](NodeId v, const std::vector<NodeId>& targets) {
      if (targets.empty()) return;
      Solution cand = cur;
      for (NodeId u : targets) {
        extend_plan_to(cand.scheme.raw[static_cast<std::size_t>(v)], v, u, inst, model);
        cand.tree.parent[static_cast<std::size_t>(u)] = v;
        cand.scheme.site[static_cast<std::size_t>(u)] = u;
      }
      prune_unused_plans(cand.scheme, cand.tree, bs);
      double c = detail::raw_total(cand.scheme, cand.tree, inst);
      if (c < best_cost) {
        best_cost = c;
        best = std::move(cand);
        found = true;
      }
    };
    for (NodeId v : net.sensors()) {
      std::vector<NodeId> targets;
      for (const Neighbor& nb : net.neighbors(v)) {
        if (!admissible(cur, v, nb.id)) continue;
        consider(v, {nb.id});
        if (wants(cur, v, nb.id)) targets.push_back(nb.id);
      }
      if (model == CostModel::WL && targets.size() > 1) consider(v, targets);
    }
    if (!found) break;
    if (!validate(best.scheme, best.tree, inst).ok()) break;
    cur = std::move(best);
    cur_cost = best_cost;
  }
  return cur;
}

}  // namespace comprestree
