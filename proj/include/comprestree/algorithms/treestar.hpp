#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <utility>
#include <vector>

#include "comprestree/algorithms/local_improve.hpp"
#include "comprestree/algorithms/subsets.hpp"
#include "comprestree/ctree.hpp"

namespace comprestree {

// Disjoint components over the sensors plus the raw movement recorded so far.
class Forest {
 public:
  explicit Forest(const Network& net) : bs_(net.bs()), dsu_(net.size()), raw_(net.size()) {
    std::iota(dsu_.begin(), dsu_.end(), NodeId{0});
    components_ = net.sensor_count();
    counts_.push_back(components_);
  }

  // Arbitrary partition, e.g. to probe the treestar search on a given state.
  Forest(const Network& net, const std::vector<int>& labels) : Forest(net) {
    if (labels.size() != net.size()) throw Error(ErrorCode::InvalidArgument, "one label per node expected");
    for (NodeId a : net.sensors())
      for (NodeId b : net.sensors())
        if (a < b && labels[static_cast<std::size_t>(a)] == labels[static_cast<std::size_t>(b)] && unite(a, b))
          --components_;
    counts_ = {components_};
  }

  NodeId bs() const noexcept { return bs_; }
  std::size_t components() const noexcept { return components_; }
  NodeId find(NodeId v) const {
    auto i = static_cast<std::size_t>(v);
    while (dsu_[i] != static_cast<NodeId>(i)) i = static_cast<std::size_t>(dsu_[i]);
    return static_cast<NodeId>(i);
  }
  bool same(NodeId a, NodeId b) const { return find(a) == find(b); }

  const std::vector<OrientedEdge>& edges() const noexcept { return edges_; }
  const std::vector<RawPlan>& raw() const noexcept { return raw_; }
  // component count before each merge and after the last one
  const std::vector<std::size_t>& history() const noexcept { return counts_; }
  const std::vector<std::size_t>& merged() const noexcept { return merged_; }

  // Adds the edges center -> leaf, merging k + 1 components.
  void apply(NodeId center, const std::vector<NodeId>& leaves, const RawPlan& plan) {
    const std::size_t before = components_;
    for (NodeId v : leaves) {
      if (same(center, v)) throw Error(ErrorCode::InvalidArgument, "leaf inside the center's component");
      edges_.push_back({center, v});
      unite(center, v);
      --components_;
    }
    raw_[static_cast<std::size_t>(center)].merge(plan);
    const std::size_t m = leaves.size() + 1;
    if (components_ != before - m + 1) throw Error(ErrorCode::InvalidArgument, "component bookkeeping drifted");
    merged_.push_back(m);
    counts_.push_back(components_);
  }

 private:
  bool unite(NodeId a, NodeId b) {
    NodeId ra = find(a), rb = find(b);
    if (ra == rb) return false;
    if (rb < ra) std::swap(ra, rb);
    dsu_[static_cast<std::size_t>(rb)] = ra;
    return true;
  }

  NodeId bs_;
  std::vector<NodeId> dsu_;
  std::size_t components_ = 0;
  std::vector<OrientedEdge> edges_;
  std::vector<RawPlan> raw_;
  std::vector<std::size_t> counts_;
  std::vector<std::size_t> merged_;
};

struct TreeStar {
  NodeId center = kNoNode;
  std::vector<NodeId> leaves;  // one node per merged component, cheapest first
  RawPlan plan;                // how X_center reaches the leaves
  double ic_part = 0.0;
  double nc_part = 0.0;

  double cost() const noexcept { return ic_part + nc_part; }
  std::size_t k() const noexcept { return leaves.size(); }
  double ceff() const noexcept { return cost() / static_cast<double>(k() + 1); }
};

namespace detail {

inline bool ceff_less(double a, double b) { return a < b - 1e-12 * std::max(1.0, std::abs(b)); }
inline bool ceff_equal(double a, double b) { return !ceff_less(a, b) && !ceff_less(b, a); }

// Strict preference: lower ceff, then lower cost, then lower center id.
inline bool star_better(double ceff, double cost, NodeId center, const TreeStar& incumbent) {
  if (incumbent.center == kNoNode) return true;
  if (ceff_less(ceff, incumbent.ceff())) return true;
  if (!ceff_equal(ceff, incumbent.ceff())) return false;
  if (ceff_less(cost, incumbent.cost())) return true;
  if (!ceff_equal(cost, incumbent.cost())) return false;
  return center < incumbent.center;
}

// Given (h, leaf) per foreign component, the prefix of the ascending order
// minimizing (fixed + prefix sum) / (k + 1). Returns k (0 if list empty).
inline std::size_t best_prefix(std::vector<std::pair<double, NodeId>>& cand, double fixed, double* cost_out) {
  std::sort(cand.begin(), cand.end());
  std::size_t best_k = 0;
  double best_c = 0.0, sum = fixed;
  for (std::size_t k = 1; k <= cand.size(); ++k) {
    sum += cand[k - 1].first;
    double ce = sum / static_cast<double>(k + 1);
    if (best_k == 0 || ceff_less(ce, best_c / static_cast<double>(best_k + 1))) {
      best_k = k;
      best_c = sum;
    }
  }
  if (cost_out) *cost_out = best_c;
  return best_k;
}

// Cheapest leaf per foreign component among `reach`, keyed by component.
inline std::vector<std::pair<double, NodeId>> leaf_candidates(const Forest& f, const Instance& inst, NodeId r,
                                                              const std::vector<NodeId>& reach) {
  const NodeId bs = inst.bs();
  const NodeId own = f.find(r);
  std::vector<std::pair<double, NodeId>> per_comp(inst.net().size(), {kInf, kNoNode});
  for (NodeId v : reach) {
    if (v == bs || v == r) continue;
    NodeId c = f.find(v);
    if (c == own) continue;
    double h = inst.hc(v, r) * inst.d_bs(v);
    auto& slot = per_comp[static_cast<std::size_t>(c)];
    if (h < slot.first || (h == slot.first && v < slot.second)) slot = {h, v};
  }
  std::vector<std::pair<double, NodeId>> out;
  for (const auto& s : per_comp)
    if (s.second != kNoNode) out.push_back(s);
  return out;
}

inline std::size_t foreign_components(const Forest& f, const Instance& inst, NodeId r) {
  std::vector<char> seen(inst.net().size(), 0);
  std::size_t k = 0;
  for (NodeId v : inst.net().sensors()) {
    NodeId c = f.find(v);
    if (c != f.find(r) && !seen[static_cast<std::size_t>(c)]) {
      seen[static_cast<std::size_t>(c)] = 1;
      ++k;
    }
  }
  return k;
}

inline void require_small(const Network& net) {
  if (net.size() > 20) throw Error(ErrorCode::TooLarge, "exact treestar search is limited to 20 nodes");
}

inline std::vector<NodeId> closed_neighborhood(const Network& net, const std::vector<NodeId>& set) {
  std::vector<NodeId> out = set;
  for (NodeId b : set)
    for (const Neighbor& nb : net.neighbors(b)) out.push_back(nb.id);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Minimum spanning tree of the subgraph induced by `set` (Prim); kInf if disconnected.
inline double induced_mst(const Network& net, const std::vector<NodeId>& set,
                          std::vector<std::pair<NodeId, NodeId>>* edges_out = nullptr) {
  const std::size_t k = set.size();
  std::vector<double> key(k, kInf);
  std::vector<std::size_t> from(k, 0);
  std::vector<char> done(k, 0);
  key[0] = 0.0;
  double total = 0.0;
  for (std::size_t it = 0; it < k; ++it) {
    std::size_t best = k;
    for (std::size_t i = 0; i < k; ++i)
      if (!done[i] && (best == k || key[i] < key[best])) best = i;
    if (key[best] == kInf) return kInf;
    done[best] = 1;
    total += key[best];
    if (it > 0 && edges_out) edges_out->emplace_back(set[from[best]], set[best]);
    for (std::size_t i = 0; i < k; ++i) {
      if (done[i]) continue;
      double w = net.edge_weight(set[best], set[i]);
      if (w < key[i]) {
        key[i] = w;
        from[i] = best;
      }
    }
  }
  return total;
}

}  // namespace detail

// WL-SG: the center broadcasts once; each leaf is a neighbour in a foreign
// component. Exact over all centers.
inline TreeStar mce_treestar_wlsg(const Forest& f, const Instance& inst) {
  const Network& net = inst.net();
  TreeStar best;
  for (NodeId r : net.sensors()) {
    std::vector<NodeId> reach;
    for (const Neighbor& nb : net.neighbors(r)) reach.push_back(nb.id);
    auto cand = detail::leaf_candidates(f, inst, r, reach);
    if (cand.empty()) continue;
    const double fixed = inst.h(r) * net.tx_weight(r);
    double cost = 0.0;
    std::size_t k = detail::best_prefix(cand, fixed, &cost);
    if (detail::star_better(cost / static_cast<double>(k + 1), cost, r, best)) {
      best.center = r;
      best.leaves.clear();
      for (std::size_t i = 0; i < k; ++i) best.leaves.push_back(cand[i].second);
      best.plan = RawPlan{{r}, {}, {}};
      best.ic_part = fixed;
      best.nc_part = cost - fixed;
    }
  }
  if (best.center == kNoNode) throw Error(ErrorCode::NoCandidate, "no center has a neighbour in another component");
  return best;
}

// WL-NS: the center's value is relayed by a connected broadcaster set B; the
// leaves are any nodes hearing B.
inline TreeStar mce_treestar_wlns(const Forest& f, const Instance& inst) {
  const Network& net = inst.net();
  detail::require_small(net);
  TreeStar best;
  for (NodeId r : net.sensors()) {
    const double hr = inst.h(r);
    const auto foreign = static_cast<double>(detail::foreign_components(f, inst, r));
    if (foreign == 0) continue;
    for_each_connected_subset(net, r, [&](const std::vector<NodeId>& b) {
      double wb = 0.0;
      for (NodeId v : b) wb += net.tx_weight(v);
      const double fixed = hr * wb;
      if (best.center != kNoNode && detail::ceff_less(best.ceff(), fixed / (foreign + 1.0))) return false;
      auto cand = detail::leaf_candidates(f, inst, r, detail::closed_neighborhood(net, b));
      if (cand.empty()) return true;
      double cost = 0.0;
      std::size_t k = detail::best_prefix(cand, fixed, &cost);
      if (detail::star_better(cost / static_cast<double>(k + 1), cost, r, best)) {
        best.center = r;
        best.leaves.clear();
        for (std::size_t i = 0; i < k; ++i) best.leaves.push_back(cand[i].second);
        best.plan = RawPlan{b, {}, {}};
        best.plan.normalize();
        best.ic_part = fixed;
        best.nc_part = cost - fixed;
      }
      return true;
    });
  }
  if (best.center == kNoNode) throw Error(ErrorCode::NoCandidate, "no treestar candidate");
  return best;
}

// Multicast-NS: the center's value travels along a tree spanning a connected
// set U (cost: MST of U); the leaves are members of U.
inline TreeStar mce_treestar_multicast(const Forest& f, const Instance& inst) {
  const Network& net = inst.net();
  detail::require_small(net);
  TreeStar best;
  for (NodeId r : net.sensors()) {
    const double hr = inst.h(r);
    if (detail::foreign_components(f, inst, r) == 0) continue;
    for_each_connected_subset(net, r, [&](const std::vector<NodeId>& u) {
      auto cand = detail::leaf_candidates(f, inst, r, u);
      if (cand.empty()) return true;
      std::vector<NodeId> set = u;
      std::sort(set.begin(), set.end());
      std::vector<std::pair<NodeId, NodeId>> links;
      const double fixed = hr * detail::induced_mst(net, set, &links);
      double cost = 0.0;
      std::size_t k = detail::best_prefix(cand, fixed, &cost);
      if (detail::star_better(cost / static_cast<double>(k + 1), cost, r, best)) {
        best.center = r;
        best.leaves.clear();
        for (std::size_t i = 0; i < k; ++i) best.leaves.push_back(cand[i].second);
        best.plan = RawPlan{{}, links, {}};
        best.plan.normalize();
        best.ic_part = fixed;
        best.nc_part = cost - fixed;
      }
      return true;
    });
  }
  if (best.center == kNoNode) throw Error(ErrorCode::NoCandidate, "no treestar candidate");
  return best;
}

// Cost of one WL-NS treestar with fixed leaves: cheapest connected broadcaster
// set containing the center and dominating the leaves.
inline TreeStar treestar_cost_wlns(const Instance& inst, NodeId center, const std::vector<NodeId>& leaves) {
  const Network& net = inst.net();
  detail::require_small(net);
  TreeStar ts;
  ts.center = center;
  ts.leaves = leaves;
  double best = kInf;
  for_each_connected_subset(net, center, [&](const std::vector<NodeId>& b) {
    double wb = 0.0;
    for (NodeId v : b) wb += net.tx_weight(v);
    if (wb >= best) return false;
    auto nb = detail::closed_neighborhood(net, b);
    for (NodeId v : leaves)
      if (!std::binary_search(nb.begin(), nb.end(), v)) return true;
    best = wb;
    ts.plan = RawPlan{b, {}, {}};
    return true;
  });
  if (best == kInf) throw Error(ErrorCode::InvalidArgument, "leaves unreachable");
  ts.plan.normalize();
  ts.ic_part = inst.h(center) * best;
  for (NodeId v : leaves) ts.nc_part += inst.hc(v, center) * inst.d_bs(v);
  return ts;
}

inline TreeStar treestar_cost_multicast(const Instance& inst, NodeId center, const std::vector<NodeId>& leaves) {
  const Network& net = inst.net();
  detail::require_small(net);
  TreeStar ts;
  ts.center = center;
  ts.leaves = leaves;
  double best = kInf;
  for_each_connected_subset(net, center, [&](const std::vector<NodeId>& u) {
    std::vector<NodeId> set = u;
    std::sort(set.begin(), set.end());
    for (NodeId v : leaves)
      if (!std::binary_search(set.begin(), set.end(), v)) return true;
    std::vector<std::pair<NodeId, NodeId>> links;
    double w = detail::induced_mst(net, set, &links);
    if (w < best) {
      best = w;
      ts.plan = RawPlan{{}, links, {}};
    }
    return true;
  });
  if (best == kInf) throw Error(ErrorCode::InvalidArgument, "leaves unreachable");
  ts.plan.normalize();
  ts.ic_part = inst.h(center) * best;
  for (NodeId v : leaves) ts.nc_part += inst.hc(v, center) * inst.d_bs(v);
  return ts;
}

// Cheapest WL-NS treestar at `center` for each leaf count; out[k] for
// k = 0..#foreign components, out[0] unused (kInf).
inline std::vector<double> wlns_best_cost_per_k(const Forest& f, const Instance& inst, NodeId center) {
  const Network& net = inst.net();
  detail::require_small(net);
  std::vector<double> out(detail::foreign_components(f, inst, center) + 1, kInf);
  for_each_connected_subset(net, center, [&](const std::vector<NodeId>& b) {
    double wb = 0.0;
    for (NodeId v : b) wb += net.tx_weight(v);
    auto cand = detail::leaf_candidates(f, inst, center, detail::closed_neighborhood(net, b));
    std::sort(cand.begin(), cand.end());
    double sum = inst.h(center) * wb;
    for (std::size_t k = 1; k <= cand.size(); ++k) {
      sum += cand[k - 1].first;
      out[k] = std::min(out[k], sum);
    }
    return true;
  });
  return out;
}

// Best multicast cost-effectiveness at a fixed center (kInf without candidates).
inline double multicast_best_ceff(const Forest& f, const Instance& inst, NodeId center) {
  const Network& net = inst.net();
  detail::require_small(net);
  double best = kInf;
  for_each_connected_subset(net, center, [&](const std::vector<NodeId>& u) {
    auto cand = detail::leaf_candidates(f, inst, center, u);
    if (cand.empty()) return true;
    std::vector<NodeId> set = u;
    std::sort(set.begin(), set.end());
    double cost = 0.0;
    std::size_t k = detail::best_prefix(cand, inst.h(center) * detail::induced_mst(net, set), &cost);
    best = std::min(best, cost / static_cast<double>(k + 1));
    return true;
  });
  return best;
}

enum class TreeStarModel { WLSG, WLNS, MulticastNS };

inline CostModel cost_model_of(TreeStarModel m) {
  return m == TreeStarModel::MulticastNS ? CostModel::Multicast : CostModel::WL;
}

struct GreedyOptions {
  bool improve = true;
};

struct GreedyResult {
  ExtendedCompressionTree extended;
  Solution before_improve;
  Solution solution;
  std::vector<TreeStar> trace;
  std::vector<std::size_t> component_counts;
};

inline GreedyResult greedy_treestar(const Instance& inst, TreeStarModel model, GreedyOptions opts = {}) {
  const Network& net = inst.net();
  std::function<TreeStar(const Forest&, const Instance&)> mce;
  switch (model) {
    case TreeStarModel::WLSG: mce = mce_treestar_wlsg; break;
    case TreeStarModel::WLNS: mce = mce_treestar_wlns; break;
    case TreeStarModel::MulticastNS: mce = mce_treestar_multicast; break;
  }
  if (model != TreeStarModel::WLSG) detail::require_small(net);

  Forest forest(net);
  GreedyResult out;
  while (forest.components() > 1) {
    TreeStar ts;
    try {
      ts = mce(forest, inst);
    } catch (const Error& e) {
      // components separated by the bs cannot be joined; each gets its own root
      if (e.code() == ErrorCode::NoCandidate) break;
      throw;
    }
    forest.apply(ts.center, ts.leaves, ts.plan);
    out.trace.push_back(std::move(ts));
  }
  out.component_counts = forest.history();
  out.extended.edges = forest.edges();
  out.extended.raw = forest.raw();
  out.before_improve = scheme_from_extended(out.extended, inst, cost_model_of(model));
  out.solution = opts.improve ? local_improve(out.before_improve, inst) : out.before_improve;
  return out;
}

}  // namespace comprestree
