#pragma once

#include <algorithm>
#include <queue>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "comprestree/instance.hpp"

namespace comprestree {

enum class CostModel { WL, Multicast, Unicast };

inline const char* to_string(CostModel m) {
  switch (m) {
    case CostModel::WL: return "wl";
    case CostModel::Multicast: return "multicast";
    case CostModel::Unicast: return "unicast";
  }
  return "?";
}

// Directed spanning forest over the sensors. parent[v] is another sensor or
// the base station (v is then a root sending its raw value to the bs);
// parent[bs] is kNoNode.
struct CompressionTree {
  std::vector<NodeId> parent;

  std::vector<NodeId> roots(NodeId bs) const {
    std::vector<NodeId> out;
    for (NodeId v = 0; v < static_cast<NodeId>(parent.size()); ++v)
      if (v != bs && parent[static_cast<std::size_t>(v)] == bs) out.push_back(v);
    return out;
  }
  NodeId parent_of(NodeId v) const { return parent.at(static_cast<std::size_t>(v)); }
};

// How one raw value leaves its source. Entries are sets; order is irrelevant.
//  broadcasters: nodes that locally broadcast the value (source first hop of a relay chain)
//  links:        network edges of a multicast tree
//  unicast:      point-to-point recipients reached over shortest paths
struct RawPlan {
  std::vector<NodeId> broadcasters;
  std::vector<std::pair<NodeId, NodeId>> links;
  std::vector<NodeId> unicast;

  bool empty() const noexcept { return broadcasters.empty() && links.empty() && unicast.empty(); }

  void normalize() {
    auto uniq = [](auto& v) {
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
    };
    for (auto& l : links)
      if (l.first > l.second) std::swap(l.first, l.second);
    uniq(broadcasters);
    uniq(links);
    uniq(unicast);
  }

  void merge(const RawPlan& other) {
    broadcasters.insert(broadcasters.end(), other.broadcasters.begin(), other.broadcasters.end());
    links.insert(links.end(), other.links.begin(), other.links.end());
    unicast.insert(unicast.end(), other.unicast.begin(), other.unicast.end());
    normalize();
  }
};

// Raw-delivery plans per node plus, per tree edge (keyed by the child), the
// node where X_child | X_parent is computed before being routed to the bs.
struct MovementScheme {
  CostModel cost_model = CostModel::WL;
  std::vector<RawPlan> raw;
  std::vector<NodeId> site;

  static MovementScheme empty(std::size_t n, CostModel m) {
    MovementScheme s;
    s.cost_model = m;
    s.raw.assign(n, {});
    s.site.assign(n, kNoNode);
    return s;
  }
};

// Raw data of `from` travels to `to`; the conditional of the edge is computed at `to`.
struct OrientedEdge {
  NodeId from = kNoNode;
  NodeId to = kNoNode;
  friend bool operator==(const OrientedEdge&, const OrientedEdge&) = default;
};

// Tree edges with raw-movement orientation, before a root is fixed, plus the
// raw plans the orientation relies on.
struct ExtendedCompressionTree {
  std::vector<OrientedEdge> edges;
  std::vector<RawPlan> raw;
};

struct CostBreakdown {
  double total = 0.0;
  double nc = 0.0;
  double ic = 0.0;
  CostModel cost_model = CostModel::WL;
};

struct CostOptions {
  double rx_cost = 0.0;  // energy per received bit, relative to transmit weights
};

enum class ViolationKind { OrphanEdge, UndeliveredOperand, UndecodableNode, InvalidPlan };

inline const char* to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::OrphanEdge: return "OrphanEdge";
    case ViolationKind::UndeliveredOperand: return "UndeliveredOperand";
    case ViolationKind::UndecodableNode: return "UndecodableNode";
    case ViolationKind::InvalidPlan: return "InvalidPlan";
  }
  return "?";
}

struct Violation {
  ViolationKind kind;
  NodeId node;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const noexcept { return violations.empty(); }
  bool has(ViolationKind k) const {
    return std::any_of(violations.begin(), violations.end(), [k](const Violation& v) { return v.kind == k; });
  }
  std::string summary() const {
    std::string s;
    for (const auto& v : violations) {
      if (!s.empty()) s += "; ";
      s += std::string(to_string(v.kind)) + "@" + std::to_string(v.node) + " " + v.detail;
    }
    return s;
  }
};

namespace detail {

inline bool plan_allowed(const RawPlan& p, CostModel m) {
  switch (m) {
    case CostModel::WL: return p.links.empty();
    case CostModel::Multicast: return p.broadcasters.empty();
    case CostModel::Unicast: return p.broadcasters.empty() && p.links.empty();
  }
  return false;
}

// Checks relay structure; returns an error message or empty string.
inline std::string plan_structure_error(const RawPlan& p, NodeId source, const Network& net) {
  auto connected_from = [&](const std::vector<NodeId>& members,
                            const std::vector<std::pair<NodeId, NodeId>>& use_edges) -> bool {
    std::set<NodeId> seen{source};
    std::vector<NodeId> stack{source};
    while (!stack.empty()) {
      NodeId v = stack.back();
      stack.pop_back();
      if (use_edges.empty()) {
        for (const Neighbor& nb : net.neighbors(v))
          if (std::binary_search(members.begin(), members.end(), nb.id) && seen.insert(nb.id).second)
            stack.push_back(nb.id);
      } else {
        for (const auto& [a, b] : use_edges) {
          NodeId o = a == v ? b : (b == v ? a : kNoNode);
          if (o != kNoNode && seen.insert(o).second) stack.push_back(o);
        }
      }
    }
    return std::all_of(members.begin(), members.end(), [&](NodeId m) { return seen.count(m) > 0; });
  };
  for (NodeId b : p.broadcasters)
    if (!net.contains(b)) return "unknown broadcaster";
  for (NodeId t : p.unicast)
    if (!net.contains(t)) return "unknown unicast target";
  if (!p.broadcasters.empty()) {
    if (!std::binary_search(p.broadcasters.begin(), p.broadcasters.end(), source))
      return "broadcast chain does not start at the source";
    if (!connected_from(p.broadcasters, {})) return "broadcast relays are not connected to the source";
  }
  if (!p.links.empty()) {
    std::vector<NodeId> members;
    for (const auto& [a, b] : p.links) {
      if (!net.contains(a) || !net.contains(b) || !net.adjacent(a, b)) return "multicast link is not a network edge";
      members.push_back(a);
      members.push_back(b);
    }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (!std::binary_search(members.begin(), members.end(), source)) return "multicast tree misses the source";
    if (!connected_from(members, p.links)) return "multicast links are not connected";
  }
  return {};
}

}  // namespace detail

// Nodes holding X_source after the plan executes (the source included).
inline std::vector<NodeId> recipients(const RawPlan& plan, NodeId source, const Network& net) {
  std::vector<NodeId> out{source};
  for (NodeId b : plan.broadcasters) {
    out.push_back(b);
    for (const Neighbor& nb : net.neighbors(b)) out.push_back(nb.id);
  }
  for (const auto& [a, b] : plan.links) {
    out.push_back(a);
    out.push_back(b);
  }
  out.insert(out.end(), plan.unicast.begin(), plan.unicast.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline bool delivers(const RawPlan& plan, NodeId source, NodeId target, const Network& net) {
  if (target == source) return true;
  auto r = recipients(plan, source, net);
  return std::binary_search(r.begin(), r.end(), target);
}

// Cost per bit of executing a plan.
inline double plan_cost_per_bit(const RawPlan& plan, NodeId source, const Network& net, const DistanceTable& dist) {
  double c = 0.0;
  for (NodeId b : plan.broadcasters) c += net.tx_weight(b);
  for (const auto& [a, b] : plan.links) c += net.edge_weight(a, b);
  for (NodeId t : plan.unicast) c += dist(source, t);
  return c;
}

inline double plan_receptions(const RawPlan& plan, NodeId source, const Network& net, const DistanceTable& dist) {
  double r = 0.0;
  for (NodeId b : plan.broadcasters) r += static_cast<double>(net.degree(b));
  r += static_cast<double>(plan.links.size());
  for (NodeId t : plan.unicast) r += static_cast<double>(dist.hops(source, t));
  return r;
}

inline ValidationReport validate(const MovementScheme& scheme, const CompressionTree& tree, const Instance& inst) {
  const Network& net = inst.net();
  const std::size_t n = net.size();
  const NodeId bs = net.bs();
  ValidationReport rep;
  if (tree.parent.size() != n || scheme.raw.size() != n || scheme.site.size() != n) {
    rep.violations.push_back({ViolationKind::OrphanEdge, kNoNode, "tree/scheme size does not match network"});
    return rep;
  }

  std::vector<std::vector<NodeId>> recv(n);
  for (NodeId v = 0; v < static_cast<NodeId>(n); ++v) {
    RawPlan plan = scheme.raw[static_cast<std::size_t>(v)];
    plan.normalize();
    if (plan.empty()) continue;
    if (v == bs) {
      rep.violations.push_back({ViolationKind::InvalidPlan, v, "base station has no raw value"});
      continue;
    }
    if (!detail::plan_allowed(plan, scheme.cost_model)) {
      rep.violations.push_back({ViolationKind::InvalidPlan, v,
                                std::string("plan uses transmissions outside the ") + to_string(scheme.cost_model) +
                                    " model"});
      continue;
    }
    if (auto err = detail::plan_structure_error(plan, v, net); !err.empty()) {
      rep.violations.push_back({ViolationKind::InvalidPlan, v, err});
      continue;
    }
    recv[static_cast<std::size_t>(v)] = recipients(plan, v, net);
  }
  auto holds = [&](NodeId who, NodeId value) {
    if (who == value) return true;
    const auto& r = recv[static_cast<std::size_t>(value)];
    return std::binary_search(r.begin(), r.end(), who);
  };

  if (tree.parent[static_cast<std::size_t>(bs)] != kNoNode)
    rep.violations.push_back({ViolationKind::OrphanEdge, bs, "base station cannot have a parent"});

  std::vector<char> edge_ok(n, 0);
  for (NodeId v = 0; v < static_cast<NodeId>(n); ++v) {
    if (v == bs) continue;
    NodeId p = tree.parent[static_cast<std::size_t>(v)];
    if (!net.contains(p) || p == v) {
      rep.violations.push_back({ViolationKind::OrphanEdge, v, "missing or invalid parent"});
      continue;
    }
    if (p == bs) {
      if (!holds(bs, v))
        rep.violations.push_back({ViolationKind::UndeliveredOperand, v, "root value never reaches the base station"});
      else
        edge_ok[static_cast<std::size_t>(v)] = 1;
      continue;
    }
    NodeId s = scheme.site[static_cast<std::size_t>(v)];
    if (!net.contains(s)) {
      rep.violations.push_back({ViolationKind::OrphanEdge, v, "tree edge has no compression site"});
      continue;
    }
    bool ok = true;
    if (!holds(s, p)) {
      rep.violations.push_back({ViolationKind::UndeliveredOperand, v,
                                "site " + std::to_string(s) + " lacks X" + std::to_string(p)});
      ok = false;
    }
    if (!holds(s, v)) {
      rep.violations.push_back({ViolationKind::UndeliveredOperand, v,
                                "site " + std::to_string(s) + " lacks X" + std::to_string(v)});
      ok = false;
    }
    edge_ok[static_cast<std::size_t>(v)] = ok ? 1 : 0;
  }

  // What the bs can reconstruct: raw deliveries, then conditionals whose
  // conditioning value is already known.
  std::vector<char> known(n, 0);
  for (NodeId v = 0; v < static_cast<NodeId>(n); ++v)
    if (v != bs && holds(bs, v)) known[static_cast<std::size_t>(v)] = 1;
  for (bool changed = true; changed;) {
    changed = false;
    for (NodeId v = 0; v < static_cast<NodeId>(n); ++v) {
      if (v == bs || known[static_cast<std::size_t>(v)] || !edge_ok[static_cast<std::size_t>(v)]) continue;
      NodeId p = tree.parent[static_cast<std::size_t>(v)];
      if (p != bs && net.contains(p) && known[static_cast<std::size_t>(p)]) {
        known[static_cast<std::size_t>(v)] = 1;
        changed = true;
      }
    }
  }
  for (NodeId v = 0; v < static_cast<NodeId>(n); ++v)
    if (v != bs && !known[static_cast<std::size_t>(v)])
      rep.violations.push_back({ViolationKind::UndecodableNode, v, "base station cannot reconstruct X" + std::to_string(v)});
  return rep;
}

inline bool is_restricted(const MovementScheme& scheme, const CompressionTree& tree, NodeId bs) {
  for (NodeId v = 0; v < static_cast<NodeId>(tree.parent.size()); ++v) {
    NodeId p = tree.parent[static_cast<std::size_t>(v)];
    if (v == bs || p == bs) continue;
    NodeId s = scheme.site[static_cast<std::size_t>(v)];
    if (s != v && s != p) return false;
  }
  return true;
}

// H(X_r) d(r,bs) over roots plus H(X_i | X_p(i)) d(i,bs) over the rest.
inline double nc_cost(const CompressionTree& tree, const Instance& inst) {
  const NodeId bs = inst.bs();
  double nc = 0.0;
  for (NodeId v : inst.net().sensors()) {
    NodeId p = tree.parent_of(v);
    nc += (p == bs ? inst.h(v) : inst.hc(v, p)) * inst.d_bs(v);
  }
  return nc;
}

inline CostBreakdown eval_cost(const MovementScheme& scheme, const CompressionTree& tree, const Instance& inst,
                               CostOptions opts = {}) {
  if (auto rep = validate(scheme, tree, inst); !rep.ok()) throw Error(ErrorCode::InvalidScheme, rep.summary());
  const Network& net = inst.net();
  const DistanceTable& dist = inst.dist();
  const NodeId bs = net.bs();
  double total = 0.0;
  for (NodeId v : net.sensors()) {
    RawPlan plan = scheme.raw[static_cast<std::size_t>(v)];
    plan.normalize();
    if (plan.empty()) continue;
    total += inst.h(v) * plan_cost_per_bit(plan, v, net, dist);
    if (opts.rx_cost != 0.0) total += opts.rx_cost * inst.h(v) * plan_receptions(plan, v, net, dist);
  }
  for (NodeId v : net.sensors()) {
    NodeId p = tree.parent_of(v);
    if (p == bs) continue;
    NodeId s = scheme.site[static_cast<std::size_t>(v)];
    double bits = inst.hc(v, p);
    total += bits * dist(s, bs);
    if (opts.rx_cost != 0.0) total += opts.rx_cost * bits * static_cast<double>(dist.hops(s, bs));
  }
  CostBreakdown out;
  out.cost_model = scheme.cost_model;
  out.total = total;
  out.nc = nc_cost(tree, inst);
  out.ic = out.total - out.nc;
  return out;
}

// Cheapest way to make `target` receive X_source on top of `plan`, in the
// transmission style of the cost model. Returns the added per-bit cost.
inline double extend_plan_to(RawPlan& plan, NodeId source, NodeId target, const Instance& inst, CostModel model) {
  const Network& net = inst.net();
  plan.normalize();
  if (delivers(plan, source, target, net)) return 0.0;
  const std::size_t n = net.size();

  if (model == CostModel::Unicast) {
    plan.unicast.push_back(target);
    plan.normalize();
    return inst.d(source, target);
  }

  // Multi-source Dijkstra from what already carries the value; WL pays node
  // (broadcast) weights, multicast pays edge weights.
  std::vector<double> cost(n, kInf);
  std::vector<NodeId> prev(n, kNoNode);
  using Item = std::tuple<double, NodeId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;

  if (model == CostModel::WL) {
    // frontier = broadcasters; a node x finishes when target is in N[x]
    if (plan.broadcasters.empty()) {
      cost[static_cast<std::size_t>(source)] = net.tx_weight(source);
      pq.emplace(cost[static_cast<std::size_t>(source)], source);
    } else {
      for (NodeId b : plan.broadcasters) {
        cost[static_cast<std::size_t>(b)] = 0.0;
        pq.emplace(0.0, b);
      }
    }
    NodeId hit = kNoNode;
    while (!pq.empty()) {
      auto [c, v] = pq.top();
      pq.pop();
      if (c > cost[static_cast<std::size_t>(v)]) continue;
      if (v == target || net.adjacent(v, target)) {
        hit = v;
        break;
      }
      for (const Neighbor& nb : net.neighbors(v)) {
        double nc = c + net.tx_weight(nb.id);
        if (nc < cost[static_cast<std::size_t>(nb.id)]) {
          cost[static_cast<std::size_t>(nb.id)] = nc;
          prev[static_cast<std::size_t>(nb.id)] = v;
          pq.emplace(nc, nb.id);
        }
      }
    }
    if (hit == kNoNode) throw Error(ErrorCode::InvalidArgument, "target unreachable by broadcast relays");
    double before = plan_cost_per_bit(plan, source, net, inst.dist());
    for (NodeId v = hit; v != kNoNode; v = prev[static_cast<std::size_t>(v)]) plan.broadcasters.push_back(v);
    plan.normalize();
    return plan_cost_per_bit(plan, source, net, inst.dist()) - before;
  }

  std::vector<NodeId> holders = recipients(plan, source, net);
  if (plan.links.empty()) holders = {source};
  for (NodeId h : holders) {
    cost[static_cast<std::size_t>(h)] = 0.0;
    pq.emplace(0.0, h);
  }
  while (!pq.empty()) {
    auto [c, v] = pq.top();
    pq.pop();
    if (c > cost[static_cast<std::size_t>(v)]) continue;
    if (v == target) break;
    for (const Neighbor& nb : net.neighbors(v)) {
      double nc = c + nb.w;
      if (nc < cost[static_cast<std::size_t>(nb.id)]) {
        cost[static_cast<std::size_t>(nb.id)] = nc;
        prev[static_cast<std::size_t>(nb.id)] = v;
        pq.emplace(nc, nb.id);
      }
    }
  }
  if (cost[static_cast<std::size_t>(target)] == kInf)
    throw Error(ErrorCode::InvalidArgument, "target unreachable");
  for (NodeId v = target; prev[static_cast<std::size_t>(v)] != kNoNode; v = prev[static_cast<std::size_t>(v)])
    plan.links.emplace_back(prev[static_cast<std::size_t>(v)], v);
  plan.normalize();
  return cost[static_cast<std::size_t>(target)];
}

// Drops raw plans whose value no site (and no bs delivery of a root) needs.
inline void prune_unused_plans(MovementScheme& scheme, const CompressionTree& tree, NodeId bs) {
  const std::size_t n = tree.parent.size();
  std::vector<char> needed(n, 0);
  for (NodeId v = 0; v < static_cast<NodeId>(n); ++v) {
    if (v == bs) continue;
    NodeId p = tree.parent[static_cast<std::size_t>(v)];
    if (p == bs) {
      needed[static_cast<std::size_t>(v)] = 1;
      continue;
    }
    NodeId s = scheme.site[static_cast<std::size_t>(v)];
    if (s != v) needed[static_cast<std::size_t>(v)] = 1;
    if (s != p) needed[static_cast<std::size_t>(p)] = 1;
  }
  for (std::size_t v = 0; v < n; ++v)
    if (!needed[v]) scheme.raw[v] = {};
}

struct Solution {
  CompressionTree tree;
  MovementScheme scheme;
};

namespace detail {

// Parent pointers for one component of an undirected edge set, rooted at r.
inline void orient_from(NodeId r, const std::vector<std::vector<NodeId>>& adj, std::vector<NodeId>& parent, NodeId bs) {
  parent[static_cast<std::size_t>(r)] = bs;
  std::vector<NodeId> stack{r};
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    for (NodeId u : adj[static_cast<std::size_t>(v)]) {
      if (u == parent[static_cast<std::size_t>(v)]) continue;
      parent[static_cast<std::size_t>(u)] = v;
      stack.push_back(u);
    }
  }
}

}  // namespace detail

// Turns an extended compression tree into a restricted scheme. Each component
// is rooted at the node minimizing the resulting cost (then H(X_r) d(r,bs),
// then id); an oriented edge (i -> j) is always compressed at j, as X_j|X_i if
// i is the parent and as X_i|X_j otherwise.
inline Solution scheme_from_extended(const ExtendedCompressionTree& ext, const Instance& inst, CostModel model) {
  const Network& net = inst.net();
  const std::size_t n = net.size();
  const NodeId bs = net.bs();
  if (ext.raw.size() != n) throw Error(ErrorCode::InvalidArgument, "extended tree raw plans do not match network");

  std::vector<std::vector<NodeId>> adj(n);
  for (const auto& e : ext.edges) {
    if (!net.is_sensor(e.from) || !net.is_sensor(e.to) || e.from == e.to)
      throw Error(ErrorCode::InconsistentOrientation, "edge endpoints must be distinct sensors");
    adj[static_cast<std::size_t>(e.from)].push_back(e.to);
    adj[static_cast<std::size_t>(e.to)].push_back(e.from);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  for (const auto& e : ext.edges)
    if (!delivers(ext.raw[static_cast<std::size_t>(e.from)], e.from, e.to, net))
      throw Error(ErrorCode::InconsistentOrientation,
                  "X" + std::to_string(e.from) + " never reaches " + std::to_string(e.to));

  Solution sol;
  sol.tree.parent.assign(n, kNoNode);
  sol.scheme = MovementScheme::empty(n, model);
  sol.scheme.raw = ext.raw;

  // edge lookup by unordered pair -> receiver
  std::vector<std::vector<std::pair<NodeId, NodeId>>> recv_of(n);  // (other endpoint, receiver)
  for (const auto& e : ext.edges) {
    recv_of[static_cast<std::size_t>(e.from)].emplace_back(e.to, e.to);
    recv_of[static_cast<std::size_t>(e.to)].emplace_back(e.from, e.to);
  }
  auto receiver = [&](NodeId a, NodeId b) {
    for (const auto& [o, r] : recv_of[static_cast<std::size_t>(a)])
      if (o == b) return r;
    return kNoNode;
  };

  std::vector<char> seen(n, 0);
  std::vector<NodeId> scratch(n, kNoNode);
  for (NodeId start : net.sensors()) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<NodeId> comp{start};
    seen[static_cast<std::size_t>(start)] = 1;
    for (std::size_t k = 0; k < comp.size(); ++k)
      for (NodeId u : adj[static_cast<std::size_t>(comp[k])])
        if (!seen[static_cast<std::size_t>(u)]) {
          seen[static_cast<std::size_t>(u)] = 1;
          comp.push_back(u);
        }
    std::sort(comp.begin(), comp.end());

    NodeId best_root = kNoNode;
    std::tuple<double, double, NodeId> best_key{kInf, kInf, kNoNode};
    for (NodeId r : comp) {
      detail::orient_from(r, adj, scratch, bs);
      double cond = 0.0;
      for (NodeId v : comp) {
        NodeId p = scratch[static_cast<std::size_t>(v)];
        if (p == bs) continue;
        NodeId site = receiver(v, p);
        cond += inst.hc(v, p) * inst.d_bs(site);
      }
      RawPlan probe = ext.raw[static_cast<std::size_t>(r)];
      double ext_cost = inst.h(r) * extend_plan_to(probe, r, bs, inst, model);
      std::tuple<double, double, NodeId> key{cond + ext_cost, inst.h(r) * inst.d_bs(r), r};
      const double tol = 1e-12 * std::max(1.0, std::get<0>(key));
      bool better = best_root == kNoNode || std::get<0>(key) < std::get<0>(best_key) - tol ||
                    (std::abs(std::get<0>(key) - std::get<0>(best_key)) <= tol &&
                     std::tie(std::get<1>(key), std::get<2>(key)) < std::tie(std::get<1>(best_key), std::get<2>(best_key)));
      if (better) {
        best_root = r;
        best_key = key;
      }
    }
    detail::orient_from(best_root, adj, sol.tree.parent, bs);
    extend_plan_to(sol.scheme.raw[static_cast<std::size_t>(best_root)], best_root, bs, inst, model);
    for (NodeId v : comp) {
      NodeId p = sol.tree.parent[static_cast<std::size_t>(v)];
      if (p != bs) sol.scheme.site[static_cast<std::size_t>(v)] = receiver(v, p);
    }
  }
  for (auto& p : sol.scheme.raw) p.normalize();
  return sol;
}

}  // namespace comprestree
