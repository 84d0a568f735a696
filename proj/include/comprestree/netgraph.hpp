#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <queue>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "comprestree/error.hpp"

namespace comprestree {

using NodeId = std::int32_t;
inline constexpr NodeId kNoNode = -1;
inline constexpr double kInf = std::numeric_limits<double>::infinity();

struct Node {
  NodeId id = kNoNode;
  double x = 0.0;
  double y = 0.0;
  double w = 1.0;  // cost per bit of one local broadcast
};

struct Edge {
  NodeId u = kNoNode;
  NodeId v = kNoNode;
  double w = 1.0;  // cost per bit per hop
};

struct Neighbor {
  NodeId id;
  double w;
};

// Undirected communication graph. Node ids are dense (0..n-1); the base
// station is an ordinary node that never carries an attribute.
class Network {
 public:
  Network() = default;

  std::size_t size() const noexcept { return nodes_.size(); }
  NodeId bs() const noexcept { return bs_; }
  bool contains(NodeId v) const noexcept { return v >= 0 && static_cast<std::size_t>(v) < nodes_.size(); }
  bool is_sensor(NodeId v) const noexcept { return contains(v) && v != bs_; }

  const Node& node(NodeId v) const { return nodes_.at(static_cast<std::size_t>(v)); }
  double tx_weight(NodeId v) const { return node(v).w; }
  std::span<const Node> nodes() const noexcept { return nodes_; }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const Neighbor> neighbors(NodeId v) const { return adj_.at(static_cast<std::size_t>(v)); }
  std::size_t degree(NodeId v) const { return neighbors(v).size(); }

  double edge_weight(NodeId u, NodeId v) const {
    auto nbrs = neighbors(u);
    auto it = std::lower_bound(nbrs.begin(), nbrs.end(), v,
                               [](const Neighbor& n, NodeId id) { return n.id < id; });
    return (it != nbrs.end() && it->id == v) ? it->w : kInf;
  }
  bool adjacent(NodeId u, NodeId v) const { return edge_weight(u, v) < kInf; }

  std::vector<NodeId> sensors() const {
    std::vector<NodeId> out;
    out.reserve(nodes_.size());
    for (NodeId v = 0; v < static_cast<NodeId>(nodes_.size()); ++v)
      if (v != bs_) out.push_back(v);
    return out;
  }
  std::size_t sensor_count() const noexcept { return nodes_.empty() ? 0 : nodes_.size() - 1; }

  double euclidean(NodeId a, NodeId b) const {
    const Node& p = node(a);
    const Node& q = node(b);
    return std::hypot(p.x - q.x, p.y - q.y);
  }

 private:
  friend Network build_network(std::vector<Node> nodes, std::vector<Edge> edges, NodeId bs);

  std::vector<Node> nodes_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Neighbor>> adj_;
  NodeId bs_ = kNoNode;
};

namespace detail {

// Components of the subgraph induced by nodes where keep(v) is true.
template <typename Keep>
std::vector<int> component_labels(const Network& net, Keep keep, int* count = nullptr) {
  std::vector<int> label(net.size(), -1);
  int next = 0;
  std::vector<NodeId> stack;
  for (NodeId s = 0; s < static_cast<NodeId>(net.size()); ++s) {
    if (!keep(s) || label[static_cast<std::size_t>(s)] >= 0) continue;
    label[static_cast<std::size_t>(s)] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      NodeId v = stack.back();
      stack.pop_back();
      for (const Neighbor& n : net.neighbors(v)) {
        if (!keep(n.id) || label[static_cast<std::size_t>(n.id)] >= 0) continue;
        label[static_cast<std::size_t>(n.id)] = next;
        stack.push_back(n.id);
      }
    }
    ++next;
  }
  if (count) *count = next;
  return label;
}

}  // namespace detail

inline Network build_network(std::vector<Node> nodes, std::vector<Edge> edges, NodeId bs) {
  if (nodes.empty()) throw Error(ErrorCode::InvalidArgument, "network needs at least one node");
  std::sort(nodes.begin(), nodes.end(), [](const Node& a, const Node& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].id != static_cast<NodeId>(i))
      throw Error(ErrorCode::InvalidNode, "node ids must be exactly 0..n-1");
    if (!(nodes[i].w > 0.0) || !std::isfinite(nodes[i].w))
      throw Error(ErrorCode::NonpositiveWeight, "node " + std::to_string(i) + " has transmit weight <= 0");
  }
  const auto n = static_cast<NodeId>(nodes.size());
  if (bs < 0 || bs >= n) throw Error(ErrorCode::InvalidNode, "base station is not a network node");

  Network net;
  net.adj_.assign(nodes.size(), {});
  for (Edge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
      throw Error(ErrorCode::InvalidNode, "edge references an unknown node");
    if (e.u == e.v) throw Error(ErrorCode::InvalidArgument, "self-loop at node " + std::to_string(e.u));
    if (!(e.w > 0.0) || !std::isfinite(e.w))
      throw Error(ErrorCode::NonpositiveWeight,
                  "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") has weight <= 0");
    if (e.u > e.v) std::swap(e.u, e.v);
    net.adj_[static_cast<std::size_t>(e.u)].push_back({e.v, e.w});
    net.adj_[static_cast<std::size_t>(e.v)].push_back({e.u, e.w});
  }
  for (auto& list : net.adj_) {
    std::sort(list.begin(), list.end(), [](const Neighbor& a, const Neighbor& b) { return a.id < b.id; });
    for (std::size_t i = 1; i < list.size(); ++i)
      if (list[i].id == list[i - 1].id) throw Error(ErrorCode::DuplicateEdge, "duplicate edge");
  }
  std::sort(edges.begin(), edges.end(),
            [](const Edge& a, const Edge& b) { return std::pair(a.u, a.v) < std::pair(b.u, b.v); });
  net.nodes_ = std::move(nodes);
  net.edges_ = std::move(edges);
  net.bs_ = bs;

  int comps = 0;
  detail::component_labels(net, [](NodeId) { return true; }, &comps);
  if (comps != 1) throw Error(ErrorCode::Disconnected, "graph has " + std::to_string(comps) + " components");
  return net;
}

// All-pairs shortest paths by edge weight with deterministic first hops.
class DistanceTable {
 public:
  DistanceTable() = default;

  std::size_t size() const noexcept { return n_; }
  double operator()(NodeId a, NodeId b) const { return dist_[index(a, b)]; }
  double to_bs(NodeId a) const { return (*this)(a, bs_); }
  NodeId next_hop(NodeId from, NodeId to) const { return next_[index(from, to)]; }

  std::vector<NodeId> path(NodeId from, NodeId to) const {
    std::vector<NodeId> out{from};
    while (from != to) {
      from = next_hop(from, to);
      if (from == kNoNode) return {};
      out.push_back(from);
    }
    return out;
  }
  std::size_t hops(NodeId from, NodeId to) const {
    auto p = path(from, to);
    return p.empty() ? 0 : p.size() - 1;
  }

 private:
  friend DistanceTable shortest_paths(const Network& net);

  std::size_t index(NodeId a, NodeId b) const {
    return static_cast<std::size_t>(a) * n_ + static_cast<std::size_t>(b);
  }

  std::size_t n_ = 0;
  NodeId bs_ = kNoNode;
  std::vector<double> dist_;
  std::vector<NodeId> next_;
};

inline DistanceTable shortest_paths(const Network& net) {
  DistanceTable t;
  const std::size_t n = net.size();
  t.n_ = n;
  t.bs_ = net.bs();
  t.dist_.assign(n * n, kInf);
  t.next_.assign(n * n, kNoNode);

  using Item = std::pair<double, NodeId>;
  std::vector<double> d(n);
  for (NodeId target = 0; target < static_cast<NodeId>(n); ++target) {
    std::fill(d.begin(), d.end(), kInf);
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    d[static_cast<std::size_t>(target)] = 0.0;
    pq.emplace(0.0, target);
    while (!pq.empty()) {
      auto [dv, v] = pq.top();
      pq.pop();
      if (dv > d[static_cast<std::size_t>(v)]) continue;
      for (const Neighbor& nb : net.neighbors(v)) {
        double cand = dv + nb.w;
        if (cand < d[static_cast<std::size_t>(nb.id)]) {
          d[static_cast<std::size_t>(nb.id)] = cand;
          pq.emplace(cand, nb.id);
        }
      }
    }
    for (NodeId v = 0; v < static_cast<NodeId>(n); ++v) {
      t.dist_[t.index(v, target)] = d[static_cast<std::size_t>(v)];
      if (v == target) {
        t.next_[t.index(v, target)] = v;
        continue;
      }
      // lowest-id neighbour on some shortest path
      const double tol = 1e-12 * std::max(1.0, d[static_cast<std::size_t>(v)]);
      for (const Neighbor& nb : net.neighbors(v)) {
        if (std::abs(nb.w + d[static_cast<std::size_t>(nb.id)] - d[static_cast<std::size_t>(v)]) <= tol) {
          t.next_[t.index(v, target)] = nb.id;
          break;
        }
      }
    }
  }
  return t;
}

enum class Corner { LowerLeft, LowerRight, UpperLeft, UpperRight };

// Sensors on a rows x cols lattice, edge iff Euclidean distance <= link_radius.
// The base station sits one spacing outside the requested corner and links
// to that corner sensor alone; its id is rows * cols.
inline Network gen_grid(int rows, int cols, double spacing, double link_radius,
                        Corner bs_corner = Corner::LowerLeft) {
  if (rows < 1 || cols < 1) throw Error(ErrorCode::InvalidArgument, "rows and cols must be >= 1");
  if (!(spacing > 0.0) || !(link_radius > 0.0))
    throw Error(ErrorCode::InvalidArgument, "spacing and link_radius must be > 0");
  std::vector<Node> nodes;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      nodes.push_back({static_cast<NodeId>(r * cols + c), c * spacing, r * spacing, 1.0});
  std::vector<Edge> edges;
  const double tol = 1e-9 * link_radius;
  for (std::size_t a = 0; a < nodes.size(); ++a)
    for (std::size_t b = a + 1; b < nodes.size(); ++b)
      if (std::hypot(nodes[a].x - nodes[b].x, nodes[a].y - nodes[b].y) <= link_radius + tol)
        edges.push_back({nodes[a].id, nodes[b].id, 1.0});
  // the bs is an extra node linked to the chosen corner sensor only
  NodeId corner = 0;
  double dx = -spacing, dy = 0.0;
  switch (bs_corner) {
    case Corner::LowerLeft: corner = 0; break;
    case Corner::LowerRight: corner = cols - 1, dx = spacing; break;
    case Corner::UpperLeft: corner = (rows - 1) * cols; break;
    case Corner::UpperRight: corner = rows * cols - 1, dx = spacing; break;
  }
  const NodeId bs = rows * cols;
  const Node& at = nodes[static_cast<std::size_t>(corner)];
  nodes.push_back({bs, at.x + dx, at.y + dy, 1.0});
  edges.push_back({corner, bs, 1.0});
  return build_network(std::move(nodes), std::move(edges), bs);
}

// Uniform random placement in [0,width]x[0,height]; edge iff distance is
// strictly below link_radius. Whole layouts are resampled until connected.
inline Network gen_random(int count, double width, double height, double link_radius,
                          std::uint64_t seed, int max_retries = 1000) {
  if (count < 1) throw Error(ErrorCode::InvalidArgument, "count must be >= 1");
  if (!(width > 0.0) || !(height > 0.0) || !(link_radius > 0.0))
    throw Error(ErrorCode::InvalidArgument, "dimensions and link_radius must be > 0");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ux(0.0, width), uy(0.0, height);
  for (int attempt = 0; attempt < max_retries; ++attempt) {
    std::vector<Node> nodes;
    nodes.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
      double x = ux(rng);
      double y = uy(rng);
      nodes.push_back({static_cast<NodeId>(i), x, y, 1.0});
    }
    std::vector<Edge> edges;
    for (int a = 0; a < count; ++a)
      for (int b = a + 1; b < count; ++b)
        if (std::hypot(nodes[a].x - nodes[b].x, nodes[a].y - nodes[b].y) < link_radius)
          edges.push_back({a, b, 1.0});
    NodeId bs = 0;
    double best = kInf;
    for (const Node& nd : nodes) {
      double r = std::hypot(nd.x, nd.y);
      if (r < best) {
        best = r;
        bs = nd.id;
      }
    }
    try {
      return build_network(std::move(nodes), std::move(edges), bs);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::Disconnected) throw;
    }
  }
  throw Error(ErrorCode::CannotConnect,
              "no connected layout after " + std::to_string(max_retries) + " attempts");
}

}  // namespace comprestree
