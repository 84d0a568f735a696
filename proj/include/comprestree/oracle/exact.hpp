#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "comprestree/algorithms/reductions.hpp"
#include "comprestree/netgraph.hpp"
#include "comprestree/oracle/budget.hpp"

namespace comprestree::oracle {

using Matrix = std::vector<std::vector<double>>;

// Floyd-Warshall over an arc list; symmetric when `undirected`.
inline Matrix all_pairs(int n, const std::vector<Arc>& arcs, bool undirected) {
  Matrix d(static_cast<std::size_t>(n), std::vector<double>(static_cast<std::size_t>(n), kInf));
  for (int v = 0; v < n; ++v) d[static_cast<std::size_t>(v)][static_cast<std::size_t>(v)] = 0.0;
  for (const Arc& a : arcs) {
    auto& x = d[static_cast<std::size_t>(a.from)][static_cast<std::size_t>(a.to)];
    x = std::min(x, a.w);
    if (undirected) {
      auto& y = d[static_cast<std::size_t>(a.to)][static_cast<std::size_t>(a.from)];
      y = std::min(y, a.w);
    }
  }
  for (std::size_t k = 0; k < d.size(); ++k)
    for (std::size_t i = 0; i < d.size(); ++i)
      for (std::size_t j = 0; j < d.size(); ++j)
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
  return d;
}

inline Matrix network_distances(const Network& net) {
  std::vector<Arc> arcs;
  for (const Edge& e : net.edges()) arcs.push_back({e.u, e.v, e.w});
  return all_pairs(static_cast<int>(net.size()), arcs, true);
}

namespace detail {

// Dreyfus-Wagner style table: dp[mask][v] = cheapest tree rooted at v that
// reaches every terminal group in mask. base[g][v] = distance from v to group g.
inline std::vector<std::vector<double>> subset_tree_dp(const Matrix& dist, const std::vector<std::vector<double>>& base) {
  const std::size_t n = dist.size();
  const std::size_t g = base.size();
  const std::size_t full = std::size_t{1} << g;
  std::vector<std::vector<double>> dp(full, std::vector<double>(n, kInf));
  for (std::size_t i = 0; i < g; ++i) dp[std::size_t{1} << i] = base[i];
  for (std::size_t mask = 1; mask < full; ++mask) {
    if (std::popcount(mask) < 2) continue;
    std::vector<double> merged(n, kInf);
    for (std::size_t sub = (mask - 1) & mask; sub > 0; sub = (sub - 1) & mask) {
      if (sub < (mask ^ sub)) continue;  // each split once
      for (std::size_t v = 0; v < n; ++v) merged[v] = std::min(merged[v], dp[sub][v] + dp[mask ^ sub][v]);
    }
    for (std::size_t v = 0; v < n; ++v) {
      double best = kInf;
      for (std::size_t u = 0; u < n; ++u) best = std::min(best, dist[v][u] + merged[u]);
      dp[mask][v] = best;
    }
  }
  return dp;
}

}  // namespace detail

// Minimum Steiner tree weight over the network's edge weights.
inline double steiner_exact(const Network& net, std::vector<NodeId> terminals, const OracleBudget& budget = {}) {
  std::sort(terminals.begin(), terminals.end());
  terminals.erase(std::unique(terminals.begin(), terminals.end()), terminals.end());
  require(terminals.size(), budget.steiner_terminals, "steiner terminals");
  if (terminals.size() <= 1) return 0.0;
  Matrix d = network_distances(net);
  std::vector<std::vector<double>> base;
  for (NodeId t : terminals) base.push_back(d[static_cast<std::size_t>(t)]);
  auto dp = detail::subset_tree_dp(d, base);
  return *std::min_element(dp.back().begin(), dp.back().end());
}

struct CdsResult {
  double weight = kInf;
  std::vector<NodeId> nodes;
};

inline bool connected_mask(const Network& net, std::uint32_t mask) {
  if (mask == 0) return false;
  std::uint32_t seen = mask & (~mask + 1), frontier = seen;
  while (frontier) {
    std::uint32_t next = 0;
    for (NodeId v = 0; v < static_cast<NodeId>(net.size()); ++v)
      if (frontier >> v & 1u)
        for (const Neighbor& nb : net.neighbors(v))
          if ((mask >> nb.id & 1u) && !(seen >> nb.id & 1u)) next |= 1u << nb.id;
    seen |= next;
    frontier = next;
  }
  return seen == mask;
}

inline std::uint32_t closed_nbhd_mask(const Network& net, std::uint32_t mask) {
  std::uint32_t out = mask;
  for (NodeId v = 0; v < static_cast<NodeId>(net.size()); ++v)
    if (mask >> v & 1u)
      for (const Neighbor& nb : net.neighbors(v)) out |= 1u << nb.id;
  return out;
}

// Lightest connected node set containing `source` whose closed neighbourhood
// covers every dominatee; plain subset enumeration.
inline CdsResult cds_exact(const Network& net, NodeId source, const std::vector<NodeId>& dominatees,
                           const OracleBudget& budget = {}) {
  require(net.size(), budget.cds_universe, "cds universe");
  std::uint32_t need = 0;
  for (NodeId t : dominatees) need |= 1u << t;
  CdsResult best;
  const std::uint32_t all = net.size() >= 32 ? ~0u : (1u << net.size()) - 1u;
  for (std::uint32_t mask = 1; mask <= all && mask != 0; ++mask) {
    if (!(mask >> source & 1u)) continue;
    double w = 0.0;
    for (NodeId v = 0; v < static_cast<NodeId>(net.size()); ++v)
      if (mask >> v & 1u) w += net.tx_weight(v);
    if (w >= best.weight) continue;
    if ((closed_nbhd_mask(net, mask) & need) != need || !connected_mask(net, mask)) continue;
    best.weight = w;
    best.nodes.clear();
    for (NodeId v = 0; v < static_cast<NodeId>(net.size()); ++v)
      if (mask >> v & 1u) best.nodes.push_back(v);
  }
  return best;
}

// Optimum of a directed k-terminal Steiner arborescence for every k;
// out[k] = min weight reaching exactly k terminals from the root.
inline std::vector<double> directed_steiner_per_k(const DirectedSteinerInstance& ds, const OracleBudget& budget = {}) {
  require(ds.terminals.size(), budget.steiner_terminals, "directed steiner terminals");
  Matrix d = all_pairs(ds.nodes, ds.arcs, false);
  std::vector<std::vector<double>> base;
  for (int t : ds.terminals) {
    std::vector<double> col(d.size());
    for (std::size_t v = 0; v < d.size(); ++v) col[v] = d[v][static_cast<std::size_t>(t)];
    base.push_back(std::move(col));
  }
  std::vector<double> out(ds.terminals.size() + 1, kInf);
  out[0] = 0.0;
  if (ds.terminals.empty()) return out;
  auto dp = detail::subset_tree_dp(d, base);
  for (std::size_t mask = 1; mask < dp.size(); ++mask) {
    auto k = static_cast<std::size_t>(std::popcount(mask));
    out[k] = std::min(out[k], dp[mask][static_cast<std::size_t>(ds.root)]);
  }
  return out;
}

// Min over non-empty sets of non-root groups of (tree weight)/(#groups + 1).
inline double group_steiner_min_density(const GroupSteinerInstance& gs, const OracleBudget& budget = {}) {
  if (gs.groups.size() <= 1) return kInf;
  require(gs.groups.size() - 1, budget.steiner_terminals, "group steiner groups");
  Matrix d = all_pairs(gs.nodes, gs.edges, true);
  std::vector<std::vector<double>> base;
  for (std::size_t g = 1; g < gs.groups.size(); ++g) {
    std::vector<double> col(d.size(), kInf);
    for (std::size_t v = 0; v < d.size(); ++v)
      for (int m : gs.groups[g]) col[v] = std::min(col[v], d[v][static_cast<std::size_t>(m)]);
    base.push_back(std::move(col));
  }
  auto dp = detail::subset_tree_dp(d, base);
  double best = kInf;
  for (std::size_t mask = 1; mask < dp.size(); ++mask)
    best = std::min(best, dp[mask][static_cast<std::size_t>(gs.root)] / static_cast<double>(std::popcount(mask) + 1));
  return best;
}

}  // namespace comprestree::oracle
