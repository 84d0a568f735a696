#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <vector>

#include "comprestree/algorithms/treestar.hpp"
#include "comprestree/ctree.hpp"
#include "comprestree/oracle/budget.hpp"
#include "comprestree/oracle/exact.hpp"

namespace comprestree::oracle {

// Exact per-bit cost of delivering a raw value from `source` to a node set,
// memoized on (source, recipient mask). Shares nothing with the algorithms'
// plan construction.
class DeliveryCost {
 public:
  DeliveryCost(const Network& net, CostModel model) : net_(net), model_(model), dist_(network_distances(net)) {
    const std::size_t n = net.size();
    memo_.assign(n, std::vector<double>(std::size_t{1} << n, -1.0));
    if (model_ == CostModel::WL) {
      const std::uint32_t all = (1u << n) - 1u;
      for (std::uint32_t m = 1; m <= all; ++m) {
        if (!connected_mask(net, m)) continue;
        double w = 0.0;
        for (NodeId v = 0; v < static_cast<NodeId>(n); ++v)
          if (m >> v & 1u) w += net.tx_weight(v);
        sets_.push_back({m, closed_nbhd_mask(net, m), w});
      }
    }
  }

  const Matrix& dist() const noexcept { return dist_; }

  double operator()(NodeId source, std::uint32_t recipients) {
    recipients &= ~(1u << source);
    if (recipients == 0) return 0.0;
    double& slot = memo_[static_cast<std::size_t>(source)][recipients];
    if (slot >= 0.0) return slot;
    double c = kInf;
    switch (model_) {
      case CostModel::Unicast:
        c = 0.0;
        for (NodeId t = 0; t < static_cast<NodeId>(net_.size()); ++t)
          if (recipients >> t & 1u) c += dist_[static_cast<std::size_t>(source)][static_cast<std::size_t>(t)];
        break;
      case CostModel::Multicast: {
        std::vector<NodeId> terms{source};
        for (NodeId t = 0; t < static_cast<NodeId>(net_.size()); ++t)
          if (recipients >> t & 1u) terms.push_back(t);
        c = steiner_exact(net_, terms);
        break;
      }
      case CostModel::WL:
        for (const auto& s : sets_)
          if ((s.mask >> source & 1u) && (s.cover & recipients) == recipients) c = std::min(c, s.weight);
        break;
    }
    slot = c;
    return c;
  }

 private:
  struct Set {
    std::uint32_t mask, cover;
    double weight;
  };
  const Network& net_;
  CostModel model_;
  Matrix dist_;
  std::vector<std::vector<double>> memo_;
  std::vector<Set> sets_;
};

struct BruteResult {
  double cost = kInf;
  std::vector<NodeId> parent;  // bs for roots
  std::vector<NodeId> site;    // per child, kNoNode for roots
};

namespace detail {

// Calls visit(parent) for every rooted spanning forest of the sensors whose
// tree edges are admissible pairs; roots hang off the bs.
template <class Visit>
void for_each_forest(const Network& net, SolutionSpace space, Deadline& deadline, Visit&& visit) {
  const NodeId bs = net.bs();
  const auto sensors = net.sensors();
  std::vector<std::vector<NodeId>> options(net.size());
  for (NodeId v : sensors) {
    options[static_cast<std::size_t>(v)].push_back(bs);
    for (NodeId u : sensors)
      if (u != v && (space == SolutionSpace::NS || net.adjacent(u, v))) options[static_cast<std::size_t>(v)].push_back(u);
  }
  std::vector<NodeId> parent(net.size(), kNoNode);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    deadline.check();
    if (i == sensors.size()) {
      visit(static_cast<const std::vector<NodeId>&>(parent));
      return;
    }
    NodeId v = sensors[i];
    for (NodeId p : options[static_cast<std::size_t>(v)]) {
      // chain from p through already assigned nodes must not return to v
      bool cycle = false;
      for (NodeId x = p; x != bs && x != kNoNode; x = parent[static_cast<std::size_t>(x)])
        if (x == v) {
          cycle = true;
          break;
        }
      if (cycle) continue;
      parent[static_cast<std::size_t>(v)] = p;
      rec(i + 1);
    }
    parent[static_cast<std::size_t>(v)] = kNoNode;
  };
  rec(0);
}

// Shared evaluation: per edge a list of allowed sites; exhaustive product.
inline void best_sites(const Instance& inst, DeliveryCost& deliver, const std::vector<NodeId>& parent,
                       const std::function<std::vector<NodeId>(NodeId child, NodeId par)>& site_options,
                       BruteResult& best, Deadline& deadline) {
  const Network& net = inst.net();
  const NodeId bs = net.bs();
  const std::size_t n = net.size();
  const Matrix& d = deliver.dist();
  std::vector<NodeId> kids;
  std::vector<std::vector<NodeId>> opts;
  std::vector<std::uint32_t> base(n, 0);
  for (NodeId v : net.sensors()) {
    NodeId p = parent[static_cast<std::size_t>(v)];
    if (p == bs) {
      base[static_cast<std::size_t>(v)] |= 1u << bs;
    } else {
      kids.push_back(v);
      opts.push_back(site_options(v, p));
    }
  }
  std::vector<std::size_t> choice(kids.size(), 0);
  for (;;) {
    deadline.check();
    std::vector<std::uint32_t> recv = base;
    double cost = 0.0;
    for (std::size_t e = 0; e < kids.size(); ++e) {
      NodeId v = kids[e], p = parent[static_cast<std::size_t>(v)], s = opts[e][choice[e]];
      recv[static_cast<std::size_t>(v)] |= 1u << s;
      recv[static_cast<std::size_t>(p)] |= 1u << s;
      cost += inst.hc(v, p) * d[static_cast<std::size_t>(s)][static_cast<std::size_t>(bs)];
    }
    for (NodeId v : net.sensors()) {
      if (cost >= best.cost) break;
      cost += inst.h(v) * deliver(v, recv[static_cast<std::size_t>(v)]);
    }
    if (cost < best.cost) {
      best.cost = cost;
      best.parent = parent;
      best.site.assign(n, kNoNode);
      for (std::size_t e = 0; e < kids.size(); ++e) best.site[static_cast<std::size_t>(kids[e])] = opts[e][choice[e]];
    }
    std::size_t e = 0;
    while (e < kids.size() && ++choice[e] == opts[e].size()) choice[e++] = 0;
    if (e == kids.size()) break;
  }
}

}  // namespace detail

// Exact optimum over restricted solutions: every admissible forest, every
// endpoint choice for each compression site, exact raw delivery costs.
inline BruteResult brute_restricted_opt(const Instance& inst, CostModel model, SolutionSpace space,
                                        const OracleBudget& budget = {}) {
  require(inst.net().sensor_count(), budget.restricted_sensors, "restricted oracle sensors");
  Deadline deadline(budget.seconds_per_call);
  DeliveryCost deliver(inst.net(), model);
  BruteResult best;
  detail::for_each_forest(inst.net(), space, deadline, [&](const std::vector<NodeId>& parent) {
    detail::best_sites(inst, deliver, parent, [](NodeId v, NodeId p) { return std::vector<NodeId>{v, p}; }, best,
                       deadline);
  });
  return best;
}

// Exact optimum when a conditional may be computed at any node.
inline BruteResult brute_unrestricted(const Instance& inst, CostModel model, SolutionSpace space,
                                      const OracleBudget& budget = {}) {
  require(inst.net().sensor_count(), budget.unrestricted_sensors, "unrestricted oracle sensors");
  Deadline deadline(budget.seconds_per_call);
  DeliveryCost deliver(inst.net(), model);
  std::vector<NodeId> everyone;
  for (NodeId v = 0; v < static_cast<NodeId>(inst.net().size()); ++v) everyone.push_back(v);
  BruteResult best;
  detail::for_each_forest(inst.net(), space, deadline, [&](const std::vector<NodeId>& parent) {
    detail::best_sites(inst, deliver, parent, [&](NodeId, NodeId) { return everyone; }, best, deadline);
  });
  return best;
}

struct BruteStar {
  NodeId center = kNoNode;
  std::vector<NodeId> leaves;  // sorted
  double cost = kInf;
  double ceff = kInf;
};

// Every WL-SG treestar: a center plus any set of neighbours lying in pairwise
// distinct components other than the center's.
inline BruteStar brute_mce_wlsg(const Forest& f, const Instance& inst) {
  const Network& net = inst.net();
  BruteStar best;
  auto tol = [](double x) { return 1e-12 * std::max(1.0, std::abs(x)); };
  for (NodeId r : net.sensors()) {
    std::vector<NodeId> nb;
    for (const Neighbor& x : net.neighbors(r))
      if (net.is_sensor(x.id) && !f.same(x.id, r)) nb.push_back(x.id);
    const std::uint32_t subsets = 1u << nb.size();
    for (std::uint32_t m = 1; m < subsets; ++m) {
      std::vector<NodeId> leaves, comps;
      double cost = inst.h(r) * net.tx_weight(r);
      for (std::size_t i = 0; i < nb.size(); ++i)
        if (m >> i & 1u) {
          leaves.push_back(nb[i]);
          comps.push_back(f.find(nb[i]));
          cost += inst.hc(nb[i], r) * inst.d_bs(nb[i]);
        }
      std::sort(comps.begin(), comps.end());
      if (std::adjacent_find(comps.begin(), comps.end()) != comps.end()) continue;
      std::sort(leaves.begin(), leaves.end());
      double ceff = cost / static_cast<double>(leaves.size() + 1);
      bool better = false;
      if (best.center == kNoNode || ceff < best.ceff - tol(best.ceff)) better = true;
      else if (std::abs(ceff - best.ceff) <= tol(best.ceff)) {
        if (cost < best.cost - tol(best.cost)) better = true;
        else if (std::abs(cost - best.cost) <= tol(best.cost))
          better = r < best.center || (r == best.center && leaves < best.leaves);
      }
      if (better) best = {r, leaves, cost, ceff};
    }
  }
  return best;
}

// Smallest weakly connected dominating set of the sensor subgraph by subset
// enumeration, with its own domination and weak-connectivity checks.
inline std::vector<NodeId> brute_min_wcds(const Network& net, const OracleBudget& budget = {}) {
  require(net.size(), budget.cds_universe, "wcds universe");
  const auto sensors = net.sensors();
  const std::size_t m = sensors.size();
  const NodeId bs = net.bs();
  auto components = [&](auto edge_ok) {
    std::vector<int> lab(net.size(), -1);
    int c = 0;
    for (NodeId s : sensors) {
      if (lab[static_cast<std::size_t>(s)] >= 0) continue;
      std::vector<NodeId> st{s};
      lab[static_cast<std::size_t>(s)] = c;
      while (!st.empty()) {
        NodeId v = st.back();
        st.pop_back();
        for (const Neighbor& nb : net.neighbors(v))
          if (nb.id != bs && lab[static_cast<std::size_t>(nb.id)] < 0 && edge_ok(v, nb.id)) {
            lab[static_cast<std::size_t>(nb.id)] = c;
            st.push_back(nb.id);
          }
      }
      ++c;
    }
    return c;
  };
  const int base_components = components([](NodeId, NodeId) { return true; });
  std::vector<NodeId> best;
  for (std::size_t size = 1; size <= m && best.empty(); ++size) {
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
      if (static_cast<std::size_t>(std::popcount(mask)) != size) continue;
      std::vector<char> in(net.size(), 0);
      for (std::size_t i = 0; i < m; ++i)
        if (mask >> i & 1u) in[static_cast<std::size_t>(sensors[i])] = 1;
      bool dom = true;
      for (NodeId v : sensors) {
        if (in[static_cast<std::size_t>(v)]) continue;
        bool hit = false;
        for (const Neighbor& nb : net.neighbors(v)) hit = hit || (nb.id != bs && in[static_cast<std::size_t>(nb.id)]);
        dom = dom && hit;
      }
      if (!dom) continue;
      int c = components([&](NodeId a, NodeId b) { return in[static_cast<std::size_t>(a)] || in[static_cast<std::size_t>(b)]; });
      if (c != base_components) continue;
      for (std::size_t i = 0; i < m; ++i)
        if (mask >> i & 1u) best.push_back(sensors[i]);
      break;
    }
  }
  return best;
}

}  // namespace comprestree::oracle
