#pragma once

#include <map>
#include <vector>

#include "comprestree/algorithms/arborescence.hpp"
#include "comprestree/algorithms/treestar.hpp"

namespace comprestree {

// Directed graph whose k-terminal Steiner arborescences from `root` are the
// WL-NS treestars at a center with k leaf components.
struct DirectedSteinerInstance {
  int nodes = 0;
  int root = 0;
  std::vector<Arc> arcs;
  std::vector<int> terminals;           // one per foreign component
  std::vector<NodeId> terminal_component;
};

// Undirected graph for the multicast treestar; group 0 is {root}.
struct GroupSteinerInstance {
  int nodes = 0;
  int root = 0;
  std::vector<Arc> edges;  // from < to, undirected
  std::vector<std::vector<int>> groups;
};

// Node v becomes v_in -> v_out (weight H(X_r) w(v)); every network edge gives
// u_out -> v_in; a companion v' of weight H(X_v|X_r) d(v,bs) is entered from
// the out-copy of any node of N[v]; v' feeds the group node of v's component.
inline DirectedSteinerInstance reduce_to_directed_steiner(const Forest& f, const Instance& inst, NodeId r) {
  const Network& net = inst.net();
  const int n = static_cast<int>(net.size());
  DirectedSteinerInstance out;
  auto vin = [](NodeId v) { return 2 * v; };
  auto vout = [](NodeId v) { return 2 * v + 1; };
  int next = 2 * n;
  for (NodeId v = 0; v < n; ++v) out.arcs.push_back({vin(v), vout(v), inst.h(r) * net.tx_weight(v)});
  for (const Edge& e : net.edges()) {
    out.arcs.push_back({vout(e.u), vin(e.v), 0.0});
    out.arcs.push_back({vout(e.v), vin(e.u), 0.0});
  }
  std::map<NodeId, int> group;
  for (NodeId v : net.sensors()) {
    if (v == r || f.same(v, r)) continue;
    NodeId c = f.find(v);
    if (!group.count(c)) {
      group[c] = -1;
    }
  }
  for (auto& [c, id] : group) {
    id = next++;
    out.terminals.push_back(id);
    out.terminal_component.push_back(c);
  }
  for (NodeId v : net.sensors()) {
    if (v == r || f.same(v, r)) continue;
    const int copy = next++;
    const double w = inst.hc(v, r) * inst.d_bs(v);
    out.arcs.push_back({vout(v), copy, w});
    for (const Neighbor& nb : net.neighbors(v)) out.arcs.push_back({vout(nb.id), copy, w});
    out.arcs.push_back({copy, group.at(f.find(v)), 0.0});
  }
  out.nodes = next;
  out.root = vin(r);
  return out;
}

// Network edges weighted H(X_r) w(e), plus a pendant v -- v' of weight
// H(X_v|X_r) d(v,bs); group j holds the pendants of component j.
inline GroupSteinerInstance reduce_to_group_steiner(const Forest& f, const Instance& inst, NodeId r) {
  const Network& net = inst.net();
  const int n = static_cast<int>(net.size());
  GroupSteinerInstance out;
  for (const Edge& e : net.edges()) out.edges.push_back({e.u, e.v, inst.h(r) * e.w});
  out.groups.push_back({r});
  std::map<NodeId, std::size_t> group;
  int next = n;
  for (NodeId v : net.sensors()) {
    if (v == r || f.same(v, r)) continue;
    NodeId c = f.find(v);
    if (!group.count(c)) {
      group[c] = out.groups.size();
      out.groups.emplace_back();
    }
    const int copy = next++;
    out.edges.push_back({v, copy, inst.hc(v, r) * inst.d_bs(v)});
    out.groups[group[c]].push_back(copy);
  }
  out.nodes = next;
  out.root = r;
  return out;
}

}  // namespace comprestree
