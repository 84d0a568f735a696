#pragma once

#include <vector>

#include "comprestree/error.hpp"
#include "comprestree/netgraph.hpp"

namespace comprestree {

struct Arc {
  int from = 0;
  int to = 0;
  double w = 0.0;
};

namespace detail {

// Chu-Liu/Edmonds with contraction. Returns, per node, the index of its
// chosen incoming arc (-1 for the root).
inline std::vector<int> edmonds(int n, int root, const std::vector<Arc>& arcs) {
  std::vector<int> in(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < static_cast<int>(arcs.size()); ++i) {
    const Arc& a = arcs[static_cast<std::size_t>(i)];
    if (a.to == root || a.from == a.to) continue;
    int& cur = in[static_cast<std::size_t>(a.to)];
    if (cur < 0 || a.w < arcs[static_cast<std::size_t>(cur)].w) cur = i;
  }
  for (int v = 0; v < n; ++v)
    if (v != root && in[static_cast<std::size_t>(v)] < 0)
      throw Error(ErrorCode::Disconnected, "node " + std::to_string(v) + " has no incoming arc");

  // cycle detection among chosen arcs
  std::vector<int> cycle_id(static_cast<std::size_t>(n), -1), mark(static_cast<std::size_t>(n), -1);
  int cycles = 0;
  for (int s = 0; s < n; ++s) {
    int v = s;
    while (v != root && mark[static_cast<std::size_t>(v)] < 0 && cycle_id[static_cast<std::size_t>(v)] < 0) {
      mark[static_cast<std::size_t>(v)] = s;
      v = arcs[static_cast<std::size_t>(in[static_cast<std::size_t>(v)])].from;
    }
    if (v != root && mark[static_cast<std::size_t>(v)] == s && cycle_id[static_cast<std::size_t>(v)] < 0) {
      for (int u = v;;) {
        cycle_id[static_cast<std::size_t>(u)] = cycles;
        u = arcs[static_cast<std::size_t>(in[static_cast<std::size_t>(u)])].from;
        if (u == v) break;
      }
      ++cycles;
    }
  }
  if (cycles == 0) return in;

  // contract: each cycle becomes one node, the rest keep their own
  std::vector<int> comp(static_cast<std::size_t>(n));
  int next = cycles;
  for (int v = 0; v < n; ++v)
    comp[static_cast<std::size_t>(v)] = cycle_id[static_cast<std::size_t>(v)] >= 0 ? cycle_id[static_cast<std::size_t>(v)] : next++;
  std::vector<Arc> sub;
  std::vector<int> origin;
  for (int i = 0; i < static_cast<int>(arcs.size()); ++i) {
    const Arc& a = arcs[static_cast<std::size_t>(i)];
    int cu = comp[static_cast<std::size_t>(a.from)], cv = comp[static_cast<std::size_t>(a.to)];
    if (cu == cv || a.to == root) continue;
    double w = a.w;
    if (cycle_id[static_cast<std::size_t>(a.to)] >= 0) w -= arcs[static_cast<std::size_t>(in[static_cast<std::size_t>(a.to)])].w;
    sub.push_back({cu, cv, w});
    origin.push_back(i);
  }
  std::vector<int> sub_in = edmonds(next, comp[static_cast<std::size_t>(root)], sub);

  std::vector<int> out = in;  // cycle arcs by default
  for (int c = 0; c < next; ++c) {
    int si = sub_in[static_cast<std::size_t>(c)];
    if (si < 0) continue;
    int i = origin[static_cast<std::size_t>(si)];
    out[static_cast<std::size_t>(arcs[static_cast<std::size_t>(i)].to)] = i;
  }
  return out;
}

}  // namespace detail

struct ArborescenceResult {
  std::vector<int> parent;  // -1 for the root
  std::vector<int> arc;     // chosen arc index per node, -1 for the root
  double weight = 0.0;
};

inline ArborescenceResult min_arborescence(int n, int root, const std::vector<Arc>& arcs) {
  if (root < 0 || root >= n) throw Error(ErrorCode::InvalidArgument, "root outside graph");
  ArborescenceResult r;
  r.arc = detail::edmonds(n, root, arcs);
  r.parent.assign(static_cast<std::size_t>(n), -1);
  for (int v = 0; v < n; ++v) {
    int i = r.arc[static_cast<std::size_t>(v)];
    if (i < 0) continue;
    r.parent[static_cast<std::size_t>(v)] = arcs[static_cast<std::size_t>(i)].from;
    r.weight += arcs[static_cast<std::size_t>(i)].w;
  }
  return r;
}

}  // namespace comprestree
