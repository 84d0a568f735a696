#pragma once

#include <nlohmann/json.hpp>

#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "comprestree/ctree.hpp"

namespace comprestree::io {

using nlohmann::json;

inline void expect_object(const json& j, const std::string& what) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, what + " must be a JSON object");
}

// Rejects keys outside `allowed` so typos never pass silently.
inline void check_keys(const json& j, std::initializer_list<const char*> allowed, const std::string& what) {
  expect_object(j, what);
  for (const auto& [k, v] : j.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || k == a;
    if (!ok) throw Error(ErrorCode::ParseError, "unknown field '" + k + "' in " + what);
  }
}

template <class T>
T get_or(const json& j, const char* key, T fallback) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("field '") + key + "': " + e.what());
  }
}

template <class T>
T get_req(const json& j, const char* key, const std::string& what) {
  if (!j.contains(key)) throw Error(ErrorCode::ParseError, what + " lacks field '" + key + "'");
  return get_or<T>(j, key, T{});
}

inline json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path);
  out << text;
}

// ---- network ----

inline json to_json(const Network& net) {
  json nodes = json::array(), edges = json::array();
  for (const Node& n : net.nodes()) nodes.push_back({{"id", n.id}, {"x", n.x}, {"y", n.y}, {"w", n.w}});
  for (const Edge& e : net.edges()) edges.push_back({{"u", e.u}, {"v", e.v}, {"w", e.w}});
  return {{"bs", net.bs()}, {"nodes", nodes}, {"edges", edges}};
}

inline Network network_from_json(const json& j) {
  check_keys(j, {"bs", "nodes", "edges"}, "network");
  std::vector<Node> nodes;
  std::vector<Edge> edges;
  for (const json& n : get_req<json>(j, "nodes", "network")) {
    check_keys(n, {"id", "x", "y", "w"}, "node");
    nodes.push_back({get_req<NodeId>(n, "id", "node"), get_or(n, "x", 0.0), get_or(n, "y", 0.0), get_or(n, "w", 1.0)});
  }
  for (const json& e : get_or(j, "edges", json::array())) {
    check_keys(e, {"u", "v", "w"}, "edge");
    edges.push_back({get_req<NodeId>(e, "u", "edge"), get_req<NodeId>(e, "v", "edge"), get_or(e, "w", 1.0)});
  }
  return build_network(std::move(nodes), std::move(edges), get_req<NodeId>(j, "bs", "network"));
}

// ---- entropy ----

// Declarative model description; `build` binds it to a network.
struct EntropySpec {
  std::string kind = "uniform";  // uniform | rainfall | gaussian | gaussian_rbf | matrix
  double h = 1.0;
  double eps = 0.0;
  double c = 1.0;
  double length_scale = 1.0;
  double variance = 1.0;
  double floor = 1e-9;
  double jitter = 1e-6;
  std::vector<double> entropies;             // matrix
  std::vector<std::vector<double>> values;   // matrix: Hcond, gaussian: covariance

  EntropyModel build(const Network& net) const {
    if (kind == "uniform") return EntropyModel::uniform(net.size(), h, eps);
    if (kind == "rainfall") return EntropyModel::rainfall(net, h, c);
    if (kind == "gaussian_rbf") return EntropyModel::gaussian_rbf(net, length_scale, variance, floor, jitter);
    if (kind == "gaussian") {
      const auto n = static_cast<Eigen::Index>(values.size());
      Eigen::MatrixXd cov(n, n);
      for (Eigen::Index a = 0; a < n; ++a) {
        if (static_cast<Eigen::Index>(values[static_cast<std::size_t>(a)].size()) != n)
          throw Error(ErrorCode::InvalidModel, "covariance must be square");
        for (Eigen::Index b = 0; b < n; ++b) cov(a, b) = values[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
      }
      return EntropyModel::gaussian(std::move(cov), floor);
    }
    if (kind == "matrix") return EntropyModel::matrix(entropies, values);
    throw Error(ErrorCode::InvalidModel, "unknown entropy kind '" + kind + "'");
  }

  // Sets a scalar parameter by name (used by sweeps).
  void set(const std::string& name, double v) {
    if (name == "h") h = v;
    else if (name == "eps") eps = v;
    else if (name == "c") c = v;
    else if (name == "length_scale") length_scale = v;
    else if (name == "variance") variance = v;
    else throw Error(ErrorCode::InvalidArgument, "entropy has no parameter '" + name + "'");
  }
};

inline EntropySpec entropy_from_json(const json& j) {
  expect_object(j, "entropy");
  EntropySpec s;
  s.kind = get_req<std::string>(j, "kind", "entropy");
  if (s.kind == "uniform") {
    check_keys(j, {"kind", "h", "eps"}, "uniform entropy");
    s.h = get_or(j, "h", 1.0);
    s.eps = get_or(j, "eps", 0.0);
  } else if (s.kind == "rainfall") {
    check_keys(j, {"kind", "h", "c"}, "rainfall entropy");
    s.h = get_or(j, "h", 1.0);
    s.c = get_req<double>(j, "c", "rainfall entropy");
  } else if (s.kind == "gaussian_rbf") {
    check_keys(j, {"kind", "length_scale", "variance", "floor", "jitter"}, "gaussian_rbf entropy");
    s.length_scale = get_req<double>(j, "length_scale", "gaussian_rbf entropy");
    s.variance = get_or(j, "variance", 1.0);
    s.floor = get_or(j, "floor", 1e-9);
    s.jitter = get_or(j, "jitter", 1e-6);
  } else if (s.kind == "gaussian") {
    check_keys(j, {"kind", "cov", "floor"}, "gaussian entropy");
    s.values = get_req<std::vector<std::vector<double>>>(j, "cov", "gaussian entropy");
    s.floor = get_or(j, "floor", 1e-9);
  } else if (s.kind == "matrix") {
    check_keys(j, {"kind", "h", "hcond"}, "matrix entropy");
    s.entropies = get_req<std::vector<double>>(j, "h", "matrix entropy");
    s.values = get_req<std::vector<std::vector<double>>>(j, "hcond", "matrix entropy");
  } else {
    throw Error(ErrorCode::ParseError, "unknown entropy kind '" + s.kind + "'");
  }
  return s;
}

inline json to_json(const EntropySpec& s) {
  if (s.kind == "uniform") return {{"kind", s.kind}, {"h", s.h}, {"eps", s.eps}};
  if (s.kind == "rainfall") return {{"kind", s.kind}, {"h", s.h}, {"c", s.c}};
  if (s.kind == "gaussian_rbf")
    return {{"kind", s.kind}, {"length_scale", s.length_scale}, {"variance", s.variance}, {"floor", s.floor}, {"jitter", s.jitter}};
  if (s.kind == "gaussian") return {{"kind", s.kind}, {"cov", s.values}, {"floor", s.floor}};
  return {{"kind", s.kind}, {"h", s.entropies}, {"hcond", s.values}};
}

// ---- trees and schemes ----

inline CostModel cost_model_from_string(const std::string& s) {
  if (s == "wl") return CostModel::WL;
  if (s == "multicast") return CostModel::Multicast;
  if (s == "unicast") return CostModel::Unicast;
  throw Error(ErrorCode::ParseError, "unknown cost model '" + s + "'");
}

inline json to_json(const RawPlan& p) {
  json j = json::object();
  if (!p.broadcasters.empty()) j["broadcasters"] = p.broadcasters;
  if (!p.links.empty()) {
    json l = json::array();
    for (const auto& [a, b] : p.links) l.push_back({a, b});
    j["links"] = l;
  }
  if (!p.unicast.empty()) j["unicast"] = p.unicast;
  return j;
}

// Tree edges are listed with the raw sender under "orient" when the scheme
// is restricted; "raw" and "cost_model" make the scheme reloadable.
inline json to_json(const Solution& s, NodeId bs) {
  json parent = json::object(), sites = json::object(), raw = json::object(), orient = json::array();
  auto roots = s.tree.roots(bs);
  for (NodeId v = 0; v < static_cast<NodeId>(s.tree.parent.size()); ++v) {
    NodeId p = s.tree.parent[static_cast<std::size_t>(v)];
    if (v == bs) continue;
    parent[std::to_string(v)] = p;
    if (p != bs) {
      NodeId site = s.scheme.site[static_cast<std::size_t>(v)];
      sites[std::to_string(v)] = site;
      if (site == v) orient.push_back({{"u", p}, {"v", v}});
      else if (site == p) orient.push_back({{"u", v}, {"v", p}});
    }
    if (!s.scheme.raw[static_cast<std::size_t>(v)].empty()) raw[std::to_string(v)] = to_json(s.scheme.raw[static_cast<std::size_t>(v)]);
  }
  return {{"root", roots.empty() ? kNoNode : roots.front()},
          {"roots", roots},
          {"parent", parent},
          {"orient", orient},
          {"sites", sites},
          {"raw", raw},
          {"cost_model", to_string(s.scheme.cost_model)}};
}

inline Solution solution_from_json_unchecked(const json& j, std::size_t n, NodeId bs) {
  check_keys(j, {"root", "roots", "parent", "orient", "sites", "raw", "cost_model"}, "tree");
  Solution s;
  s.tree.parent.assign(n, kNoNode);
  s.scheme = MovementScheme::empty(n, cost_model_from_string(get_or<std::string>(j, "cost_model", "wl")));
  auto node = [&](const std::string& key) {
    std::size_t pos = 0;
    long v = -1;
    try {
      v = std::stol(key, &pos);
    } catch (...) {
      pos = 0;
    }
    if (pos != key.size() || v < 0 || static_cast<std::size_t>(v) >= n)
      throw Error(ErrorCode::ParseError, "bad node key '" + key + "'");
    return static_cast<NodeId>(v);
  };
  // keep the objects alive: items() only references them
  const json parents = get_req<json>(j, "parent", "tree");
  const json sites = get_or(j, "sites", json::object());
  const json raws = get_or(j, "raw", json::object());
  for (const auto& [k, v] : parents.items()) s.tree.parent[static_cast<std::size_t>(node(k))] = v.get<NodeId>();
  for (const auto& [k, v] : sites.items()) s.scheme.site[static_cast<std::size_t>(node(k))] = v.get<NodeId>();
  for (const auto& [k, v] : raws.items()) {
    check_keys(v, {"broadcasters", "links", "unicast"}, "raw plan");
    RawPlan& p = s.scheme.raw[static_cast<std::size_t>(node(k))];
    p.broadcasters = get_or(v, "broadcasters", std::vector<NodeId>{});
    p.unicast = get_or(v, "unicast", std::vector<NodeId>{});
    for (const auto& l : get_or(v, "links", json::array())) p.links.emplace_back(l.at(0).get<NodeId>(), l.at(1).get<NodeId>());
    p.normalize();
  }
  if (static_cast<std::size_t>(bs) < n) s.tree.parent[static_cast<std::size_t>(bs)] = kNoNode;
  return s;
}

inline Solution solution_from_json(const json& j, std::size_t n, NodeId bs) {
  try {
    return solution_from_json_unchecked(j, n, bs);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("tree: ") + e.what());
  }
}

inline json to_json(const CostBreakdown& c) { return {{"total", c.total}, {"nc", c.nc}, {"ic", c.ic}}; }

}  // namespace comprestree::io
