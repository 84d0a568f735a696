#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "comprestree/error.hpp"
#include "comprestree/netgraph.hpp"

namespace comprestree {

enum class SolutionSpace { SG, NS };

struct UniformEntropy {
  double h = 1.0;
  double eps = 0.0;
};

// H(Xi|Xj) = (1 - c / (c + dist(i,j))) * h over Euclidean node distance.
struct RainfallEntropy {
  double h = 1.0;
  double c = 1.0;
  std::vector<std::pair<double, double>> positions;
};

// Differential entropies (nats) of a jointly Gaussian field.
struct GaussianEntropy {
  Eigen::MatrixXd cov;
  double floor = 1e-9;
};

struct MatrixEntropy {
  std::vector<double> h;
  std::vector<std::vector<double>> hcond;  // hcond[i][j] = H(Xi | Xj), diagonal ignored
};

// Source of H(Xi), H(Xi|Xj) and H(Xi|X_A). Indexed by NodeId over all network
// nodes; the base-station slot is carried along but never queried by the
// algorithms.
class EntropyModel {
 public:
  using Payload = std::variant<UniformEntropy, RainfallEntropy, GaussianEntropy, MatrixEntropy>;

  static EntropyModel uniform(std::size_t n, double h, double eps) {
    if (!(h >= 0.0) || !(eps >= 0.0) || eps > h)
      throw Error(ErrorCode::InvalidModel, "uniform model needs 0 <= eps <= h");
    return EntropyModel(n, UniformEntropy{h, eps});
  }

  static EntropyModel rainfall(const Network& net, double h, double c) {
    if (!(h >= 0.0) || !(c > 0.0)) throw Error(ErrorCode::InvalidModel, "rainfall model needs h >= 0, c > 0");
    RainfallEntropy p{h, c, {}};
    for (const Node& nd : net.nodes()) p.positions.emplace_back(nd.x, nd.y);
    return EntropyModel(net.size(), std::move(p));
  }

  static EntropyModel gaussian(Eigen::MatrixXd cov, double floor = 1e-9) {
    if (cov.rows() != cov.cols() || cov.rows() == 0)
      throw Error(ErrorCode::InvalidModel, "covariance must be square and non-empty");
    if (!cov.isApprox(cov.transpose(), 1e-12))
      throw Error(ErrorCode::InvalidModel, "covariance must be symmetric");
    Eigen::LLT<Eigen::MatrixXd> llt(cov);
    if (llt.info() != Eigen::Success)
      throw Error(ErrorCode::InvalidModel, "covariance must be positive definite");
    auto n = static_cast<std::size_t>(cov.rows());
    return EntropyModel(n, GaussianEntropy{std::move(cov), floor});
  }

  // RBF kernel over node positions plus diagonal jitter.
  static EntropyModel gaussian_rbf(const Network& net, double length_scale, double variance = 1.0,
                                   double floor = 1e-9, double jitter = 1e-6) {
    if (!(length_scale > 0.0) || !(variance > 0.0))
      throw Error(ErrorCode::InvalidModel, "rbf needs positive length scale and variance");
    const auto n = static_cast<Eigen::Index>(net.size());
    Eigen::MatrixXd cov(n, n);
    for (Eigen::Index a = 0; a < n; ++a) {
      for (Eigen::Index b = 0; b < n; ++b) {
        double r = net.euclidean(static_cast<NodeId>(a), static_cast<NodeId>(b));
        cov(a, b) = variance * std::exp(-(r * r) / (2.0 * length_scale * length_scale));
      }
      cov(a, a) += jitter;
    }
    return gaussian(std::move(cov), floor);
  }

  static EntropyModel matrix(std::vector<double> h, std::vector<std::vector<double>> hcond) {
    const std::size_t n = h.size();
    if (hcond.size() != n) throw Error(ErrorCode::InvalidModel, "Hcond must be n x n");
    for (std::size_t i = 0; i < n; ++i) {
      if (!(h[i] >= 0.0)) throw Error(ErrorCode::InvalidModel, "entropies must be >= 0");
      if (hcond[i].size() != n) throw Error(ErrorCode::InvalidModel, "Hcond must be n x n");
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        if (!(hcond[i][j] >= 0.0)) throw Error(ErrorCode::InvalidModel, "conditional entropies must be >= 0");
        if (hcond[i][j] > h[i] + 1e-12)
          throw Error(ErrorCode::InvalidModel, "H(X" + std::to_string(i) + "|X" + std::to_string(j) +
                                                   ") exceeds H(X" + std::to_string(i) + ")");
      }
    }
    return EntropyModel(n, MatrixEntropy{std::move(h), std::move(hcond)});
  }

  std::size_t size() const noexcept { return n_; }
  const Payload& payload() const noexcept { return payload_; }

  std::string_view kind() const {
    return std::visit(
        [](const auto& p) -> std::string_view {
          using T = std::decay_t<decltype(p)>;
          if constexpr (std::is_same_v<T, UniformEntropy>) return "uniform";
          else if constexpr (std::is_same_v<T, RainfallEntropy>) return "rainfall";
          else if constexpr (std::is_same_v<T, GaussianEntropy>) return "gaussian";
          else return "matrix";
        },
        payload_);
  }

  double entropy(NodeId i) const {
    check(i);
    return std::visit(
        [&](const auto& p) -> double {
          using T = std::decay_t<decltype(p)>;
          if constexpr (std::is_same_v<T, UniformEntropy> || std::is_same_v<T, RainfallEntropy>) {
            return p.h;
          } else if constexpr (std::is_same_v<T, GaussianEntropy>) {
            return gaussian_entropy(p.cov(i, i), p.floor);
          } else {
            return p.h[static_cast<std::size_t>(i)];
          }
        },
        payload_);
  }

  // H(Xi | Xj)
  double conditional(NodeId i, NodeId j) const {
    check(i);
    check(j);
    if (i == j) throw Error(ErrorCode::InvalidArgument, "conditional entropy needs i != j");
    return std::visit(
        [&](const auto& p) -> double {
          using T = std::decay_t<decltype(p)>;
          if constexpr (std::is_same_v<T, UniformEntropy>) {
            return p.eps;
          } else if constexpr (std::is_same_v<T, RainfallEntropy>) {
            const auto& a = p.positions[static_cast<std::size_t>(i)];
            const auto& b = p.positions[static_cast<std::size_t>(j)];
            double dist = std::hypot(a.first - b.first, a.second - b.second);
            return (1.0 - p.c / (p.c + dist)) * p.h;
          } else if constexpr (std::is_same_v<T, GaussianEntropy>) {
            double var = p.cov(i, i) - p.cov(i, j) * p.cov(i, j) / p.cov(j, j);
            return gaussian_entropy(var, p.floor);
          } else {
            return p.hcond[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
          }
        },
        payload_);
  }

  // H(Xi | X_A). Exact for the Gaussian model; the pairwise models use the
  // best single conditioning node.
  double conditional_on_set(NodeId i, std::span<const NodeId> given) const {
    check(i);
    for (NodeId a : given) {
      check(a);
      if (a == i) throw Error(ErrorCode::InvalidArgument, "conditioning set must not contain i");
    }
    if (given.empty()) return entropy(i);
    if (const auto* g = std::get_if<GaussianEntropy>(&payload_)) {
      const auto k = static_cast<Eigen::Index>(given.size());
      Eigen::MatrixXd saa(k, k);
      Eigen::VectorXd sai(k);
      for (Eigen::Index r = 0; r < k; ++r) {
        sai(r) = g->cov(given[static_cast<std::size_t>(r)], i);
        for (Eigen::Index c = 0; c < k; ++c)
          saa(r, c) = g->cov(given[static_cast<std::size_t>(r)], given[static_cast<std::size_t>(c)]);
      }
      Eigen::VectorXd x = saa.ldlt().solve(sai);
      double var = g->cov(i, i) - sai.dot(x);
      return gaussian_entropy(var, g->floor);
    }
    double best = kInf;
    for (NodeId a : given) best = std::min(best, conditional(i, a));
    return best;
  }

 private:
  EntropyModel(std::size_t n, Payload p) : n_(n), payload_(std::move(p)) {}

  void check(NodeId i) const {
    if (i < 0 || static_cast<std::size_t>(i) >= n_)
      throw Error(ErrorCode::IndexOutOfRange, "node " + std::to_string(i) + " outside entropy model");
  }

  static double gaussian_entropy(double variance, double floor) {
    if (!(variance > 0.0)) return floor;
    double h = 0.5 * std::log(2.0 * std::numbers::pi * std::numbers::e * variance);
    return std::max(h, floor);
  }

  std::size_t n_ = 0;
  Payload payload_;
};

struct Beta {
  double value = 1.0;
  NodeId i = kNoNode;
  NodeId j = kNoNode;
};

// Largest ratio between mirrored conditional entropies over admissible
// sensor pairs: adjacent pairs for SG, all pairs for NS.
inline Beta beta(const EntropyModel& model, const Network& net, SolutionSpace space) {
  Beta out;
  auto consider = [&](NodeId i, NodeId j) {
    double a = model.conditional(i, j);
    double b = model.conditional(j, i);
    if (a == 0.0 && b == 0.0) return;
    if (a == 0.0 || b == 0.0)
      throw Error(ErrorCode::DegenerateEntropy,
                  "zero conditional entropy between " + std::to_string(i) + " and " + std::to_string(j));
    double r = std::max(a / b, b / a);
    if (r > out.value || out.i == kNoNode) out = {std::max(r, out.value), i, j};
  };
  const auto sensors = net.sensors();
  for (std::size_t x = 0; x < sensors.size(); ++x)
    for (std::size_t y = x + 1; y < sensors.size(); ++y)
      if (space == SolutionSpace::NS || net.adjacent(sensors[x], sensors[y])) consider(sensors[x], sensors[y]);
  return out;
}

}  // namespace comprestree
