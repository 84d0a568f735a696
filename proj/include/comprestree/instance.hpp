#pragma once

#include <utility>
#include <vector>

#include "comprestree/entropy.hpp"
#include "comprestree/netgraph.hpp"

namespace comprestree {

// A network, its entropy model and the derived distance table, with the
// pairwise entropies cached densely.
class Instance {
 public:
  Instance(Network net, EntropyModel model) : net_(std::move(net)), model_(std::move(model)) {
    if (model_.size() != net_.size())
      throw Error(ErrorCode::InvalidModel, "entropy model covers " + std::to_string(model_.size()) +
                                               " nodes, network has " + std::to_string(net_.size()));
    dist_ = shortest_paths(net_);
    const std::size_t n = net_.size();
    h_.assign(n, 0.0);
    hc_.assign(n * n, 0.0);
    for (NodeId i : net_.sensors()) {
      h_[static_cast<std::size_t>(i)] = model_.entropy(i);
      for (NodeId j : net_.sensors())
        if (i != j) hc_[static_cast<std::size_t>(i) * n + static_cast<std::size_t>(j)] = model_.conditional(i, j);
    }
  }

  const Network& net() const noexcept { return net_; }
  const EntropyModel& model() const noexcept { return model_; }
  const DistanceTable& dist() const noexcept { return dist_; }
  NodeId bs() const noexcept { return net_.bs(); }

  double h(NodeId i) const { return h_[static_cast<std::size_t>(i)]; }
  // H(Xi | Xj)
  double hc(NodeId i, NodeId j) const { return hc_[static_cast<std::size_t>(i) * net_.size() + static_cast<std::size_t>(j)]; }
  double d(NodeId a, NodeId b) const { return dist_(a, b); }
  double d_bs(NodeId a) const { return dist_(a, net_.bs()); }

 private:
  Network net_;
  EntropyModel model_;
  DistanceTable dist_;
  std::vector<double> h_;
  std::vector<double> hc_;
};

}  // namespace comprestree
