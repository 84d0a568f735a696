// Walks the six-node example through every method and prints the cost split.
#include <cstdio>

#include "comprestree/experiment.hpp"

using namespace comprestree;

int main() {
  std::vector<Node> nodes = {{0, 0, 0}, {1, 1, 0}, {2, 0, 1}, {3, 2, 0}, {4, 3, 0}, {5, 1, 1}};
  std::vector<Edge> edges = {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {1, 5}, {2, 5}, {3, 4}};
  for (double eps : {0.0, 0.1}) {
    Instance inst(build_network(nodes, edges, 0), EntropyModel::uniform(6, 1.0, eps));
    std::printf("eps = %.2f\n%-10s %8s %8s %8s\n", eps, "method", "total", "nc", "ic");
    for (const char* m : {"ind", "cluster", "wcds", "treestar", "unicast", "dsc"}) {
      auto out = run_method(inst, m, "wl");
      std::printf("%-10s %8.3f %8.3f %8.3f\n", m, out.cost.total, out.cost.nc, out.cost.ic);
    }
    auto g = greedy_treestar(inst, TreeStarModel::WLSG);
    for (const auto& ts : g.trace) {
      std::printf("  treestar at %d, ceff %.4f, leaves", ts.center, ts.ceff());
      for (NodeId v : ts.leaves) std::printf(" %d", v);
      std::printf("\n");
    }
    std::printf("%s\n\n", result_record("treestar", run_method(inst, "treestar", "wl"), 0, g.trace.size(), 0.0).dump().c_str());
  }
}
