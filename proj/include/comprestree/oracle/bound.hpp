#pragma once

#include <cstddef>

#include "comprestree/error.hpp"

namespace comprestree::oracle {

inline double harmonic(std::size_t n) {
  double h = 0.0;
  for (std::size_t i = 1; i <= n; ++i) h += 1.0 / static_cast<double>(i);
  return h;
}

struct BoundReport {
  double harmonic = 0.0;
  double factor = 0.0;  // 4 beta^2 H_n
  double ratio = 0.0;   // sol / opt
  double slack = 0.0;   // factor - ratio
  bool ok = false;
};

inline BoundReport check_bound(double sol_cost, double opt_cost, double beta, std::size_t n) {
  if (!(opt_cost > 0.0)) throw Error(ErrorCode::InvalidArgument, "optimum must be positive");
  BoundReport r;
  r.harmonic = harmonic(n);
  r.factor = 4.0 * beta * beta * r.harmonic;
  r.ratio = sol_cost / opt_cost;
  r.slack = r.factor - r.ratio;
  r.ok = r.ratio <= r.factor * (1.0 + 1e-12);
  return r;
}

}  // namespace comprestree::oracle
