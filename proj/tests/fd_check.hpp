#pragma once

#include <cmath>
#include <functional>
#include <string>

#include "autodiff/tape.hpp"

namespace beat::testing {

struct FdResult {
  double worst_rel = 0.0;
  std::size_t checked = 0;
  std::string worst_where;
};

// Central differences of `loss` against p.grad. Relative error uses an
// absolute floor of 1e-8 for near-zero gradients.
inline FdResult fd_check(ad::Parameter& p, const std::function<double()>& loss, double step = 1e-5) {
  FdResult r;
  for (Eigen::Index i = 0; i < p.value.size(); ++i) {
    const double orig = p.value.data()[i];
    p.value.data()[i] = orig + step;
    const double up = loss();
    p.value.data()[i] = orig - step;
    const double down = loss();
    p.value.data()[i] = orig;
    const double numeric = (up - down) / (2.0 * step);
    const double analytic = p.grad.data()[i];
    const double err = std::abs(numeric - analytic);
    const double rel = err <= 1e-8 ? 0.0 : err / std::max(std::abs(numeric), std::abs(analytic));
    if (rel > r.worst_rel) {
      r.worst_rel = rel;
      r.worst_where = p.name + "[" + std::to_string(i) + "] analytic " + std::to_string(analytic) + " numeric " +
                      std::to_string(numeric);
    }
    ++r.checked;
  }
  return r;
}

}  // namespace beat::testing
