#pragma once

#include <Eigen/Core>
#include <stdexcept>

namespace randstab {

enum class GridKind { kGeometric, kLinear };

struct GridSpec {
  GridKind kind = GridKind::kGeometric;
  double lo = 1e-3;
  double hi = 1e2;
  int n = 200;
};

// Evaluation grids are plain Eigen arrays so downstream code can use
// coefficient-wise expressions directly.
inline Eigen::ArrayXd make_grid(const GridSpec& spec) {
  if (spec.n < 2) throw std::invalid_argument("grid needs at least two points");
  if (!(spec.lo < spec.hi)) throw std::invalid_argument("grid bounds must satisfy lo < hi");
  if (spec.kind == GridKind::kGeometric) {
    if (!(spec.lo > 0.0)) throw std::invalid_argument("geometric grid needs lo > 0");
    return Eigen::ArrayXd::LinSpaced(spec.n, std::log(spec.lo), std::log(spec.hi)).exp();
  }
  return Eigen::ArrayXd::LinSpaced(spec.n, spec.lo, spec.hi);
}

// Laplace transform arguments: geometric spacing across five decades.
inline GridSpec default_lt_grid() { return {GridKind::kGeometric, 1e-3, 1e2, 200}; }

// Characteristic function arguments: symmetric linear window, odd count so
// that u = 0 is a grid point.
inline GridSpec default_cf_grid() { return {GridKind::kLinear, -50.0, 50.0, 201}; }

// Generating function arguments: interior points of (0,1), endpoints excluded
// because several families are defined by limits there.
inline GridSpec default_pgf_grid() { return {GridKind::kLinear, 1.0 / 201.0, 200.0 / 201.0, 200}; }

inline Eigen::ArrayXd default_lt_points() { return make_grid(default_lt_grid()); }
inline Eigen::ArrayXd default_cf_points() { return make_grid(default_cf_grid()); }
inline Eigen::ArrayXd default_pgf_points() { return make_grid(default_pgf_grid()); }

}  // namespace randstab
