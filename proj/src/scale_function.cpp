#include "randstab/scale_function.hpp"

namespace randstab {

double check_scale_equation(const ScaleFunction& psi, const Eigen::ArrayXd& grid) {
  if (psi.is_pure_power()) {
    // Pure powers satisfy the equation for every admissible pair; spot-check
    // the representative b = 1/2.
    const double b = 0.5;
    return check_scale_equation(psi, std::pow(b, -psi.alpha()), b, grid);
  }
  return check_scale_equation(psi, psi.a(), psi.b(), grid);
}

double check_scale_equation(const ScaleFunction& psi, double a, double b,
                            const Eigen::ArrayXd& grid) {
  if (!(b > 0.0 && b < 1.0 && a > 1.0))
    throw std::invalid_argument("scale pair needs 0 < b < 1 < a");
  double worst = 0.0;
  for (Eigen::Index i = 0; i < grid.size(); ++i) {
    const double u = grid[i];
    if (!(u > 0.0)) throw std::invalid_argument("scale equation grid needs u > 0");
    const double lhs = psi.value(u);
    worst = std::max(worst, std::abs(lhs - a * psi.value(b * u)) / lhs);
  }
  return worst;
}

}  // namespace randstab
