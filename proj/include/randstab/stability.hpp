#pragma once

#include <optional>
#include <string>

#include <Eigen/Core>

#include "randstab/discrete.hpp"
#include "randstab/families.hpp"
#include "randstab/grid.hpp"

namespace randstab {

// Which functional identity a report refers to.
enum class EquationTag {
  kContinuousLt,   // P(phi(c*s)) = phi(s) on a Laplace grid
  kContinuousCf,   // P(phi(c*u)) = phi(u) on a symmetric real grid
  kDiscrete,       // P(Q(1-c+c*s)) = Q(s) on (0,1)
};

struct StabilityReport {
  EquationTag equation = EquationTag::kContinuousLt;
  std::string compounder;
  std::string transform;
  double c = 0.0;
  double tolerance = 0.0;
  double max_residual = 0.0;
  bool pass = false;
  GridSpec grid;
  Eigen::ArrayXd points;
  Eigen::ArrayXd residuals;
};

// Random sum stability on the half line: for every grid point s,
// |P(phi(c*s)) - phi(s)|. Requires c in (0,1); the equation has no
// admissible solution otherwise because a Laplace transform of a
// nondegenerate positive law is strictly decreasing.
StabilityReport verify_continuous(const PgfFamily& compounder, const LtFamily& phi, double c,
                                  const GridSpec& grid = default_lt_grid(), double tol = 1e-12);

// Same equation under characteristic functions; residuals are moduli of the
// complex mismatch. The compounder is evaluated at complex phi values, which
// lie in the closed unit disk for the families here.
StabilityReport verify_continuous(const PgfFamily& compounder, const CfFamily& phi, double c,
                                  const GridSpec& grid = default_cf_grid(), double tol = 1e-12);

// Integer version with binomial thinning in place of scaling:
// |P(Q(1-c+c*s)) - Q(s)| over a grid in (0,1).
StabilityReport verify_discrete(const PgfFamily& compounder, const DiscretePgf& q, double c,
                                const GridSpec& grid = default_pgf_grid(), double tol = 1e-12);

struct ScaleSearchResult {
  bool stable = false;        // best residual within tolerance
  bool closed_form = false;   // c produced by a recognized pattern, not search
  double c = 0.0;
  double residual = 0.0;
};

// Finds c in (0,1) making the stability equation hold, trying closed-form
// pattern matches first (verified before being returned) and falling back to
// a golden-section search on log c. "No stable c" is reported through the
// result, not an exception.
ScaleSearchResult solve_scale(const PgfFamily& compounder, const TransformFamily& phi,
                              double tol = 1e-10);

// Max residual of the compound splitting of a heavy-tailed member with
// nu = 1/k: phi(u) = phi(c*u) * (a - (a-1) * phi(c*u)^k)^(-1/k) with
// c = a^(-1/alpha). The second factor is the Harris pgf evaluated at
// phi(c*u), so membership in this family certifies the law is a compound
// limit of its own scaled copies.
double check_class_L_decomposition(const CfFamily& phi, double a, const Eigen::ArrayXd& grid);

}  // namespace randstab
