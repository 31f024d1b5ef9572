#pragma once

#include <functional>
#include <optional>
#include <string>

#include <Eigen/Core>

#include "randstab/discrete.hpp"
#include "randstab/families.hpp"

namespace randstab {

// Inverts a strictly monotone transform by bisection. `decreasing` selects
// the orientation: Laplace transforms fall, generating functions rise. The
// bracket opens at [1e-12, 1] and the upper end doubles until it straddles
// the target (cap 1e9); 200 bisection steps or a 1e-14 match, whichever
// comes first.
double invert_monotone_transform(const std::function<double(double)>& f, double target,
                                 bool decreasing, double tol = 1e-14);

struct MatchedCompounder {
  PgfFamily family;
  double sup_distance = 0.0;
};

struct IdentifiedCompounder {
  // The recovered generating function P(t) = phi(phi_c^{-1}(t)), tabulated on
  // the window (t_lo, 1) where the construction is defined.
  std::function<double(double)> curve;
  double t_lo = 0.0;
  double c = 0.0;
  PmfTable pmf;
  PgfCheck verdict;
  std::optional<MatchedCompounder> matched;
};

// Recovers the compounding law from the law being compounded: the curve
// t -> phi(phi_c^{-1}(t)) is the generating function of the N for which the
// scaled random sum reproduces phi, when such an N exists. The curve is
// classified against the known families; on a match the pmf table comes from
// the matched family, otherwise from a power series fit of the curve itself.
IdentifiedCompounder identify_from_lt(const LtFamily& phi, double c);
IdentifiedCompounder identify_from_pgf(const DiscretePgf& q, double c);

// Least squares power series fit of f on Chebyshev nodes inside
// (0, t_hi], scaled monomial basis, rank-revealing SVD. Returns
// coefficients of t^0..t^degree.
Eigen::ArrayXd fit_power_series(const std::function<double(double)>& f, int degree,
                                double t_hi = 0.95);

// Whether t -> P(t^u) is a generating function with nonnegative series
// coefficients, decided by the fit above on a narrowed window. Integer u
// always passes (composition with t^u reindexes the series); fractional u
// generally does not, though kinks weaker than about t^7 are below the
// fit's resolution.
bool check_power_pgf(const PgfFamily& p, double u);

struct ClassifyResult {
  std::optional<MatchedCompounder> matched;
  double best_distance = 0.0;
};

// Fits each candidate family (degenerate, geometric, harris, sibuya) to the
// curve on 50 window points; a sup distance under 1e-8 declares a match,
// ties resolved toward fewer parameters.
ClassifyResult classify_compounder(const std::function<double(double)>& curve, double t_lo);

}  // namespace randstab
