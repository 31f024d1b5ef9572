#include "randstab/stability.hpp"

#include <cmath>
#include <limits>
#include <optional>

#include "randstab/descriptor.hpp"

namespace randstab {

namespace {

void require_c01(double c) {
  if (!(c > 0.0 && c < 1.0))
    throw std::domain_error(
        "scale c must lie in (0,1): these transforms are strictly monotone in "
        "the tail, so the stability equation has no solution at c >= 1");
}

StabilityReport make_report(EquationTag equation, std::string compounder,
                            std::string transform, double c, double tol,
                            const GridSpec& grid, Eigen::ArrayXd points,
                            Eigen::ArrayXd residuals) {
  StabilityReport report;
  report.equation = equation;
  report.compounder = std::move(compounder);
  report.transform = std::move(transform);
  report.c = c;
  report.tolerance = tol;
  report.grid = grid;
  report.points = std::move(points);
  report.residuals = std::move(residuals);
  report.max_residual = report.residuals.size() ? report.residuals.maxCoeff() : 0.0;
  report.pass = report.max_residual <= tol;
  return report;
}

}  // namespace

StabilityReport verify_continuous(const PgfFamily& compounder, const LtFamily& phi, double c,
                                  const GridSpec& grid, double tol) {
  require_c01(c);
  const Eigen::ArrayXd points = make_grid(grid);
  Eigen::ArrayXd residuals(points.size());
  for (Eigen::Index i = 0; i < points.size(); ++i) {
    const double s = points[i];
    const double inner = eval_lt(phi, c * s);
    residuals[i] = std::abs(eval_pgf(compounder, inner) - eval_lt(phi, s));
  }
  return make_report(EquationTag::kContinuousLt, format_descriptor(compounder),
                     format_descriptor(phi), c, tol, grid, points, std::move(residuals));
}

StabilityReport verify_continuous(const PgfFamily& compounder, const CfFamily& phi, double c,
                                  const GridSpec& grid, double tol) {
  require_c01(c);
  const Eigen::ArrayXd points = make_grid(grid);
  Eigen::ArrayXd residuals(points.size());
  for (Eigen::Index i = 0; i < points.size(); ++i) {
    const double u = points[i];
    const cdouble inner = eval_cf(phi, c * u);
    residuals[i] = std::abs(eval_pgf(compounder, inner) - eval_cf(phi, u));
  }
  return make_report(EquationTag::kContinuousCf, format_descriptor(compounder),
                     format_descriptor(phi), c, tol, grid, points, std::move(residuals));
}

StabilityReport verify_discrete(const PgfFamily& compounder, const DiscretePgf& q, double c,
                                const GridSpec& grid, double tol) {
  require_c01(c);
  const Eigen::ArrayXd points = make_grid(grid);
  Eigen::ArrayXd residuals(points.size());
  for (Eigen::Index i = 0; i < points.size(); ++i) {
    const double s = points[i];
    const double inner = eval_discrete_pgf(q, 1.0 - c + c * s);
    residuals[i] = std::abs(eval_pgf(compounder, inner) - eval_discrete_pgf(q, s));
  }
  return make_report(EquationTag::kDiscrete, format_descriptor(compounder),
                     format_descriptor(q), c, tol, grid, points, std::move(residuals));
}

namespace {

double residual_at(const PgfFamily& compounder, const TransformFamily& phi, double c) {
  if (std::holds_alternative<LtFamily>(phi))
    return verify_continuous(compounder, std::get<LtFamily>(phi), c).max_residual;
  return verify_continuous(compounder, std::get<CfFamily>(phi), c).max_residual;
}

// Recognized (compounder, transform) patterns with an explicit scale. The
// candidate is still verified against the grid before being believed.
std::optional<double> closed_form_c(const PgfFamily& compounder, const TransformFamily& phi) {
  // Harris-like compounders: geometric on {1,2,...} is the k = 1 case.
  double a = 0.0;
  bool harris_like = false;
  if (compounder.tag() == PgfFamily::Tag::kHarris) {
    a = compounder.a();
    harris_like = true;
  } else if (compounder.tag() == PgfFamily::Tag::kGeometric1) {
    a = 1.0 / compounder.p();
    harris_like = true;
  }
  const bool degenerate_like = compounder.tag() == PgfFamily::Tag::kDegenerate;
  const double kd = degenerate_like ? static_cast<double>(compounder.k()) : 0.0;

  if (std::holds_alternative<LtFamily>(phi)) {
    const LtFamily& f = std::get<LtFamily>(phi);
    switch (f.tag()) {
      case LtFamily::Tag::kGamma:
        // (1+s)^(-beta) is the alpha = 1 power form.
        if (harris_like) return 1.0 / a;
        break;
      case LtFamily::Tag::kMittagLeffler:
      case LtFamily::Tag::kPositiveLinnik:
        if (harris_like) return std::pow(a, -1.0 / f.alpha());
        break;
      case LtFamily::Tag::kSemiML:
      case LtFamily::Tag::kGenSemiML:
        if (harris_like) {
          if (f.psi().is_pure_power()) return std::pow(a, -1.0 / f.alpha());
          if (std::abs(f.psi().a() - a) <= 1e-9 * a) return f.psi().b();
        }
        break;
      case LtFamily::Tag::kPositiveStable:
        if (degenerate_like) return std::pow(kd, -1.0 / f.alpha());
        break;
      case LtFamily::Tag::kSemiStable:
        if (degenerate_like) {
          if (f.psi().is_pure_power()) return std::pow(kd, -1.0 / f.alpha());
          if (std::abs(f.psi().a() - kd) <= 1e-9 * kd) return f.psi().b();
        }
        break;
    }
    return std::nullopt;
  }

  const CfFamily& f = std::get<CfFamily>(phi);
  switch (f.tag()) {
    case CfFamily::Tag::kLinnik:
    case CfFamily::Tag::kGeneralizedLinnik:
      if (harris_like) return std::pow(a, -1.0 / f.alpha());
      break;
    case CfFamily::Tag::kSemiAlphaLaplace:
    case CfFamily::Tag::kGenSemiAlphaLaplace:
      if (harris_like) {
        if (f.psi().is_pure_power()) return std::pow(a, -1.0 / f.alpha());
        if (std::abs(f.psi().a() - a) <= 1e-9 * a) return f.psi().b();
      }
      break;
  }
  return std::nullopt;
}

}  // namespace

ScaleSearchResult solve_scale(const PgfFamily& compounder, const TransformFamily& phi,
                              double tol) {
  ScaleSearchResult result;
  if (const auto c0 = closed_form_c(compounder, phi)) {
    if (*c0 > 0.0 && *c0 < 1.0) {
      const double r = residual_at(compounder, phi, *c0);
      if (r <= tol) {
        result.stable = true;
        result.closed_form = true;
        result.c = *c0;
        result.residual = r;
        return result;
      }
    }
  }

  // Coarse log-spaced scan to land near the global minimum, then a
  // golden-section refinement on log c. Ties keep the left interval, so
  // equal residuals resolve toward smaller c.
  const double lo_c = 1e-6;
  const double hi_c = 1.0 - 1e-6;
  const int coarse_n = 64;
  const auto f = [&](double x) { return residual_at(compounder, phi, std::exp(x)); };

  int best_i = 0;
  double best_f = std::numeric_limits<double>::infinity();
  Eigen::ArrayXd xs =
      Eigen::ArrayXd::LinSpaced(coarse_n, std::log(lo_c), std::log(hi_c));
  for (int i = 0; i < coarse_n; ++i) {
    const double fi = f(xs[i]);
    if (fi < best_f) {
      best_f = fi;
      best_i = i;
    }
  }
  double lo = xs[std::max(0, best_i - 1)];
  double hi = xs[std::min(coarse_n - 1, best_i + 1)];

  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - gr * (hi - lo);
  double x2 = lo + gr * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  for (int it = 0; it < 60; ++it) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - gr * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + gr * (hi - lo);
      f2 = f(x2);
    }
  }
  const double xm = f1 <= f2 ? x1 : x2;
  result.c = std::exp(xm);
  result.residual = std::min(f1, f2);
  result.stable = result.residual <= tol;
  result.closed_form = false;
  return result;
}

double check_class_L_decomposition(const CfFamily& phi, double a, const Eigen::ArrayXd& grid) {
  if (!(a > 1.0)) throw std::invalid_argument("decomposition needs a > 1");
  const double kd = 1.0 / phi.nu();
  const long k = std::lround(kd);
  if (k < 1 || std::abs(kd - static_cast<double>(k)) > 1e-9)
    throw std::invalid_argument("decomposition needs nu = 1/k for an integer k");
  const double c = std::pow(a, -1.0 / phi.alpha());
  const PgfFamily harris = PgfFamily::harris(a, k);
  double worst = 0.0;
  for (Eigen::Index i = 0; i < grid.size(); ++i) {
    const double u = grid[i];
    const cdouble inner = eval_cf(phi, c * u);
    worst = std::max(worst, std::abs(eval_cf(phi, u) - eval_pgf(harris, inner)));
  }
  return worst;
}

}  // namespace randstab
