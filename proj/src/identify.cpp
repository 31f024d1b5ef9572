#include "randstab/identify.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include <Eigen/Dense>

namespace randstab {

double invert_monotone_transform(const std::function<double(double)>& f, double target,
                                 bool decreasing, double tol) {
  double lo;
  double hi;
  if (decreasing) {
    lo = 1e-12;
    hi = 1.0;
    if (f(lo) < target) lo = 0.0;
    while (f(hi) > target) {
      hi *= 2.0;
      if (hi > 1e9)
        throw std::domain_error(
            "inversion bracket cap reached; target lies below the transform's "
            "range on the search interval");
    }
  } else {
    lo = 0.0;
    hi = 1.0;
    if (f(hi) < target)
      throw std::domain_error("inversion target above the transform's range on [0,1]");
  }
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (std::abs(fm - target) <= tol) return mid;
    const bool go_right = decreasing ? (fm > target) : (fm < target);
    if (go_right)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

namespace {

struct Candidate {
  PgfFamily family;
  double sup = std::numeric_limits<double>::infinity();
  int params = 1;
};

double sup_distance(const PgfFamily& family, const Eigen::ArrayXd& ts,
                    const Eigen::ArrayXd& ys) {
  double worst = 0.0;
  for (Eigen::Index i = 0; i < ts.size(); ++i)
    worst = std::max(worst, std::abs(eval_pgf(family, ts[i]) - ys[i]));
  return worst;
}

double sse(const PgfFamily& family, const Eigen::ArrayXd& ts, const Eigen::ArrayXd& ys) {
  double acc = 0.0;
  for (Eigen::Index i = 0; i < ts.size(); ++i) {
    const double d = eval_pgf(family, ts[i]) - ys[i];
    acc += d * d;
  }
  return acc;
}

// Minimizes g over [lo, hi] by golden section; ties keep the left interval.
double golden_min(const std::function<double(double)>& g, double lo, double hi, int iters) {
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - gr * (hi - lo);
  double x2 = lo + gr * (hi - lo);
  double f1 = g(x1);
  double f2 = g(x2);
  for (int it = 0; it < iters; ++it) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - gr * (hi - lo);
      f1 = g(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + gr * (hi - lo);
      f2 = g(x2);
    }
  }
  return f1 <= f2 ? x1 : x2;
}

}  // namespace

ClassifyResult classify_compounder(const std::function<double(double)>& curve, double t_lo) {
  const int n_fit = 50;
  const double margin = 0.02 * (1.0 - t_lo);
  const Eigen::ArrayXd ts =
      Eigen::ArrayXd::LinSpaced(n_fit, t_lo + margin, 1.0 - margin);
  Eigen::ArrayXd ys(n_fit);
  for (int i = 0; i < n_fit; ++i) ys[i] = curve(ts[i]);

  const double tm = ts[n_fit / 2];
  const double ym = ys[n_fit / 2];

  std::vector<Candidate> candidates;

  // Degenerate: single-point exponent estimate, rounded neighbors tried.
  {
    const double k_est = std::log(ym) / std::log(tm);
    Candidate best{PgfFamily::degenerate(1)};
    for (long k = std::max(1L, std::lround(k_est) - 1); k <= std::lround(k_est) + 1; ++k) {
      if (k < 1) continue;
      const PgfFamily f = PgfFamily::degenerate(k);
      const double d = sup_distance(f, ts, ys);
      if (d < best.sup) best = Candidate{f, d, 1};
    }
    candidates.push_back(best);
  }

  // Geometric: exact one-point estimate, least squares refinement on logit p.
  {
    const double p_est = ym * (1.0 - tm) / (tm * (1.0 - ym));
    if (p_est > 0.0 && p_est < 1.0) {
      const double x0 = std::log(p_est / (1.0 - p_est));
      const auto g = [&](double x) {
        return sse(PgfFamily::geometric1(1.0 / (1.0 + std::exp(-x))), ts, ys);
      };
      const double x = golden_min(g, x0 - 1.5, x0 + 1.5, 48);
      const PgfFamily f = PgfFamily::geometric1(1.0 / (1.0 + std::exp(-x)));
      candidates.push_back(Candidate{f, sup_distance(f, ts, ys), 1});
    }
  }

  // Sibuya: one-point estimate of nu, refined within (0, 1].
  {
    const double nu_est = std::log(1.0 - ym) / std::log(1.0 - tm);
    if (nu_est > 0.0 && nu_est <= 1.5) {
      const double lo = std::max(1e-3, 0.5 * nu_est);
      const double hi = std::min(1.0, std::max(lo + 1e-6, 1.5 * nu_est));
      const auto g = [&](double nu) { return sse(PgfFamily::sibuya(nu), ts, ys); };
      const double nu = golden_min(g, lo, hi, 48);
      const PgfFamily f = PgfFamily::sibuya(nu);
      candidates.push_back(Candidate{f, sup_distance(f, ts, ys), 1});
    }
  }

  // Harris: for each small k, a has a one-point closed estimate
  // a = ((t/y)^k - t^k) / (1 - t^k), refined on log(a-1).
  {
    Candidate best{PgfFamily::harris(2.0, 1)};
    bool found = false;
    for (long k = 1; k <= 8; ++k) {
      const double tk = std::pow(tm, static_cast<double>(k));
      const double a_est = (std::pow(tm / ym, static_cast<double>(k)) - tk) / (1.0 - tk);
      if (!(a_est > 1.0)) continue;
      const double x0 = std::log(a_est - 1.0);
      const auto g = [&](double x) {
        return sse(PgfFamily::harris(1.0 + std::exp(x), k), ts, ys);
      };
      const double x = golden_min(g, x0 - 1.5, x0 + 1.5, 48);
      const PgfFamily f = PgfFamily::harris(1.0 + std::exp(x), k);
      const double d = sup_distance(f, ts, ys);
      if (!found || d < best.sup) {
        best = Candidate{f, d, 2};
        found = true;
      }
    }
    if (found) candidates.push_back(best);
  }

  ClassifyResult result;
  result.best_distance = std::numeric_limits<double>::infinity();
  const Candidate* chosen = nullptr;
  for (const Candidate& cand : candidates) {
    result.best_distance = std::min(result.best_distance, cand.sup);
    if (cand.sup >= 1e-8) continue;
    // Among matches, fewer parameters win; earlier entry breaks exact ties.
    if (!chosen || cand.params < chosen->params ||
        (cand.params == chosen->params && cand.sup < chosen->sup))
      chosen = &cand;
  }
  if (chosen) result.matched = MatchedCompounder{chosen->family, chosen->sup};
  return result;
}

Eigen::ArrayXd fit_power_series(const std::function<double(double)>& f, int degree,
                                double t_hi) {
  if (degree < 1) throw std::invalid_argument("power series fit needs degree >= 1");
  if (!(t_hi > 0.0 && t_hi < 1.0))
    throw std::invalid_argument("power series fit window needs t_hi in (0,1)");
  constexpr double kPi = 3.14159265358979323846;
  const int m = 201;
  Eigen::MatrixXd design(m, degree + 1);
  Eigen::VectorXd rhs(m);
  for (int j = 0; j < m; ++j) {
    // Chebyshev roots mapped into (0, t_hi): clustered toward the ends but
    // never touching them.
    const double node =
        t_hi * 0.5 * (1.0 + std::cos((2.0 * j + 1.0) * kPi / (2.0 * m)));
    const double scaled = node / t_hi;
    double power = 1.0;
    for (int k = 0; k <= degree; ++k) {
      design(j, k) = power;
      power *= scaled;
    }
    rhs[j] = f(node);
  }
  Eigen::BDCSVD<Eigen::MatrixXd> svd(design, Eigen::ComputeThinU | Eigen::ComputeThinV);
  svd.setThreshold(1e-10);
  const Eigen::VectorXd sol = svd.solve(rhs);
  Eigen::ArrayXd coeffs(degree + 1);
  double scale = 1.0;
  for (int k = 0; k <= degree; ++k) {
    coeffs[k] = sol[k] / scale;
    scale *= t_hi;
  }
  return coeffs;
}

bool check_power_pgf(const PgfFamily& p, double u) {
  if (!(u > 0.0)) throw std::invalid_argument("power substitution needs u > 0");
  // Fractional exponents kink t -> P(t^u) at zero, and a polynomial fit
  // absorbs the kink only through large oscillating coefficients. Inside the
  // 0.6 window the degree-64 truncation of any pgf is representable to about
  // 1e-14 (tail mass below 0.6^64), which keeps genuine pgfs within a few
  // 1e-3 of the nonnegative cone in the scaled variable while fractional
  // exponents land orders of magnitude lower. Kinks weaker than about t^7
  // sit below the resolution of a double precision fit.
  constexpr double kWindow = 0.6;
  const auto f = [&](double t) { return eval_pgf(p, std::pow(t, u)); };
  const Eigen::ArrayXd coeffs = fit_power_series(f, 64, kWindow);
  double worst = 0.0;
  double scale = 1.0;
  for (Eigen::Index n = 0; n < coeffs.size(); ++n) {
    worst = std::min(worst, coeffs[n] * scale);
    scale *= kWindow;
  }
  return worst >= -0.05;
}

namespace {

// Shared tail of both identify routes: classify the recovered curve, then
// produce a pmf either from the matched family (contour extraction) or from
// a power series fit of the curve itself.
IdentifiedCompounder finish_identify(std::function<double(double)> curve, double t_lo,
                                     double c) {
  IdentifiedCompounder out;
  out.curve = curve;
  out.t_lo = t_lo;
  out.c = c;
  const ClassifyResult cls = classify_compounder(curve, t_lo);
  out.matched = cls.matched;
  if (cls.matched) {
    out.pmf = extract_pmf(cls.matched->family, ExtractOptions{64, 0.7});
    out.verdict = is_pgf_coeffs_noise_aware(out.pmf, 1e-10);
    return out;
  }
  const Eigen::ArrayXd coeffs = fit_power_series(curve, 64);
  out.pmf.coeffs = coeffs;
  out.pmf.radius = 0.95;
  out.pmf.mass_deficiency = 1.0 - coeffs.sum();
  for (Eigen::Index n = 0; n < coeffs.size(); ++n) {
    if (coeffs[n] < -1e-10) {
      out.pmf.first_negative_index = static_cast<int>(n);
      break;
    }
  }
  // Fit noise sits well above extraction noise; the sign test uses the
  // looser fit threshold.
  out.verdict = is_pgf_coeffs(out.pmf, 1e-6);
  return out;
}

}  // namespace

IdentifiedCompounder identify_from_lt(const LtFamily& phi, double c) {
  if (!(c > 0.0 && c < 1.0)) throw std::domain_error("identification needs c in (0,1)");
  auto curve = [phi, c](double t) -> double {
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    const double s = invert_monotone_transform(
        [&phi, c](double x) { return eval_lt(phi, c * x); }, t, true);
    return eval_lt(phi, s);
  };
  return finish_identify(curve, 0.0, c);
}

IdentifiedCompounder identify_from_pgf(const DiscretePgf& q, double c) {
  if (!(c > 0.0 && c < 1.0)) throw std::domain_error("identification needs c in (0,1)");
  const double t_lo = eval_discrete_pgf(q, 1.0 - c);
  auto curve = [q, c](double t) -> double {
    if (t >= 1.0) return 1.0;
    const double s = invert_monotone_transform(
        [&q, c](double x) { return eval_discrete_pgf(q, 1.0 - c + c * x); }, t, false);
    return eval_discrete_pgf(q, s);
  };
  return finish_identify(curve, t_lo, c);
}

}  // namespace randstab
