#include "randstab/discrete.hpp"

#include <cmath>
#include <functional>
#include <sstream>
#include <vector>

namespace randstab {

DiscretePgf DiscretePgf::discrete_stable(double lambda, double alpha) {
  if (!(lambda > 0.0)) throw std::invalid_argument("discrete stable needs lambda > 0");
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw std::invalid_argument("discrete stable needs alpha in (0,1]");
  DiscretePgf q(Form::kDiscreteStable);
  q.lambda_ = lambda;
  q.alpha_ = alpha;
  return q;
}

DiscretePgf DiscretePgf::discrete_ml(double lambda, double alpha) {
  if (!(lambda > 0.0)) throw std::invalid_argument("discrete mittag-leffler needs lambda > 0");
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw std::invalid_argument("discrete mittag-leffler needs alpha in (0,1]");
  DiscretePgf q(Form::kDiscreteML);
  q.lambda_ = lambda;
  q.alpha_ = alpha;
  return q;
}

DiscretePgf DiscretePgf::discrete_linnik(double lambda, double alpha, double beta) {
  if (!(lambda > 0.0)) throw std::invalid_argument("discrete linnik needs lambda > 0");
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw std::invalid_argument("discrete linnik needs alpha in (0,1]");
  if (!(beta > 0.0)) throw std::invalid_argument("discrete linnik needs beta > 0");
  DiscretePgf q(Form::kDiscreteLinnik);
  q.lambda_ = lambda;
  q.alpha_ = alpha;
  q.beta_ = beta;
  return q;
}

DiscretePgf DiscretePgf::discrete_gen_sml(const ScaleFunction& psi, double beta) {
  if (!(psi.alpha() <= 1.0))
    throw std::invalid_argument("discrete generalized semi-ml needs alpha in (0,1]");
  if (!(beta > 0.0)) throw std::invalid_argument("discrete generalized semi-ml needs beta > 0");
  DiscretePgf q(Form::kDiscreteGenSML);
  q.psi_ = psi;
  q.beta_ = beta;
  return q;
}

DiscretePgf DiscretePgf::sibuya_bernoulli(double delta, double nu) {
  if (!(delta > 0.0 && delta <= 1.0))
    throw std::invalid_argument("sibuya-bernoulli needs delta in (0,1]");
  if (!(nu > 0.0 && nu <= 1.0))
    throw std::invalid_argument("sibuya-bernoulli needs nu in (0,1]");
  DiscretePgf q(Form::kSibuyaBernoulli);
  q.delta_ = delta;
  q.nu_ = nu;
  return q;
}

DiscretePgf DiscretePgf::from_pgf(const PgfFamily& pgf) {
  DiscretePgf q(Form::kNativePgf);
  q.native_ = pgf;
  return q;
}

namespace {

bool lt_integer_powers(const LtFamily& phi) {
  switch (phi.tag()) {
    case LtFamily::Tag::kGamma:
      return phi.beta() == std::nearbyint(phi.beta());
    case LtFamily::Tag::kMittagLeffler:
      return phi.alpha() == 1.0;
    case LtFamily::Tag::kPositiveLinnik:
      return phi.alpha() == 1.0 && phi.beta() == std::nearbyint(phi.beta());
    case LtFamily::Tag::kPositiveStable:
      return phi.alpha() == 1.0;
    case LtFamily::Tag::kSemiML:
    case LtFamily::Tag::kGenSemiML:
    case LtFamily::Tag::kSemiStable:
      return false;
  }
  return false;
}

}  // namespace

bool DiscretePgf::integer_powers_only() const {
  switch (form_) {
    case Form::kDiscreteStable:
    case Form::kDiscreteML:
      return alpha_ == 1.0;
    case Form::kDiscreteLinnik:
      return alpha_ == 1.0 && beta_ == std::nearbyint(beta_);
    case Form::kDiscreteGenSML:
      return psi_->is_pure_power() && psi_->alpha() == 1.0 &&
             beta_ == std::nearbyint(beta_);
    case Form::kSibuyaBernoulli:
      return nu_ == 1.0;
    case Form::kLtAnalogue:
      return lt_integer_powers(*source_);
    case Form::kNativePgf:
      return native_->integer_powers_only();
  }
  return false;
}

DiscretePgf discretize(const LtFamily& phi) {
  switch (phi.tag()) {
    case LtFamily::Tag::kPositiveStable:
      return DiscretePgf::discrete_stable(phi.lambda(), phi.alpha());
    case LtFamily::Tag::kMittagLeffler:
      return DiscretePgf::discrete_ml(phi.lambda(), phi.alpha());
    case LtFamily::Tag::kPositiveLinnik:
      return DiscretePgf::discrete_linnik(phi.lambda(), phi.alpha(), phi.beta());
    case LtFamily::Tag::kSemiML:
      return DiscretePgf::discrete_gen_sml(phi.psi(), 1.0);
    case LtFamily::Tag::kGenSemiML:
      return DiscretePgf::discrete_gen_sml(phi.psi(), phi.beta());
    case LtFamily::Tag::kGamma:
    case LtFamily::Tag::kSemiStable: {
      DiscretePgf q(DiscretePgf::Form::kLtAnalogue);
      q.source_ = phi;
      return q;
    }
  }
  throw std::logic_error("unreachable");
}

DiscretePgf d_type_transform(const DiscretePgf& q, double c) {
  if (!(c > 0.0 && c < 1.0)) throw std::invalid_argument("thinning rate needs c in (0,1)");
  DiscretePgf out = q;
  switch (q.form_) {
    case DiscretePgf::Form::kDiscreteStable:
    case DiscretePgf::Form::kDiscreteML:
    case DiscretePgf::Form::kDiscreteLinnik:
      out.lambda_ *= std::pow(c, q.alpha_);
      return out;
    case DiscretePgf::Form::kSibuyaBernoulli:
      out.delta_ *= std::pow(c, q.nu_);
      return out;
    case DiscretePgf::Form::kDiscreteGenSML: {
      const ScaleFunction& psi = *q.psi_;
      if (psi.is_pure_power()) {
        out.psi_ = ScaleFunction::pure_power(psi.lambda() * std::pow(c, psi.alpha()),
                                             psi.alpha());
        return out;
      }
      // The log-periodic exponent absorbs thinning exactly when c is an
      // integer power of its b, because the phase shifts by whole periods.
      const double steps = std::log(c) / std::log(psi.b());
      if (std::abs(steps - std::nearbyint(steps)) < 1e-12) {
        out.psi_ = ScaleFunction::log_periodic(psi.lambda() * std::pow(c, psi.alpha()),
                                               psi.alpha(), psi.b(), psi.eps());
        return out;
      }
      out.thin_ *= c;
      return out;
    }
    case DiscretePgf::Form::kLtAnalogue:
    case DiscretePgf::Form::kNativePgf:
      out.thin_ *= c;
      return out;
  }
  throw std::logic_error("unreachable");
}

double eval_discrete_pgf(const DiscretePgf& q, double s) {
  if (!(s >= 0.0 && s <= 1.0))
    throw std::domain_error("real pgf argument needs s in [0,1]");
  return q.value(s);
}

Eigen::ArrayXd eval_discrete_pgf(const DiscretePgf& q, const Eigen::ArrayXd& s) {
  Eigen::ArrayXd out(s.size());
  for (Eigen::Index i = 0; i < s.size(); ++i) out[i] = eval_discrete_pgf(q, s[i]);
  return out;
}

cdouble eval_discrete_pgf(const DiscretePgf& q, cdouble s) {
  const double r = std::abs(s);
  if (r > 1.0 + 1e-12) {
    std::ostringstream msg;
    msg << "complex pgf argument of modulus " << r
        << " is outside the unit disk; lower the evaluation radius";
    throw std::domain_error(msg.str());
  }
  return q.value(s);
}

namespace {

constexpr double kPi = 3.14159265358979323846;

PmfTable extract_impl(const std::function<cdouble(cdouble)>& eval, bool integer_only,
                      const ExtractOptions& opts) {
  if (opts.n_max < 1) throw std::invalid_argument("extraction needs n_max >= 1");
  if (!(opts.radius > 0.0 && opts.radius < 1.0))
    throw std::invalid_argument("extraction radius needs r in (0,1)");
  if (!integer_only && opts.radius > 0.75)
    throw std::domain_error(
        "extraction radius above 0.75 is unreliable for fractional power "
        "forms; lower the radius");

  const int m = 4 * opts.n_max;
  std::vector<cdouble> vals(static_cast<std::size_t>(m));
  std::vector<cdouble> roots(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) {
    const double angle = 2.0 * kPi * j / m;
    roots[static_cast<std::size_t>(j)] = std::polar(1.0, -angle);
    vals[static_cast<std::size_t>(j)] = eval(std::polar(opts.radius, angle));
  }

  PmfTable table;
  table.radius = opts.radius;
  table.coeffs.resize(opts.n_max + 1);
  for (int n = 0; n <= opts.n_max; ++n) {
    cdouble acc(0.0, 0.0);
    for (int j = 0; j < m; ++j)
      acc += vals[static_cast<std::size_t>(j)] *
             roots[static_cast<std::size_t>((static_cast<long>(n) * j) % m)];
    table.coeffs[n] = acc.real() / m / std::pow(opts.radius, n);
  }
  table.mass_deficiency = 1.0 - table.coeffs.sum();
  for (int n = 0; n <= opts.n_max; ++n) {
    if (table.coeffs[n] < -1e-10) {
      table.first_negative_index = n;
      break;
    }
  }
  return table;
}

}  // namespace

PmfTable extract_pmf(const DiscretePgf& q, const ExtractOptions& opts) {
  return extract_impl([&q](cdouble z) { return eval_discrete_pgf(q, z); },
                      q.integer_powers_only(), opts);
}

PmfTable extract_pmf(const PgfFamily& p, const ExtractOptions& opts) {
  return extract_impl([&p](cdouble z) { return eval_pgf(p, z); },
                      p.integer_powers_only(), opts);
}

double extraction_noise_floor(int n, double radius) {
  // Worst-case accumulation of roundoff across the averaging sum, then the
  // r^(-n) rescaling. Deliberately conservative (observed noise sits one to
  // two decades below).
  constexpr double kEps = 2.220446049250313e-16;
  return 64.0 * kEps * std::pow(radius, -static_cast<double>(n));
}

PgfCheck is_pgf_coeffs(const PmfTable& table, double tol) {
  PgfCheck check;
  check.ok = table.mass_deficiency >= -tol;
  for (Eigen::Index n = 0; n < table.coeffs.size(); ++n) {
    if (table.coeffs[n] < -tol) {
      check.first_negative_index = static_cast<int>(n);
      check.ok = false;
      break;
    }
  }
  return check;
}

PgfCheck is_pgf_coeffs_noise_aware(const PmfTable& table, double tol) {
  PgfCheck check;
  double mass_tol = tol;
  check.ok = true;
  for (Eigen::Index n = 0; n < table.coeffs.size(); ++n) {
    const double local =
        std::max(tol, extraction_noise_floor(static_cast<int>(n), table.radius));
    mass_tol += local;
    if (check.ok && table.coeffs[n] < -local) {
      check.first_negative_index = static_cast<int>(n);
      check.ok = false;
    }
  }
  if (table.mass_deficiency < -mass_tol) check.ok = false;
  return check;
}

double check_selfdecomp_identity(const DiscretePgf& q, double alpha, double c,
                                 const Eigen::ArrayXd& grid) {
  if (!(c > 0.0 && c < 1.0)) throw std::invalid_argument("splitting needs c in (0,1)");
  const double c2 = std::pow(1.0 - std::pow(c, alpha), 1.0 / alpha);
  const DiscretePgf qa = d_type_transform(q, c);
  const DiscretePgf qb = d_type_transform(q, c2);
  double worst = 0.0;
  for (Eigen::Index i = 0; i < grid.size(); ++i) {
    const double s = grid[i];
    worst = std::max(worst, std::abs(eval_discrete_pgf(q, s) -
                                     eval_discrete_pgf(qa, s) * eval_discrete_pgf(qb, s)));
  }
  return worst;
}

double check_selfdecomp_discrete_stable(double lambda, double alpha, double c,
                                        const Eigen::ArrayXd& grid) {
  return check_selfdecomp_identity(DiscretePgf::discrete_stable(lambda, alpha), alpha, c,
                                   grid);
}

double compose_sibuya_bernoulli(double lambda, double delta, double nu,
                                const Eigen::ArrayXd& grid) {
  const PgfFamily p = PgfFamily::bernoulli_shift(lambda);
  const DiscretePgf q = DiscretePgf::sibuya_bernoulli(delta, nu);
  double worst = 0.0;
  for (Eigen::Index i = 0; i < grid.size(); ++i) {
    const double s = grid[i];
    const double lhs = eval_pgf(p, eval_discrete_pgf(q, s));
    const double rhs = 1.0 - lambda * delta * std::pow(1.0 - s, nu);
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

}  // namespace randstab
