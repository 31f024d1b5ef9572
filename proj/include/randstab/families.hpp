#pragma once

#include <cmath>
#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

#include <Eigen/Core>

#include "randstab/scale_function.hpp"

namespace randstab {

using cdouble = std::complex<double>;

namespace detail {

// Integer power by squaring; keeps small integer exponents exact and avoids
// pow's branch handling for complex bases.
template <class Scalar>
Scalar ipow(Scalar base, long k) {
  Scalar acc = Scalar(1);
  while (k > 0) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Laplace transform families on [0, infinity).
// ---------------------------------------------------------------------------

class LtFamily {
 public:
  enum class Tag {
    kGamma,            // (1+s)^(-beta)
    kMittagLeffler,    // 1 / (1 + lambda * s^alpha)
    kPositiveLinnik,   // (1 + lambda * s^alpha)^(-beta)
    kSemiML,           // 1 / (1 + psi(s))
    kGenSemiML,        // (1 + psi(s))^(-beta)
    kPositiveStable,   // exp(-lambda * s^alpha)
    kSemiStable,       // exp(-psi(s))
  };

  static LtFamily gamma(double beta) {
    require(beta > 0.0, "gamma needs beta > 0");
    return LtFamily(Tag::kGamma, 0.0, 0.0, beta);
  }
  static LtFamily mittag_leffler(double alpha, double lambda) {
    require_alpha01(alpha);
    require(lambda > 0.0, "mittag-leffler needs lambda > 0");
    return LtFamily(Tag::kMittagLeffler, alpha, lambda, 1.0);
  }
  static LtFamily positive_linnik(double alpha, double lambda, double beta) {
    require_alpha01(alpha);
    require(lambda > 0.0, "positive linnik needs lambda > 0");
    require(beta > 0.0, "positive linnik needs beta > 0");
    return LtFamily(Tag::kPositiveLinnik, alpha, lambda, beta);
  }
  static LtFamily semi_ml(const ScaleFunction& psi) {
    require_alpha01(psi.alpha());
    return LtFamily(Tag::kSemiML, psi, 1.0);
  }
  static LtFamily gen_semi_ml(const ScaleFunction& psi, double beta) {
    require_alpha01(psi.alpha());
    require(beta > 0.0, "generalized semi-ml needs beta > 0");
    return LtFamily(Tag::kGenSemiML, psi, beta);
  }
  static LtFamily positive_stable(double alpha, double lambda) {
    require_alpha01(alpha);
    require(lambda > 0.0, "positive stable needs lambda > 0");
    return LtFamily(Tag::kPositiveStable, alpha, lambda, 1.0);
  }
  static LtFamily semi_stable(const ScaleFunction& psi) {
    require_alpha01(psi.alpha());
    return LtFamily(Tag::kSemiStable, psi, 1.0);
  }

  Tag tag() const { return tag_; }
  double alpha() const { return psi_ ? psi_->alpha() : alpha_; }
  double lambda() const { return psi_ ? psi_->lambda() : lambda_; }
  double beta() const { return beta_; }
  bool has_psi() const { return psi_.has_value(); }
  const ScaleFunction& psi() const {
    if (!psi_) throw std::logic_error("family has no scale function");
    return *psi_;
  }

  template <class Scalar>
  Scalar value(Scalar s) const {
    using std::exp;
    using std::pow;
    switch (tag_) {
      case Tag::kGamma:
        return pow(Scalar(1) + s, -beta_);
      case Tag::kMittagLeffler:
        return Scalar(1) / (Scalar(1) + Scalar(lambda_) * pow_or_zero(s, alpha_));
      case Tag::kPositiveLinnik:
        return pow(Scalar(1) + Scalar(lambda_) * pow_or_zero(s, alpha_), -beta_);
      case Tag::kSemiML:
        return Scalar(1) / (Scalar(1) + psi_->value(s));
      case Tag::kGenSemiML:
        return pow(Scalar(1) + psi_->value(s), -beta_);
      case Tag::kPositiveStable:
        return exp(-Scalar(lambda_) * pow_or_zero(s, alpha_));
      case Tag::kSemiStable:
        return exp(-psi_->value(s));
    }
    throw std::logic_error("unreachable");
  }

 private:
  LtFamily(Tag tag, double alpha, double lambda, double beta)
      : tag_(tag), alpha_(alpha), lambda_(lambda), beta_(beta) {}
  LtFamily(Tag tag, const ScaleFunction& psi, double beta)
      : tag_(tag), beta_(beta), psi_(psi) {}

  static void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
  }
  static void require_alpha01(double alpha) {
    require(alpha > 0.0 && alpha <= 1.0, "laplace families need alpha in (0,1]");
  }

  // s^alpha with the removable singularity at s = 0 filled in.
  template <class Scalar>
  static Scalar pow_or_zero(Scalar s, double alpha) {
    using std::pow;
    if (s == Scalar(0)) return Scalar(0);
    return pow(s, Scalar(alpha));
  }

  Tag tag_;
  double alpha_ = 0.0;
  double lambda_ = 0.0;
  double beta_ = 1.0;
  std::optional<ScaleFunction> psi_;
};

// ---------------------------------------------------------------------------
// Characteristic function families on the real line (symmetric laws, so the
// transforms here are real except for the skewed generalized Linnik).
// ---------------------------------------------------------------------------

class CfFamily {
 public:
  enum class Tag {
    kLinnik,              // (1 + lambda * |u|^alpha)^(-1)
    kGeneralizedLinnik,   // (1 + lambda * |u|^alpha * exp(-i*theta*sgn u))^(-nu)
    kSemiAlphaLaplace,    // 1 / (1 + psi(|u|))
    kGenSemiAlphaLaplace, // (1 + psi(|u|))^(-nu)
  };

  static CfFamily linnik(double alpha, double lambda) {
    require_alpha02(alpha);
    require(lambda > 0.0, "linnik needs lambda > 0");
    return CfFamily(Tag::kLinnik, alpha, 0.0, 1.0, lambda);
  }
  static CfFamily generalized_linnik(double alpha, double theta, double nu, double lambda = 1.0) {
    require_alpha02(alpha);
    require(nu > 0.0, "generalized linnik needs nu > 0");
    require(lambda > 0.0, "generalized linnik needs lambda > 0");
    const double bound = theta_bound(alpha);
    if (!(std::abs(theta) <= bound + 1e-12))
      throw std::invalid_argument("generalized linnik skew theta outside the admissible region");
    return CfFamily(Tag::kGeneralizedLinnik, alpha, theta, nu, lambda);
  }
  static CfFamily semi_alpha_laplace(const ScaleFunction& psi) {
    require_alpha02(psi.alpha());
    return CfFamily(Tag::kSemiAlphaLaplace, psi, 1.0);
  }
  static CfFamily gen_semi_alpha_laplace(const ScaleFunction& psi, double nu) {
    require_alpha02(psi.alpha());
    require(nu > 0.0, "generalized semi-alpha-laplace needs nu > 0");
    return CfFamily(Tag::kGenSemiAlphaLaplace, psi, nu);
  }

  static double theta_bound(double alpha) {
    const double half_pi_alpha = kPi * alpha / 2.0;
    return std::min(half_pi_alpha, kPi - half_pi_alpha);
  }

  Tag tag() const { return tag_; }
  double alpha() const { return psi_ ? psi_->alpha() : alpha_; }
  double theta() const { return theta_; }
  double nu() const { return nu_; }
  double lambda() const { return psi_ ? psi_->lambda() : lambda_; }
  bool has_psi() const { return psi_.has_value(); }
  const ScaleFunction& psi() const {
    if (!psi_) throw std::logic_error("family has no scale function");
    return *psi_;
  }

  cdouble value(double u) const {
    if (u == 0.0) return cdouble(1.0, 0.0);
    const double au = std::abs(u);
    switch (tag_) {
      case Tag::kLinnik:
        return cdouble(1.0 / (1.0 + lambda_ * std::pow(au, alpha_)), 0.0);
      case Tag::kGeneralizedLinnik: {
        const double sgn = u > 0.0 ? 1.0 : -1.0;
        const cdouble base = cdouble(1.0, 0.0) +
            lambda_ * std::pow(au, alpha_) * std::exp(cdouble(0.0, -theta_ * sgn));
        return std::pow(base, -nu_);
      }
      case Tag::kSemiAlphaLaplace:
        return cdouble(1.0 / (1.0 + psi_->value(au)), 0.0);
      case Tag::kGenSemiAlphaLaplace:
        return cdouble(std::pow(1.0 + psi_->value(au), -nu_), 0.0);
    }
    throw std::logic_error("unreachable");
  }

 private:
  CfFamily(Tag tag, double alpha, double theta, double nu, double lambda)
      : tag_(tag), alpha_(alpha), theta_(theta), nu_(nu), lambda_(lambda) {}
  CfFamily(Tag tag, const ScaleFunction& psi, double nu)
      : tag_(tag), nu_(nu), psi_(psi) {}

  static void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
  }
  static void require_alpha02(double alpha) {
    require(alpha > 0.0 && alpha <= 2.0, "characteristic families need alpha in (0,2]");
  }

  static constexpr double kPi = 3.14159265358979323846;

  Tag tag_;
  double alpha_ = 0.0;
  double theta_ = 0.0;
  double nu_ = 1.0;
  double lambda_ = 1.0;
  std::optional<ScaleFunction> psi_;
};

// Either transform of a positive or real law; operations that accept both
// dispatch on the alternative.
using TransformFamily = std::variant<LtFamily, CfFamily>;

// ---------------------------------------------------------------------------
// Probability generating function families on {0,1,2,...}.
// ---------------------------------------------------------------------------

class PgfFamily {
 public:
  enum class Tag {
    kHarris,         // t * (a - (a-1) * t^k)^(-1/k)
    kGeometric1,     // p*t / (1 - (1-p)*t), support {1,2,...}
    kSibuya,         // 1 - (1-t)^nu
    kDegenerate,     // t^k
    kBernoulliShift, // 1 - lambda*(1-t)
  };

  static PgfFamily harris(double a, long k) {
    require(a > 1.0, "harris needs a > 1");
    require(k >= 1, "harris needs integer k >= 1");
    PgfFamily f(Tag::kHarris);
    f.a_ = a;
    f.k_ = k;
    return f;
  }
  static PgfFamily geometric1(double p) {
    require(p > 0.0 && p < 1.0, "geometric1 needs p in (0,1)");
    PgfFamily f(Tag::kGeometric1);
    f.p_ = p;
    return f;
  }
  static PgfFamily sibuya(double nu) {
    require(nu > 0.0 && nu <= 1.0, "sibuya needs nu in (0,1]");
    PgfFamily f(Tag::kSibuya);
    f.nu_ = nu;
    return f;
  }
  static PgfFamily degenerate(long k) {
    require(k >= 1, "degenerate needs integer k >= 1");
    PgfFamily f(Tag::kDegenerate);
    f.k_ = k;
    return f;
  }
  static PgfFamily bernoulli_shift(double lambda) {
    require(lambda > 0.0 && lambda <= 1.0, "bernoulli shift needs lambda in (0,1]");
    PgfFamily f(Tag::kBernoulliShift);
    f.lambda_ = lambda;
    return f;
  }

  Tag tag() const { return tag_; }
  double a() const { return a_; }
  long k() const { return k_; }
  double p() const { return p_; }
  double nu() const { return nu_; }
  double lambda() const { return lambda_; }

  // True when every power in the formula has an integer exponent, so the
  // complex extension is entire and extraction radii are unconstrained.
  bool integer_powers_only() const {
    switch (tag_) {
      case Tag::kHarris:
        return k_ == 1;
      case Tag::kGeometric1:
      case Tag::kDegenerate:
      case Tag::kBernoulliShift:
        return true;
      case Tag::kSibuya:
        return nu_ == 1.0;
    }
    return false;
  }

  template <class Scalar>
  Scalar value(Scalar t) const {
    using std::pow;
    switch (tag_) {
      case Tag::kHarris: {
        const Scalar base = Scalar(a_) - Scalar(a_ - 1.0) * detail::ipow(t, k_);
        return t * pow(base, Scalar(-1.0 / static_cast<double>(k_)));
      }
      case Tag::kGeometric1:
        return Scalar(p_) * t / (Scalar(1) - Scalar(1.0 - p_) * t);
      case Tag::kSibuya:
        return Scalar(1) - pow(Scalar(1) - t, Scalar(nu_));
      case Tag::kDegenerate:
        return detail::ipow(t, k_);
      case Tag::kBernoulliShift:
        return Scalar(1) - Scalar(lambda_) * (Scalar(1) - t);
    }
    throw std::logic_error("unreachable");
  }

 private:
  explicit PgfFamily(Tag tag) : tag_(tag) {}
  static void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
  }

  Tag tag_;
  double a_ = 2.0;
  long k_ = 1;
  double p_ = 0.5;
  double nu_ = 1.0;
  double lambda_ = 1.0;
};

// ---------------------------------------------------------------------------
// Evaluation entry points. Scalar forms validate domains; array forms map the
// scalar form over Eigen arrays.
// ---------------------------------------------------------------------------

double eval_lt(const LtFamily& f, double s);
Eigen::ArrayXd eval_lt(const LtFamily& f, const Eigen::ArrayXd& s);

cdouble eval_cf(const CfFamily& f, double u);
Eigen::ArrayXcd eval_cf(const CfFamily& f, const Eigen::ArrayXd& u);

double eval_pgf(const PgfFamily& f, double t);
Eigen::ArrayXd eval_pgf(const PgfFamily& f, const Eigen::ArrayXd& t);

// Complex evaluation used by coefficient extraction. Arguments must satisfy
// |t| <= 1, which keeps every fractional power base inside the right half
// plane; the error message names the offending radius.
cdouble eval_pgf(const PgfFamily& f, cdouble t);

}  // namespace randstab
