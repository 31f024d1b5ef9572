#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <type_traits>

#include <Eigen/Core>

namespace randstab {

// Exponent function psi satisfying the scale equation
//
//   psi(u) = a * psi(b * u),   a * b^alpha = 1,   0 < b < 1 < a.
//
// Two shapes are provided: the pure power lambda * u^alpha (which satisfies
// the equation for every admissible (a,b) pair), and a log-periodic
// perturbation
//
//   psi(u) = lambda * u^alpha * (1 + eps * cos(2*pi * ln(u) / ln(1/b)))
//
// which satisfies it exactly for the specific b it was built with. The
// perturbed shape is an algebraic witness that non-power solutions exist; it
// is evaluated, never sampled.
class ScaleFunction {
 public:
  enum class Kind { kPurePower, kLogPeriodic };

  static ScaleFunction pure_power(double lambda, double alpha) {
    check_positive(lambda, alpha);
    ScaleFunction f;
    f.kind_ = Kind::kPurePower;
    f.lambda_ = lambda;
    f.alpha_ = alpha;
    return f;
  }

  // The (a,b) pair is derived from b via a = b^(-alpha).
  static ScaleFunction log_periodic(double lambda, double alpha, double b, double eps = 0.05) {
    check_positive(lambda, alpha);
    if (!(b > 0.0 && b < 1.0)) throw std::invalid_argument("log-periodic scale needs 0 < b < 1");
    if (!(eps >= 0.0 && eps < 1.0)) throw std::invalid_argument("log-periodic amplitude needs 0 <= eps < 1");
    ScaleFunction f;
    f.kind_ = Kind::kLogPeriodic;
    f.lambda_ = lambda;
    f.alpha_ = alpha;
    f.b_ = b;
    f.eps_ = eps;
    return f;
  }

  Kind kind() const { return kind_; }
  double lambda() const { return lambda_; }
  double alpha() const { return alpha_; }
  double eps() const { return eps_; }
  bool is_pure_power() const { return kind_ == Kind::kPurePower; }

  // The b the function was built with; pure powers accept any b in (0,1), so
  // callers pass their own pair there.
  double b() const {
    if (kind_ == Kind::kPurePower) throw std::logic_error("pure power scale has no intrinsic b");
    return b_;
  }
  double a() const { return std::pow(b(), -alpha_); }

  // Principal branch throughout; complex arguments are restricted by callers
  // to the right half plane where log and pow are continuous.
  template <class Scalar>
  Scalar value(Scalar u) const {
    using std::cos;
    using std::log;
    using std::pow;
    if constexpr (std::is_floating_point_v<Scalar>) {
      if (u < Scalar(0)) throw std::domain_error("scale function argument must be >= 0");
    }
    if (u == Scalar(0)) return Scalar(0);
    const Scalar power = lambda_ * pow(u, Scalar(alpha_));
    if (kind_ == Kind::kPurePower) return power;
    const double g = 2.0 * kPi / std::log(1.0 / b_);
    return power * (Scalar(1) + Scalar(eps_) * cos(Scalar(g) * log(u)));
  }

  Eigen::ArrayXd value(const Eigen::ArrayXd& u) const {
    Eigen::ArrayXd out(u.size());
    for (Eigen::Index i = 0; i < u.size(); ++i) out[i] = value(u[i]);
    return out;
  }

 private:
  static void check_positive(double lambda, double alpha) {
    if (!(lambda > 0.0)) throw std::invalid_argument("scale function needs lambda > 0");
    if (!(alpha > 0.0)) throw std::invalid_argument("scale function needs alpha > 0");
  }

  static constexpr double kPi = 3.14159265358979323846;

  Kind kind_ = Kind::kPurePower;
  double lambda_ = 1.0;
  double alpha_ = 1.0;
  double b_ = 0.5;
  double eps_ = 0.0;
};

// Max relative residual |psi(u) - a * psi(b*u)| / psi(u) over the grid, with
// (a,b) taken from the function itself (pure powers check a = b^(-alpha) for
// b = 1/2).
double check_scale_equation(const ScaleFunction& psi, const Eigen::ArrayXd& grid);

// Same residual for a caller-chosen (a,b) pair; lets tests probe mismatched
// pairs that should fail.
double check_scale_equation(const ScaleFunction& psi, double a, double b, const Eigen::ArrayXd& grid);

}  // namespace randstab
