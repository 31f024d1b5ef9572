#pragma once

#include <complex>
#include <optional>
#include <stdexcept>

#include <Eigen/Core>

#include "randstab/families.hpp"
#include "randstab/scale_function.hpp"

namespace randstab {

// Probability generating function of an integer law built from a transform on
// the positive half line by the substitution
//
//   Q(s) = phi(1 - s),
//
// together with binomial thinning. Thinning by c replaces s with 1 - c + c*s;
// an accumulated thin factor tau keeps that composition exact:
//
//   Q_thinned(s) = Q_base(1 - tau * (1 - s)).
//
// For the closed power forms thinning folds into the parameters instead
// (lambda -> lambda * c^alpha and delta -> delta * c^nu), which is the
// discrete counterpart of scale invariance.
class DiscretePgf {
 public:
  enum class Form {
    kDiscreteStable,   // exp(-lambda * (1-s)^alpha)
    kDiscreteML,       // 1 / (1 + lambda * (1-s)^alpha)
    kDiscreteLinnik,   // (1 + lambda * (1-s)^alpha)^(-beta)
    kDiscreteGenSML,   // (1 + psi(1-s))^(-beta)
    kSibuyaBernoulli,  // 1 - delta * (1-s)^nu
    kLtAnalogue,       // phi(1-s) for a stored Laplace family
    kNativePgf,        // a PgfFamily, thinnable like the others
  };

  static DiscretePgf discrete_stable(double lambda, double alpha);
  static DiscretePgf discrete_ml(double lambda, double alpha);
  static DiscretePgf discrete_linnik(double lambda, double alpha, double beta);
  static DiscretePgf discrete_gen_sml(const ScaleFunction& psi, double beta);
  static DiscretePgf sibuya_bernoulli(double delta, double nu);
  static DiscretePgf from_pgf(const PgfFamily& pgf);

  Form form() const { return form_; }
  double lambda() const { return lambda_; }
  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  double delta() const { return delta_; }
  double nu() const { return nu_; }
  double thin_factor() const { return thin_; }
  bool has_psi() const { return psi_.has_value(); }
  const ScaleFunction& psi() const {
    if (!psi_) throw std::logic_error("discrete pgf has no scale function");
    return *psi_;
  }
  const LtFamily* source_lt() const { return source_ ? &*source_ : nullptr; }
  const PgfFamily* native_pgf() const { return native_ ? &*native_ : nullptr; }

  bool integer_powers_only() const;

  template <class Scalar>
  Scalar value(Scalar s) const {
    using std::exp;
    using std::pow;
    const Scalar w = Scalar(thin_) * (Scalar(1) - s);
    switch (form_) {
      case Form::kDiscreteStable:
        return exp(-Scalar(lambda_) * pow_or_zero(w, alpha_));
      case Form::kDiscreteML:
        return Scalar(1) / (Scalar(1) + Scalar(lambda_) * pow_or_zero(w, alpha_));
      case Form::kDiscreteLinnik:
        return pow(Scalar(1) + Scalar(lambda_) * pow_or_zero(w, alpha_), -beta_);
      case Form::kDiscreteGenSML:
        return pow(Scalar(1) + psi_->value(w), -beta_);
      case Form::kSibuyaBernoulli:
        return Scalar(1) - Scalar(delta_) * pow_or_zero(w, nu_);
      case Form::kLtAnalogue:
        return source_->value(w);
      case Form::kNativePgf:
        return native_->value(Scalar(1) - w);
    }
    throw std::logic_error("unreachable");
  }

  friend DiscretePgf d_type_transform(const DiscretePgf& q, double c);
  friend DiscretePgf discretize(const LtFamily& phi);

 private:
  explicit DiscretePgf(Form form) : form_(form) {}

  template <class Scalar>
  static Scalar pow_or_zero(Scalar w, double e) {
    using std::pow;
    if (w == Scalar(0)) return Scalar(0);
    return pow(w, Scalar(e));
  }

  Form form_;
  double lambda_ = 0.0;
  double alpha_ = 0.0;
  double beta_ = 1.0;
  double delta_ = 0.0;
  double nu_ = 1.0;
  double thin_ = 1.0;
  std::optional<ScaleFunction> psi_;
  std::optional<LtFamily> source_;
  std::optional<PgfFamily> native_;
};

// Builds the integer analogue Q(s) = phi(1-s) of a Laplace family, mapping
// closed power forms onto their named discrete counterparts.
DiscretePgf discretize(const LtFamily& phi);

// Binomial thinning of the underlying law by c in (0,1):
// Q(s) -> Q(1 - c + c*s). Folds into closed-form parameters when exact.
DiscretePgf d_type_transform(const DiscretePgf& q, double c);

double eval_discrete_pgf(const DiscretePgf& q, double s);
Eigen::ArrayXd eval_discrete_pgf(const DiscretePgf& q, const Eigen::ArrayXd& s);
cdouble eval_discrete_pgf(const DiscretePgf& q, cdouble s);

// Power series head of a generating function, recovered by averaging over
// scaled roots of unity: with m = 4*n_max points,
//
//   p_n = r^(-n) / m * sum_j Q(r * w^j) * w^(-n*j),   w = exp(2*pi*i/m).
//
// The r^(-n) factor amplifies roundoff, so small radii resolve fewer
// coefficients; extraction_noise_floor quantifies that.
struct PmfTable {
  Eigen::ArrayXd coeffs;       // index n = 0..n_max
  double radius = 0.0;
  double mass_deficiency = 0.0;           // 1 - sum of coeffs
  std::optional<int> first_negative_index; // first n with coeff < -1e-10
};

struct ExtractOptions {
  int n_max = 64;
  double radius = 0.5;
};

PmfTable extract_pmf(const DiscretePgf& q, const ExtractOptions& opts = {});
PmfTable extract_pmf(const PgfFamily& p, const ExtractOptions& opts = {});

// Estimated magnitude of extraction roundoff at index n for a given radius.
double extraction_noise_floor(int n, double radius);

struct PgfCheck {
  bool ok = false;
  std::optional<int> first_negative_index;
};

// Verdict on extracted coefficients at a flat tolerance.
PgfCheck is_pgf_coeffs(const PmfTable& table, double tol = 1e-10);

// Verdict with the per-index tolerance widened to the extraction noise floor.
PgfCheck is_pgf_coeffs_noise_aware(const PmfTable& table, double tol = 1e-10);

// Max residual over the grid of the two-factor splitting of a discrete
// stable generating function: Q(s) against Q at thin rate c times Q at thin
// rate (1 - c^alpha)^(1/alpha).
double check_selfdecomp_discrete_stable(double lambda, double alpha, double c,
                                        const Eigen::ArrayXd& grid);

// Same splitting applied to an arbitrary generating function; the discrete
// stable one is the member that satisfies it.
double check_selfdecomp_identity(const DiscretePgf& q, double alpha, double c,
                                 const Eigen::ArrayXd& grid);

// Max residual of P(Q(s)) = 1 - lambda*delta*(1-s)^nu where P is the
// Bernoulli-shift pgf and Q the Sibuya-Bernoulli generating function.
double compose_sibuya_bernoulli(double lambda, double delta, double nu,
                                const Eigen::ArrayXd& grid);

}  // namespace randstab
