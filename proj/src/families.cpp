#include "randstab/families.hpp"

#include <sstream>

namespace randstab {

double eval_lt(const LtFamily& f, double s) {
  if (!(s >= 0.0)) throw std::domain_error("laplace transform argument needs s >= 0");
  return f.value(s);
}

Eigen::ArrayXd eval_lt(const LtFamily& f, const Eigen::ArrayXd& s) {
  Eigen::ArrayXd out(s.size());
  for (Eigen::Index i = 0; i < s.size(); ++i) out[i] = eval_lt(f, s[i]);
  return out;
}

cdouble eval_cf(const CfFamily& f, double u) { return f.value(u); }

Eigen::ArrayXcd eval_cf(const CfFamily& f, const Eigen::ArrayXd& u) {
  Eigen::ArrayXcd out(u.size());
  for (Eigen::Index i = 0; i < u.size(); ++i) out[i] = f.value(u[i]);
  return out;
}

double eval_pgf(const PgfFamily& f, double t) {
  if (!(t >= 0.0 && t <= 1.0))
    throw std::domain_error("real pgf argument needs t in [0,1]");
  return f.value(t);
}

Eigen::ArrayXd eval_pgf(const PgfFamily& f, const Eigen::ArrayXd& t) {
  Eigen::ArrayXd out(t.size());
  for (Eigen::Index i = 0; i < t.size(); ++i) out[i] = eval_pgf(f, t[i]);
  return out;
}

cdouble eval_pgf(const PgfFamily& f, cdouble t) {
  const double r = std::abs(t);
  if (r > 1.0 + 1e-12) {
    std::ostringstream msg;
    msg << "complex pgf argument of modulus " << r
        << " is outside the unit disk; lower the evaluation radius";
    throw std::domain_error(msg.str());
  }
  // Inside the closed unit disk every fractional power base below stays in
  // the right half plane: the harris base a - (a-1)t^k has real part at
  // least 1, and the sibuya base 1 - t has nonnegative real part.
  return f.value(t);
}

}  // namespace randstab
