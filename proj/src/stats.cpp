#include "randstab/stats.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "randstab/sampling.hpp"

namespace randstab {

double kolmogorov_survival(double z) {
  if (z < 1e-8) return 1.0;
  double acc = 0.0;
  for (int j = 1; j <= 100; ++j) {
    const double term = std::exp(-2.0 * j * j * z * z);
    acc += (j % 2 == 1 ? term : -term);
    if (term < 1e-18) break;
  }
  const double p = 2.0 * acc;
  return std::min(1.0, std::max(0.0, p));
}

KsResult ks_two_sample(const Eigen::ArrayXd& x, const Eigen::ArrayXd& y) {
  if (x.size() < 100 || y.size() < 100)
    throw std::invalid_argument("two-sample comparison needs at least 100 draws per side");
  std::vector<double> a(x.data(), x.data() + x.size());
  std::vector<double> b(y.data(), y.data() + y.size());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());

  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    const double v = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= v) ++i;
    while (j < b.size() && b[j] <= v) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }

  KsResult result;
  result.statistic = d;
  result.n1 = static_cast<std::int64_t>(a.size());
  result.n2 = static_cast<std::int64_t>(b.size());
  const double ne = na * nb / (na + nb);
  result.p_value = kolmogorov_survival(std::sqrt(ne) * d);
  return result;
}

double tv_distance_pmf(const Eigen::ArrayXd& values, const PmfTable& table) {
  const Eigen::Index n_max = table.coeffs.size() - 1;
  Eigen::ArrayXd counts = Eigen::ArrayXd::Zero(n_max + 1);
  double overflow = 0.0;
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    const double v = values[i];
    if (!(v >= 0.0) || v != std::floor(v))
      throw std::domain_error("total variation needs nonnegative integer draws");
    const auto k = static_cast<Eigen::Index>(v);
    if (k <= n_max)
      counts[k] += 1.0;
    else
      overflow += 1.0;
  }
  const double n = static_cast<double>(values.size());
  counts /= n;
  overflow /= n;

  double acc = 0.0;
  for (Eigen::Index k = 0; k <= n_max; ++k)
    acc += std::abs(counts[k] - std::max(table.coeffs[k], 0.0));
  // Beyond the table both sides carry mass: the draws' overflow and the
  // table's deficiency enter as if disjoint, an upper bound on the true gap.
  return 0.5 * acc + 0.5 * (overflow + std::max(table.mass_deficiency, 0.0));
}

LtCheckResult empirical_lt_check(const Eigen::ArrayXd& values, const LtFamily& phi,
                                 const Eigen::ArrayXd& s_points, double z_limit) {
  if (values.size() < 100)
    throw std::invalid_argument("transform comparison needs at least 100 draws");
  LtCheckResult result;
  result.points = s_points;
  result.z_scores.resize(s_points.size());
  const double n = static_cast<double>(values.size());
  for (Eigen::Index i = 0; i < s_points.size(); ++i) {
    const double s = s_points[i];
    const Eigen::ArrayXd transformed = (-s * values).exp();
    const double mean = transformed.mean();
    const double var = (transformed - mean).square().sum() / (n - 1.0);
    const double se = std::sqrt(var / n);
    const double target = eval_lt(phi, s);
    result.z_scores[i] = se > 0.0 ? (mean - target) / se : 0.0;
  }
  result.max_z = result.z_scores.abs().maxCoeff();
  result.pass = result.max_z <= z_limit;
  return result;
}

McVerdict ks_verdict(const SampleBatch& a, const SampleBatch& b, double p_threshold) {
  const KsResult ks = ks_two_sample(a.values, b.values);
  McVerdict v;
  v.test = "ks-two-sample";
  v.statistic = ks.statistic;
  v.p_value_based = true;
  v.p_value = ks.p_value;
  v.threshold = p_threshold;
  v.n = a.n;
  v.pass = ks.p_value > p_threshold;
  v.seeds = {{a.master_seed, a.stream_index}, {b.master_seed, b.stream_index}};
  return v;
}

McVerdict tv_verdict(const SampleBatch& a, const PmfTable& table, double tv_threshold) {
  McVerdict v;
  v.test = "tv-distance";
  v.statistic = tv_distance_pmf(a.values, table);
  v.threshold = tv_threshold;
  v.n = a.n;
  v.pass = v.statistic < tv_threshold;
  v.seeds = {{a.master_seed, a.stream_index}};
  return v;
}

}  // namespace randstab
