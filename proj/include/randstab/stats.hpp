#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "randstab/discrete.hpp"
#include "randstab/families.hpp"

namespace randstab {

struct KsResult {
  double statistic = 0.0;   // sup |F1 - F2|
  double p_value = 0.0;
  std::int64_t n1 = 0;
  std::int64_t n2 = 0;
};

// Two-sample Kolmogorov-Smirnov with the asymptotic p-value
// Q(sqrt(n1*n2/(n1+n2)) * D). Intended for continuous laws at n >= 100 per
// side; integer-valued data belongs with tv_distance_pmf instead.
KsResult ks_two_sample(const Eigen::ArrayXd& x, const Eigen::ArrayXd& y);

// Kolmogorov tail sum Q(z) = 2 * sum_{j>=1} (-1)^(j-1) exp(-2 j^2 z^2).
double kolmogorov_survival(double z);

// Total variation between integer draws and a reference table:
// half the l1 gap over 0..n_max plus half the mass both sides place beyond
// the table (observed overflow on one side, the table's mass deficiency on
// the other).
double tv_distance_pmf(const Eigen::ArrayXd& values, const PmfTable& table);

// Compares the empirical Laplace transform of a batch against the family at
// each grid point; passes when every gap is within `z_limit` standard errors
// of the empirical mean.
struct LtCheckResult {
  bool pass = false;
  double max_z = 0.0;
  Eigen::ArrayXd points;
  Eigen::ArrayXd z_scores;
};
LtCheckResult empirical_lt_check(const Eigen::ArrayXd& values, const LtFamily& phi,
                                 const Eigen::ArrayXd& s_points, double z_limit = 3.0);

struct SeedInfo {
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
};

// One Monte Carlo pass/fail with everything needed to reproduce it.
struct McVerdict {
  std::string test;         // e.g. "ks-two-sample", "tv-distance"
  double statistic = 0.0;
  double threshold = 0.0;   // threshold the statistic or p-value is held to
  bool p_value_based = false;
  double p_value = 0.0;
  std::int64_t n = 0;
  bool pass = false;
  std::vector<SeedInfo> seeds;
};

struct SampleBatch;

// Convenience verdicts over batches: KS passes when the p-value clears the
// threshold, TV passes when the distance stays under it.
McVerdict ks_verdict(const SampleBatch& a, const SampleBatch& b, double p_threshold = 1e-3);
McVerdict tv_verdict(const SampleBatch& a, const PmfTable& table, double tv_threshold = 0.02);

}  // namespace randstab
