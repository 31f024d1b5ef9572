#pragma once

#include <cstdint>
#include <string>

#include <Eigen/Core>

#include "randstab/discrete.hpp"
#include "randstab/families.hpp"
#include "randstab/rng.hpp"

namespace randstab {

struct SampleBatch {
  Eigen::ArrayXd values;
  std::string family;                 // descriptor of the sampled law
  std::int64_t n = 0;
  std::uint64_t master_seed = 0;
  std::uint64_t stream_index = 0;
  bool discrete = false;
  std::int64_t zero_n_events = 0;     // random sums only: draws with N = 0
};

// One-sided stable draw with Laplace transform exp(-lambda * s^alpha) for
// alpha in (0,1]; alpha = 1 is the point mass at lambda. Kanter's
// representation, computed in logs.
double draw_positive_stable(double alpha, double lambda, RandomSource& src);

// Draw with Laplace transform (1 + lambda * s^alpha)^(-beta): a gamma(beta)
// mixture of positive stable scales, X = (lambda * G)^(1/alpha) * S.
double draw_gen_ml(double alpha, double lambda, double beta, RandomSource& src);

// Scalar draws from any sampleable Laplace family. Families built on a
// log-periodic exponent have no sampler; they are algebraic witnesses only.
double draw_lt_value(const LtFamily& phi, RandomSource& src);

// Scalar draw from a compounding family. Harris uses its negative binomial
// mixture representation N = 1 + k*M with M Poisson mixed over gamma.
long draw_pgf_value(const PgfFamily& p, RandomSource& src);

// Scalar draw from a discrete law via its Poisson mixture: N ~ Poisson(Y)
// where Y follows the Laplace family with matching transform, so the
// generating function is phi(1-s). Closed discrete forms with a positive
// thin factor fold the thinning into a binomial draw.
long draw_discrete_value(const DiscretePgf& q, RandomSource& src);

// Batch front ends.
SampleBatch sample_positive_stable(double alpha, double lambda, std::int64_t n,
                                   std::uint64_t seed, std::uint64_t stream = 0);
SampleBatch sample_gen_ml(double alpha, double lambda, double beta, std::int64_t n,
                          std::uint64_t seed, std::uint64_t stream = 0);
SampleBatch sample_lt_family(const LtFamily& phi, std::int64_t n, std::uint64_t seed,
                             std::uint64_t stream = 0);
SampleBatch sample_compounder(const PgfFamily& p, std::int64_t n, std::uint64_t seed,
                              std::uint64_t stream = 0);
SampleBatch sample_discrete(const DiscretePgf& q, std::int64_t n, std::uint64_t seed,
                            std::uint64_t stream = 0);

// Binomial thinning of an integer-valued batch: each value x is replaced by
// Binomial(x, c). Throws if a value is not a nonnegative integer.
SampleBatch binomial_thin(const SampleBatch& batch, double c, std::uint64_t seed,
                          std::uint64_t stream = 0);

// Scaled random sum c * (X_1 + ... + X_N) with N from the compounder and
// X_i from the Laplace family; N = 0 contributes the value 0 and is counted.
SampleBatch sample_random_sum(const PgfFamily& p, const LtFamily& phi, double c,
                              std::int64_t n, std::uint64_t seed, std::uint64_t stream = 0);

// Integer random sum of c-thinned summands from a discrete law.
SampleBatch sample_random_sum_discrete(const PgfFamily& p, const DiscretePgf& q, double c,
                                       std::int64_t n, std::uint64_t seed,
                                       std::uint64_t stream = 0);

// Inversion sampling from an extracted pmf table, with residual tail mass
// (at most 1e-12 for the tables used) assigned to the last index.
long draw_from_pmf_table(const PmfTable& table, RandomSource& src);

// Serialization: CSV is one value per line after a metadata comment line;
// binary is "RSB1", u32 count, u64 seed, then little-endian doubles.
void write_csv(const SampleBatch& batch, const std::string& path);
void write_binary(const SampleBatch& batch, const std::string& path);

}  // namespace randstab
