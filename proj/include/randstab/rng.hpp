#pragma once

#include <cstdint>

namespace randstab {

// Counter-free splittable generator: a SplitMix64 stream keyed by mixing
// (master seed, stream index) through the same finalizer. Distinct stream
// indices give statistically independent streams, and every draw is a pure
// function of (seed, stream, position), which makes batches reproducible
// across platforms.
class RandomSource {
 public:
  RandomSource(std::uint64_t master_seed, std::uint64_t stream_index);

  std::uint64_t master_seed() const { return master_seed_; }
  std::uint64_t stream_index() const { return stream_index_; }

  std::uint64_t next_u64();

  // Uniform on (0,1), strictly inside both endpoints.
  double uniform01();

  // Standard exponential via inversion.
  double exponential();

  // Standard normal (Box-Muller, both values used).
  double normal();

  // Gamma(shape, 1), Marsaglia-Tsang squeeze with the boost trick for
  // shape < 1.
  double gamma(double shape);

  // Poisson(mean), inversion below mean 10 and a transformed rejection
  // sampler above.
  long poisson(double mean);

  // Binomial(n, p): direct Bernoulli count for small n, inversion for small
  // mean, transformed rejection otherwise.
  long binomial(long n, double p);

  // Geometric on {1,2,...} with success probability p.
  long geometric1(double p);

 private:
  std::uint64_t master_seed_;
  std::uint64_t stream_index_;
  std::uint64_t state_;
  bool have_cached_normal_ = false;
  double cached_normal_ = 0.0;
};

}  // namespace randstab
