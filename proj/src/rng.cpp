#include "randstab/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace randstab {

namespace {

// SplitMix64 finalizer; also used to mix (seed, stream) into the initial
// state so that nearby seeds and streams decorrelate.
std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

constexpr double kPi = 3.14159265358979323846;

// Stirling series tail ln(k!) - (k + 1/2) ln k + k - ln sqrt(2 pi k),
// exact table for k <= 9, asymptotic expansion beyond.
double stirling_tail(double k) {
  static const double table[10] = {
      0.08106146679532726, 0.04134069595540929, 0.02767792568499834,
      0.02079067210376509, 0.01664469118982119, 0.01387612882307075,
      0.01189670994589177, 0.01041126526197209, 0.009255462182712733,
      0.008330563433362871};
  if (k <= 9.0) return table[static_cast<int>(k)];
  const double kp1sq = (k + 1.0) * (k + 1.0);
  return (1.0 / 12.0 - (1.0 / 360.0 - 1.0 / 1260.0 / kp1sq) / kp1sq) / (k + 1.0);
}

}  // namespace

RandomSource::RandomSource(std::uint64_t master_seed, std::uint64_t stream_index)
    : master_seed_(master_seed), stream_index_(stream_index) {
  state_ = mix64(master_seed + 0x9E3779B97F4A7C15ull * (stream_index + 1));
  state_ = mix64(state_ ^ (stream_index * 0xD1B54A32D192ED03ull + 1));
}

std::uint64_t RandomSource::next_u64() {
  state_ += 0x9E3779B97F4A7C15ull;
  return mix64(state_);
}

double RandomSource::uniform01() {
  // 53 significant bits centered in the cell: never 0, never 1.
  return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double RandomSource::exponential() { return -std::log(uniform01()); }

double RandomSource::normal() {
  if (have_cached_normal_) {
    have_cached_normal_ = false;
    return cached_normal_;
  }
  const double r = std::sqrt(-2.0 * std::log(uniform01()));
  const double angle = 2.0 * kPi * uniform01();
  cached_normal_ = r * std::sin(angle);
  have_cached_normal_ = true;
  return r * std::cos(angle);
}

double RandomSource::gamma(double shape) {
  if (!(shape > 0.0)) throw std::invalid_argument("gamma draw needs shape > 0");
  if (shape < 1.0) {
    // Boost from shape + 1 back down by a uniform power.
    const double g = gamma(shape + 1.0);
    return g * std::pow(uniform01(), 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x;
    double v;
    do {
      x = normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = uniform01();
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
  }
}

long RandomSource::poisson(double mean) {
  if (!(mean >= 0.0)) throw std::invalid_argument("poisson draw needs mean >= 0");
  if (mean == 0.0) return 0;
  if (mean < 10.0) {
    // Inversion by sequential search.
    const double u = uniform01();
    double mass = std::exp(-mean);
    double cdf = mass;
    long k = 0;
    const long cap = 200;
    while (u > cdf && k < cap) {
      ++k;
      mass *= mean / static_cast<double>(k);
      cdf += mass;
    }
    return k;
  }
  // Transformed rejection with squeeze.
  const double b = 0.931 + 2.53 * std::sqrt(mean);
  const double a = -0.059 + 0.02483 * b;
  const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
  const double v_r = 0.9277 - 3.6224 / (b - 2.0);
  const double log_mean = std::log(mean);
  for (;;) {
    const double u = uniform01() - 0.5;
    double v = uniform01();
    const double us = 0.5 - std::abs(u);
    const double kf = std::floor((2.0 * a / us + b) * u + mean + 0.43);
    if (us >= 0.07 && v <= v_r) return static_cast<long>(kf);
    if (kf < 0.0 || (us < 0.013 && v > us)) continue;
    if (std::log(v * inv_alpha / (a / (us * us) + b)) <=
        kf * log_mean - mean - std::lgamma(kf + 1.0))
      return static_cast<long>(kf);
  }
}

long RandomSource::binomial(long n, double p) {
  if (n < 0) throw std::invalid_argument("binomial draw needs n >= 0");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("binomial draw needs p in [0,1]");
  if (n == 0 || p == 0.0) return 0;
  if (p == 1.0) return n;
  if (p > 0.5) return n - binomial(n, 1.0 - p);

  if (n <= 64) {
    long count = 0;
    for (long i = 0; i < n; ++i)
      if (uniform01() < p) ++count;
    return count;
  }

  const double np = static_cast<double>(n) * p;
  if (np < 10.0) {
    // Inversion from the k = 0 mass.
    const double u = uniform01();
    double mass = std::exp(static_cast<double>(n) * std::log1p(-p));
    double cdf = mass;
    const double ratio = p / (1.0 - p);
    long k = 0;
    const long cap = n < 200 ? n : 200;
    while (u > cdf && k < cap) {
      ++k;
      mass *= ratio * static_cast<double>(n - k + 1) / static_cast<double>(k);
      cdf += mass;
    }
    return k;
  }

  // Transformed rejection.
  const double q = 1.0 - p;
  const double spq = std::sqrt(np * q);
  const double b = 1.15 + 2.53 * spq;
  const double a = -0.0873 + 0.0248 * b + 0.01 * p;
  const double c = np + 0.5;
  const double v_r = 0.92 - 4.2 / b;
  const double r = p / q;
  const double alpha = (2.83 + 5.1 / b) * spq;
  const double m = std::floor((static_cast<double>(n) + 1.0) * p);
  const double nd = static_cast<double>(n);
  for (;;) {
    const double u = uniform01() - 0.5;
    double v = uniform01();
    const double us = 0.5 - std::abs(u);
    const double kf = std::floor((2.0 * a / us + b) * u + c);
    if (kf < 0.0 || kf > nd) continue;
    if (us >= 0.07 && v <= v_r) return static_cast<long>(kf);
    v = std::log(v * alpha / (a / (us * us) + b));
    const double upper =
        (m + 0.5) * std::log((m + 1.0) / (r * (nd - m + 1.0))) +
        (nd + 1.0) * std::log((nd - m + 1.0) / (nd - kf + 1.0)) +
        (kf + 0.5) * std::log(r * (nd - kf + 1.0) / (kf + 1.0)) +
        stirling_tail(m) + stirling_tail(nd - m) - stirling_tail(kf) -
        stirling_tail(nd - kf);
    if (v <= upper) return static_cast<long>(kf);
  }
}

long RandomSource::geometric1(double p) {
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("geometric draw needs p in (0,1)");
  const double g = std::log(uniform01()) / std::log1p(-p);
  return static_cast<long>(std::ceil(g));
}

}  // namespace randstab
