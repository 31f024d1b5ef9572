#include "randstab/sampling.hpp"

#include <cmath>
#include <cstring>
#include <fstream>
#include <stdexcept>

#include "randstab/descriptor.hpp"

namespace randstab {

namespace {

constexpr double kPi = 3.14159265358979323846;

void require_sampleable_psi(const ScaleFunction& psi) {
  if (!psi.is_pure_power())
    throw std::domain_error(
        "log-periodic families have no sampler; they serve as algebraic "
        "witnesses only");
}

long draw_sibuya(double nu, RandomSource& src) {
  if (nu == 1.0) return 1;
  const double u = src.uniform01();
  // Walk the mass recurrence for small values.
  double mass = nu;
  double cdf = nu;
  long j = 1;
  while (u > cdf && j < 64) {
    mass *= (static_cast<double>(j) - nu) / static_cast<double>(j + 1);
    ++j;
    cdf += mass;
  }
  if (u <= cdf) return j;
  // Beyond the walk, invert the closed-form survival function
  // P(N > n) = Gamma(n+1-nu) / (Gamma(n+1) * Gamma(1-nu)).
  const double target = 1.0 - u;
  const auto survival = [nu](double n) {
    return std::exp(std::lgamma(n + 1.0 - nu) - std::lgamma(n + 1.0) -
                    std::lgamma(1.0 - nu));
  };
  double lo = 64.0;
  double hi = 128.0;
  while (survival(hi) > target) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e15)
      throw std::overflow_error("sibuya tail draw exceeded the 1e15 value cap");
  }
  while (hi - lo > 1.0) {
    const double mid = std::floor(0.5 * (lo + hi));
    if (mid <= lo || mid >= hi) break;
    if (survival(mid) <= target)
      hi = mid;
    else
      lo = mid;
  }
  return static_cast<long>(hi);
}

SampleBatch make_batch(std::string family, std::int64_t n, std::uint64_t seed,
                       std::uint64_t stream, bool discrete) {
  SampleBatch batch;
  batch.values.resize(n);
  batch.family = std::move(family);
  batch.n = n;
  batch.master_seed = seed;
  batch.stream_index = stream;
  batch.discrete = discrete;
  return batch;
}

}  // namespace

double draw_positive_stable(double alpha, double lambda, RandomSource& src) {
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw std::domain_error("positive stable draw needs alpha in (0,1]");
  if (!(lambda > 0.0)) throw std::invalid_argument("positive stable draw needs lambda > 0");
  if (alpha == 1.0) return lambda;
  // Kanter's representation, evaluated in logs for stability near the ends.
  const double u = src.uniform01();
  const double e = src.exponential();
  const double pu = kPi * u;
  const double ratio = (1.0 - alpha) / alpha;
  const double log_x = std::log(std::sin(alpha * pu)) +
                       ratio * std::log(std::sin((1.0 - alpha) * pu)) -
                       (1.0 / alpha) * std::log(std::sin(pu)) - ratio * std::log(e);
  return std::pow(lambda, 1.0 / alpha) * std::exp(log_x);
}

double draw_gen_ml(double alpha, double lambda, double beta, RandomSource& src) {
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw std::domain_error("mixture draw needs alpha in (0,1]");
  if (!(lambda > 0.0 && beta > 0.0))
    throw std::invalid_argument("mixture draw needs lambda > 0 and beta > 0");
  const double g = src.gamma(beta);
  if (alpha == 1.0) return lambda * g;
  const double s = draw_positive_stable(alpha, 1.0, src);
  return std::pow(lambda * g, 1.0 / alpha) * s;
}

double draw_lt_value(const LtFamily& phi, RandomSource& src) {
  switch (phi.tag()) {
    case LtFamily::Tag::kGamma:
      return src.gamma(phi.beta());
    case LtFamily::Tag::kMittagLeffler:
      return draw_gen_ml(phi.alpha(), phi.lambda(), 1.0, src);
    case LtFamily::Tag::kPositiveLinnik:
      return draw_gen_ml(phi.alpha(), phi.lambda(), phi.beta(), src);
    case LtFamily::Tag::kPositiveStable:
      return draw_positive_stable(phi.alpha(), phi.lambda(), src);
    case LtFamily::Tag::kSemiML:
      require_sampleable_psi(phi.psi());
      return draw_gen_ml(phi.alpha(), phi.lambda(), 1.0, src);
    case LtFamily::Tag::kGenSemiML:
      require_sampleable_psi(phi.psi());
      return draw_gen_ml(phi.alpha(), phi.lambda(), phi.beta(), src);
    case LtFamily::Tag::kSemiStable:
      require_sampleable_psi(phi.psi());
      return draw_positive_stable(phi.alpha(), phi.lambda(), src);
  }
  throw std::logic_error("unreachable");
}

long draw_pgf_value(const PgfFamily& p, RandomSource& src) {
  switch (p.tag()) {
    case PgfFamily::Tag::kHarris: {
      // Negative binomial mixture: M ~ Poisson(Y), Y ~ Gamma(1/k, a-1),
      // N = 1 + k*M.
      const double y = src.gamma(1.0 / static_cast<double>(p.k())) * (p.a() - 1.0);
      return 1 + p.k() * src.poisson(y);
    }
    case PgfFamily::Tag::kGeometric1:
      return src.geometric1(p.p());
    case PgfFamily::Tag::kSibuya:
      return draw_sibuya(p.nu(), src);
    case PgfFamily::Tag::kDegenerate:
      return p.k();
    case PgfFamily::Tag::kBernoulliShift:
      return src.uniform01() < p.lambda() ? 1 : 0;
  }
  throw std::logic_error("unreachable");
}

namespace {

long draw_discrete_base(const DiscretePgf& q, RandomSource& src) {
  switch (q.form()) {
    case DiscretePgf::Form::kDiscreteStable:
      return src.poisson(draw_positive_stable(q.alpha(), q.lambda(), src));
    case DiscretePgf::Form::kDiscreteML:
      return src.poisson(draw_gen_ml(q.alpha(), q.lambda(), 1.0, src));
    case DiscretePgf::Form::kDiscreteLinnik:
      return src.poisson(draw_gen_ml(q.alpha(), q.lambda(), q.beta(), src));
    case DiscretePgf::Form::kDiscreteGenSML:
      require_sampleable_psi(q.psi());
      return src.poisson(draw_gen_ml(q.psi().alpha(), q.psi().lambda(), q.beta(), src));
    case DiscretePgf::Form::kSibuyaBernoulli:
      return src.uniform01() < q.delta() ? draw_sibuya(q.nu(), src) : 0;
    case DiscretePgf::Form::kLtAnalogue:
      return src.poisson(draw_lt_value(*q.source_lt(), src));
    case DiscretePgf::Form::kNativePgf:
      return draw_pgf_value(*q.native_pgf(), src);
  }
  throw std::logic_error("unreachable");
}

}  // namespace

long draw_discrete_value(const DiscretePgf& q, RandomSource& src) {
  const long base = draw_discrete_base(q, src);
  if (q.thin_factor() == 1.0) return base;
  return src.binomial(base, q.thin_factor());
}

SampleBatch sample_positive_stable(double alpha, double lambda, std::int64_t n,
                                   std::uint64_t seed, std::uint64_t stream) {
  return sample_lt_family(LtFamily::positive_stable(alpha, lambda), n, seed, stream);
}

SampleBatch sample_gen_ml(double alpha, double lambda, double beta, std::int64_t n,
                          std::uint64_t seed, std::uint64_t stream) {
  return sample_lt_family(LtFamily::positive_linnik(alpha, lambda, beta), n, seed, stream);
}

SampleBatch sample_lt_family(const LtFamily& phi, std::int64_t n, std::uint64_t seed,
                             std::uint64_t stream) {
  if (n < 1) throw std::invalid_argument("batch needs n >= 1");
  SampleBatch batch = make_batch(format_descriptor(phi), n, seed, stream, false);
  RandomSource src(seed, stream);
  for (std::int64_t i = 0; i < n; ++i) batch.values[i] = draw_lt_value(phi, src);
  return batch;
}

SampleBatch sample_compounder(const PgfFamily& p, std::int64_t n, std::uint64_t seed,
                              std::uint64_t stream) {
  if (n < 1) throw std::invalid_argument("batch needs n >= 1");
  SampleBatch batch = make_batch(format_descriptor(p), n, seed, stream, true);
  RandomSource src(seed, stream);
  for (std::int64_t i = 0; i < n; ++i)
    batch.values[i] = static_cast<double>(draw_pgf_value(p, src));
  return batch;
}

SampleBatch sample_discrete(const DiscretePgf& q, std::int64_t n, std::uint64_t seed,
                            std::uint64_t stream) {
  if (n < 1) throw std::invalid_argument("batch needs n >= 1");
  SampleBatch batch = make_batch(format_descriptor(q), n, seed, stream, true);
  RandomSource src(seed, stream);
  for (std::int64_t i = 0; i < n; ++i)
    batch.values[i] = static_cast<double>(draw_discrete_value(q, src));
  return batch;
}

SampleBatch binomial_thin(const SampleBatch& batch, double c, std::uint64_t seed,
                          std::uint64_t stream) {
  if (!(c > 0.0 && c < 1.0)) throw std::invalid_argument("thinning needs c in (0,1)");
  SampleBatch out = make_batch(batch.family + "|thin=" + format_number(c), batch.n, seed,
                               stream, true);
  RandomSource src(seed, stream);
  for (Eigen::Index i = 0; i < batch.values.size(); ++i) {
    const double v = batch.values[i];
    if (!(v >= 0.0) || v != std::floor(v))
      throw std::domain_error("thinning needs nonnegative integer values");
    out.values[i] = static_cast<double>(src.binomial(static_cast<long>(v), c));
  }
  return out;
}

SampleBatch sample_random_sum(const PgfFamily& p, const LtFamily& phi, double c,
                              std::int64_t n, std::uint64_t seed, std::uint64_t stream) {
  if (n < 1) throw std::invalid_argument("batch needs n >= 1");
  if (!(c > 0.0 && c < 1.0)) throw std::invalid_argument("random sum needs c in (0,1)");
  SampleBatch batch = make_batch("randomsum:c=" + format_number(c) + ";n=" +
                                     format_descriptor(p) + ";x=" + format_descriptor(phi),
                                 n, seed, stream, false);
  RandomSource src(seed, stream);
  for (std::int64_t i = 0; i < n; ++i) {
    const long count = draw_pgf_value(p, src);
    if (count == 0) ++batch.zero_n_events;
    double acc = 0.0;
    for (long j = 0; j < count; ++j) acc += draw_lt_value(phi, src);
    batch.values[i] = c * acc;
  }
  return batch;
}

SampleBatch sample_random_sum_discrete(const PgfFamily& p, const DiscretePgf& q, double c,
                                       std::int64_t n, std::uint64_t seed,
                                       std::uint64_t stream) {
  if (n < 1) throw std::invalid_argument("batch needs n >= 1");
  if (!(c > 0.0 && c < 1.0)) throw std::invalid_argument("random sum needs c in (0,1)");
  SampleBatch batch = make_batch("randomsum:c=" + format_number(c) + ";n=" +
                                     format_descriptor(p) + ";x=" + format_descriptor(q),
                                 n, seed, stream, true);
  RandomSource src(seed, stream);
  for (std::int64_t i = 0; i < n; ++i) {
    const long count = draw_pgf_value(p, src);
    if (count == 0) ++batch.zero_n_events;
    long acc = 0;
    for (long j = 0; j < count; ++j)
      acc += src.binomial(draw_discrete_value(q, src), c);
    batch.values[i] = static_cast<double>(acc);
  }
  return batch;
}

long draw_from_pmf_table(const PmfTable& table, RandomSource& src) {
  const double u = src.uniform01();
  double cdf = 0.0;
  for (Eigen::Index n = 0; n < table.coeffs.size(); ++n) {
    cdf += std::max(table.coeffs[n], 0.0);
    if (u <= cdf) return static_cast<long>(n);
  }
  // Residual tail mass lands on the last index.
  return static_cast<long>(table.coeffs.size() - 1);
}

void write_csv(const SampleBatch& batch, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << "# family=" << batch.family << " n=" << batch.n << " seed=" << batch.master_seed
      << " stream=" << batch.stream_index << " discrete=" << (batch.discrete ? 1 : 0)
      << " zero_n_events=" << batch.zero_n_events << "\n";
  for (Eigen::Index i = 0; i < batch.values.size(); ++i)
    out << format_number(batch.values[i]) << "\n";
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

void write_binary(const SampleBatch& batch, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  const char magic[4] = {'R', 'S', 'B', '1'};
  out.write(magic, 4);
  const std::uint32_t n = static_cast<std::uint32_t>(batch.n);
  const std::uint64_t seed = batch.master_seed;
  out.write(reinterpret_cast<const char*>(&n), sizeof n);
  out.write(reinterpret_cast<const char*>(&seed), sizeof seed);
  out.write(reinterpret_cast<const char*>(batch.values.data()),
            static_cast<std::streamsize>(sizeof(double) * batch.values.size()));
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace randstab
