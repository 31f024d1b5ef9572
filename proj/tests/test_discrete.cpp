#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <string>

#include "randstab/descriptor.hpp"
#include "randstab/discrete.hpp"
#include "randstab/grid.hpp"
#include "oracles.hpp"

using namespace randstab;

namespace {

// Extraction must agree with an independently computed mass sequence.
void check_against_oracle(const PmfTable& table, const std::vector<double>& oracle,
                          int n_max, double tol) {
  REQUIRE(table.coeffs.size() >= n_max + 1);
  for (int n = 0; n <= n_max; ++n)
    CHECK(std::abs(table.coeffs[n] - oracle[static_cast<std::size_t>(n)]) <= tol);
}

}  // namespace

TEST_CASE("extracted harris coefficients match the binomial series") {
  const PmfTable table = extract_pmf(PgfFamily::harris(2.0, 2), ExtractOptions{32, 0.75});
  check_against_oracle(table, oracles::harris_masses(2.0, 2, 32), 32, 1e-9);

  // Support sits on the lattice {1, 1+k, 1+2k, ...}; off-lattice indices
  // carry only extraction noise.
  for (int n : {0, 2, 4, 6, 20, 32})
    CHECK(std::abs(table.coeffs[n]) <= 1e-10);

  const PmfTable t32 = extract_pmf(PgfFamily::harris(3.0, 2), ExtractOptions{32, 0.75});
  check_against_oracle(t32, oracles::harris_masses(3.0, 2, 32), 32, 1e-9);
}

TEST_CASE("extracted geometric coefficients match the closed form") {
  const PmfTable table =
      extract_pmf(PgfFamily::geometric1(0.3), ExtractOptions{32, 0.75});
  check_against_oracle(table, oracles::geometric1_masses(0.3, 32), 32, 1e-9);
}

TEST_CASE("discrete stable at alpha=1 is poisson") {
  const DiscretePgf q = DiscretePgf::discrete_stable(1.2, 1.0);
  CHECK(q.integer_powers_only());
  const PmfTable table = extract_pmf(q, ExtractOptions{32, 0.8});
  check_against_oracle(table, oracles::poisson_masses(1.2, 32), 32, 1e-12);
}

TEST_CASE("sibuya coefficients match the recurrence") {
  const PmfTable table = extract_pmf(PgfFamily::sibuya(0.5), ExtractOptions{32, 0.75});
  check_against_oracle(table, oracles::sibuya_masses(0.5, 32), 32, 1e-9);

  // The Sibuya-Bernoulli law scales those masses by delta and parks the rest
  // at zero.
  const DiscretePgf sb = DiscretePgf::sibuya_bernoulli(0.8, 0.5);
  const PmfTable ts = extract_pmf(sb, ExtractOptions{32, 0.75});
  std::vector<double> expect = oracles::sibuya_masses(0.5, 32);
  for (double& x : expect) x *= 0.8;
  expect[0] = 0.2;
  check_against_oracle(ts, expect, 32, 1e-9);
}

TEST_CASE("extraction is radius invariant where doubles can resolve it") {
  const DiscretePgf q = DiscretePgf::discrete_ml(1.0, 0.85);
  const PmfTable a = extract_pmf(q, ExtractOptions{8, 0.3});
  const PmfTable b = extract_pmf(q, ExtractOptions{8, 0.6});
  for (int n = 0; n <= 8; ++n)
    CHECK(std::abs(a.coeffs[n] - b.coeffs[n]) <= 1e-9);
}

TEST_CASE("noise floor grows like the inverse power of the radius") {
  CHECK(extraction_noise_floor(0, 0.5) == doctest::Approx(64.0 * 2.220446049250313e-16));
  CHECK(extraction_noise_floor(10, 0.5) ==
        doctest::Approx(64.0 * 2.220446049250313e-16 * 1024.0));
  CHECK(extraction_noise_floor(8, 0.3) < 1e-9);
}

TEST_CASE("fractional power forms reject radii beyond three quarters") {
  const DiscretePgf q = DiscretePgf::discrete_ml(1.0, 0.85);
  try {
    extract_pmf(q, ExtractOptions{16, 0.8});
    CHECK(false);
  } catch (const std::domain_error& e) {
    CHECK(std::string(e.what()).find("lower the radius") != std::string::npos);
  }
  CHECK_NOTHROW(extract_pmf(q, ExtractOptions{16, 0.75}));
  // Integer-power forms have no branch cuts and take any radius in (0,1).
  CHECK_NOTHROW(extract_pmf(PgfFamily::geometric1(0.5), ExtractOptions{16, 0.9}));
}

TEST_CASE("pgf verdicts") {
  PmfTable table;
  table.coeffs = (Eigen::ArrayXd(4) << 0.5, 0.3, 0.15, 0.05).finished();
  table.radius = 0.5;
  table.mass_deficiency = 0.0;
  CHECK(is_pgf_coeffs(table).ok);

  table.coeffs[2] = -0.01;
  const PgfCheck bad = is_pgf_coeffs(table, 1e-6);
  CHECK(!bad.ok);
  REQUIRE(bad.first_negative_index.has_value());
  CHECK(*bad.first_negative_index == 2);

  // Noise-aware widening forgives dips below the flat tolerance when the
  // extraction radius cannot resolve them.
  PmfTable noisy;
  noisy.coeffs = (Eigen::ArrayXd(33) << 1.0, Eigen::ArrayXd::Zero(32)).finished();
  noisy.radius = 0.3;
  noisy.coeffs[32] = -1e-5;  // floor at n=32, r=0.3 is ~2e3
  noisy.mass_deficiency = 1.0 - noisy.coeffs.sum();
  CHECK(!is_pgf_coeffs(noisy, 1e-10).ok);
  CHECK(is_pgf_coeffs_noise_aware(noisy, 1e-10).ok);
}

TEST_CASE("real analogue tables are nonnegative with small deficiency") {
  for (const char* text : {"dstable:lambda=0.9,alpha=0.85", "dml:lambda=1,alpha=0.85",
                           "dlinnik:lambda=1,alpha=0.85,beta=0.7", "d:gamma:beta=0.5"}) {
    const DiscretePgf q = parse_discrete(text);
    const PmfTable table = extract_pmf(q, ExtractOptions{64, 0.7});
    const PgfCheck check = is_pgf_coeffs_noise_aware(table, 1e-10);
    CHECK(check.ok);
    CHECK(table.mass_deficiency > -1e-6);
    CHECK(table.mass_deficiency < 0.05);
  }
}

TEST_CASE("thinning is substitution: values agree with the composed argument") {
  const Eigen::ArrayXd grid = default_pgf_points();
  const auto agree = [&](const DiscretePgf& q, double c) {
    const DiscretePgf thinned = d_type_transform(q, c);
    double worst = 0.0;
    for (Eigen::Index i = 0; i < grid.size(); ++i) {
      const double s = grid[i];
      worst = std::max(worst, std::abs(eval_discrete_pgf(thinned, s) -
                                       eval_discrete_pgf(q, 1.0 - c + c * s)));
    }
    return worst;
  };
  CHECK(agree(DiscretePgf::discrete_stable(0.9, 0.85), 0.3) <= 1e-14);
  CHECK(agree(DiscretePgf::discrete_ml(1.0, 0.85), 0.6) <= 1e-14);
  CHECK(agree(DiscretePgf::discrete_linnik(1.0, 0.85, 0.7), 0.5) <= 1e-14);
  CHECK(agree(DiscretePgf::sibuya_bernoulli(0.8, 0.5), 0.4) <= 1e-14);
  CHECK(agree(parse_discrete("d:gamma:beta=0.5"), 0.3) <= 1e-14);
  CHECK(agree(parse_discrete("geometric1:p=0.5"), 0.3) <= 1e-14);

  const ScaleFunction psi = ScaleFunction::log_periodic(1.0, 0.6, 0.25, 0.05);
  const DiscretePgf gsml = DiscretePgf::discrete_gen_sml(psi, 0.5);
  // On the lattice (c = b) the fold is parametric; off it the factor is kept.
  CHECK(agree(gsml, 0.25) <= 1e-14);
  CHECK(d_type_transform(gsml, 0.25).thin_factor() == 1.0);
  CHECK(agree(gsml, 0.3) <= 1e-14);
  CHECK(d_type_transform(gsml, 0.3).thin_factor() == doctest::Approx(0.3));
}

TEST_CASE("thinning composes multiplicatively") {
  const DiscretePgf q = DiscretePgf::discrete_ml(1.0, 0.85);
  const DiscretePgf twice = d_type_transform(d_type_transform(q, 0.6), 0.5);
  const DiscretePgf once = d_type_transform(q, 0.3);
  CHECK(std::abs(twice.lambda() - once.lambda()) <= 1e-15);
  CHECK_THROWS_AS(d_type_transform(q, 1.0), std::invalid_argument);
}

TEST_CASE("discrete stable splits into two thinned copies of itself") {
  const Eigen::ArrayXd grid = default_pgf_points();
  for (double c : {0.3, 0.5, 0.6})
    CHECK(check_selfdecomp_discrete_stable(0.9, 0.85, c, grid) <= 1e-12);

  // Any other family fails the same splitting by a visible margin.
  CHECK(check_selfdecomp_identity(DiscretePgf::discrete_ml(1.0, 0.85), 0.85, 0.5, grid) >
        1e-3);
}

TEST_CASE("bernoulli count of sibuya-bernoulli terms closes the family") {
  CHECK(compose_sibuya_bernoulli(0.7, 0.8, 0.5, default_pgf_points()) <= 1e-12);
  CHECK(compose_sibuya_bernoulli(1.0, 1.0, 0.5, default_pgf_points()) <= 1e-12);
}

TEST_CASE("discretize maps closed forms onto named discrete counterparts") {
  CHECK(discretize(LtFamily::positive_stable(0.85, 0.9)).form() ==
        DiscretePgf::Form::kDiscreteStable);
  CHECK(discretize(LtFamily::mittag_leffler(0.85, 1.0)).form() ==
        DiscretePgf::Form::kDiscreteML);
  CHECK(discretize(LtFamily::positive_linnik(0.85, 1.0, 0.7)).form() ==
        DiscretePgf::Form::kDiscreteLinnik);
  CHECK(discretize(LtFamily::gamma(0.5)).form() == DiscretePgf::Form::kLtAnalogue);

  // The analogue's generating function is the transform at 1-s.
  const LtFamily phi = LtFamily::gamma(0.5);
  const DiscretePgf q = discretize(phi);
  for (double s : {0.0, 0.25, 0.5, 0.9, 1.0})
    CHECK(eval_discrete_pgf(q, s) ==
          doctest::Approx(eval_lt(phi, 1.0 - s)).epsilon(1e-15));
}

TEST_CASE("extraction argument guards") {
  CHECK_THROWS_AS(extract_pmf(PgfFamily::geometric1(0.5), ExtractOptions{0, 0.5}),
                  std::invalid_argument);
  CHECK_THROWS_AS(extract_pmf(PgfFamily::geometric1(0.5), ExtractOptions{8, 1.0}),
                  std::invalid_argument);
}
