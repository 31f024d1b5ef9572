#include <doctest.h>

#include <cmath>
#include <complex>
#include <stdexcept>

#include "randstab/families.hpp"
#include "randstab/grid.hpp"

using namespace randstab;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("laplace transform frozen values") {
  CHECK(eval_lt(LtFamily::mittag_leffler(0.5, 1.0), 4.0) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(eval_lt(LtFamily::gamma(0.5), 3.0) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(eval_lt(LtFamily::positive_stable(1.0, 2.0), 1.0) ==
        doctest::Approx(std::exp(-2.0)).epsilon(1e-14));

  for (const LtFamily& f :
       {LtFamily::gamma(0.5), LtFamily::mittag_leffler(0.5, 1.0),
        LtFamily::positive_linnik(0.5, 2.0, 0.7), LtFamily::positive_stable(0.5, 1.0),
        LtFamily::semi_ml(ScaleFunction::log_periodic(1.0, 0.6, 0.25)),
        LtFamily::semi_stable(ScaleFunction::log_periodic(1.0, 0.6, 0.25))})
    CHECK(eval_lt(f, 0.0) == 1.0);
}

TEST_CASE("laplace transforms decrease strictly through (0,1]") {
  const Eigen::ArrayXd grid =
      make_grid(GridSpec{GridKind::kGeometric, 1e-4, 1e3, 1000});
  const ScaleFunction psi = ScaleFunction::log_periodic(1.0, 0.6, 0.25, 0.05);
  for (const LtFamily& f :
       {LtFamily::gamma(1.3), LtFamily::mittag_leffler(0.85, 1.0),
        LtFamily::positive_linnik(0.5, 2.0, 0.7), LtFamily::semi_ml(psi),
        LtFamily::gen_semi_ml(psi, 0.5), LtFamily::positive_stable(0.5, 1.0),
        LtFamily::semi_stable(psi)}) {
    double prev = 1.0;
    for (Eigen::Index i = 0; i < grid.size(); ++i) {
      const double v = eval_lt(f, grid[i]);
      CHECK(v > 0.0);
      CHECK(v <= 1.0);
      REQUIRE(v < prev);
      prev = v;
    }
  }
}

TEST_CASE("characteristic function frozen values") {
  CHECK(eval_cf(CfFamily::linnik(1.0, 1.0), 1.0).real() ==
        doctest::Approx(0.5).epsilon(1e-14));
  CHECK(eval_cf(CfFamily::linnik(1.0, 1.0), 1.0).imag() == 0.0);
  const cdouble gl = eval_cf(CfFamily::generalized_linnik(1.0, 0.0, 0.5), 1.0);
  CHECK(gl.real() == doctest::Approx(std::sqrt(0.5)).epsilon(1e-7));
  CHECK(std::abs(gl.imag()) <= 1e-15);
  CHECK(eval_cf(CfFamily::linnik(0.5, 2.0), 0.0) == cdouble(1.0, 0.0));
}

TEST_CASE("characteristic functions are hermitian, bounded, and never zero") {
  const Eigen::ArrayXd grid = make_grid(GridSpec{GridKind::kLinear, -50.0, 50.0, 1001});
  const ScaleFunction psi = ScaleFunction::log_periodic(1.0, 1.2, 0.25, 0.05);
  for (const CfFamily& f :
       {CfFamily::linnik(1.0, 1.0), CfFamily::generalized_linnik(0.5, 0.3, 0.5),
        CfFamily::generalized_linnik(1.0, kPi / 4.0, 1.0 / 3.0, 2.0),
        CfFamily::semi_alpha_laplace(psi), CfFamily::gen_semi_alpha_laplace(psi, 0.5)}) {
    for (Eigen::Index i = 0; i < grid.size(); ++i) {
      const cdouble v = eval_cf(f, grid[i]);
      const cdouble mirrored = eval_cf(f, -grid[i]);
      CHECK(std::abs(v - std::conj(mirrored)) <= 1e-14);
      CHECK(std::abs(v) <= 1.0 + 1e-15);
      CHECK(std::abs(v) > 0.0);
    }
  }
}

TEST_CASE("skew admissibility bound") {
  CHECK(CfFamily::theta_bound(1.0) == doctest::Approx(kPi / 2.0));
  CHECK(CfFamily::theta_bound(0.5) == doctest::Approx(kPi / 4.0));
  CHECK(CfFamily::theta_bound(1.6) == doctest::Approx(0.2 * kPi).epsilon(1e-12));
  CHECK_NOTHROW(CfFamily::generalized_linnik(1.0, kPi / 2.0, 1.0));
  CHECK_THROWS_AS(CfFamily::generalized_linnik(1.0, 1.8, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(CfFamily::generalized_linnik(0.5, 1.0, 1.0), std::invalid_argument);
}

TEST_CASE("pgf frozen values") {
  CHECK(eval_pgf(PgfFamily::harris(2.0, 1), 0.5) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(eval_pgf(PgfFamily::harris(2.0, 2), 0.5) ==
        doctest::Approx(0.5 / std::sqrt(1.75)).epsilon(1e-7));
  CHECK(eval_pgf(PgfFamily::harris(2.0, 2), 0.5) ==
        doctest::Approx(0.3779645).epsilon(1e-6));
  for (const PgfFamily& f :
       {PgfFamily::harris(3.0, 2), PgfFamily::geometric1(0.3), PgfFamily::sibuya(0.5),
        PgfFamily::degenerate(4), PgfFamily::bernoulli_shift(0.7)})
    CHECK(eval_pgf(f, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("pgfs are nondecreasing with values in [0,1]") {
  const Eigen::ArrayXd grid = make_grid(GridSpec{GridKind::kLinear, 0.0, 1.0, 401});
  for (const PgfFamily& f :
       {PgfFamily::harris(3.0, 2), PgfFamily::geometric1(0.3), PgfFamily::sibuya(0.5),
        PgfFamily::degenerate(4), PgfFamily::bernoulli_shift(0.7)}) {
    double prev = -1.0;
    for (Eigen::Index i = 0; i < grid.size(); ++i) {
      const double v = eval_pgf(f, grid[i]);
      CHECK(v >= 0.0);
      CHECK(v <= 1.0 + 1e-15);
      REQUIRE(v >= prev);
      prev = v;
    }
  }
}

TEST_CASE("family collapses") {
  const Eigen::ArrayXd tgrid = make_grid(GridSpec{GridKind::kLinear, 0.0, 1.0, 200});
  const PgfFamily h1 = PgfFamily::harris(2.0, 1);
  const PgfFamily g = PgfFamily::geometric1(0.5);
  for (Eigen::Index i = 0; i < tgrid.size(); ++i)
    CHECK(std::abs(eval_pgf(h1, tgrid[i]) - eval_pgf(g, tgrid[i])) <= 1e-14);

  const Eigen::ArrayXd sgrid = default_lt_points();
  const LtFamily gsml =
      LtFamily::gen_semi_ml(ScaleFunction::pure_power(2.0, 0.6), 0.7);
  const LtFamily plin = LtFamily::positive_linnik(0.6, 2.0, 0.7);
  for (Eigen::Index i = 0; i < sgrid.size(); ++i)
    CHECK(std::abs(eval_lt(gsml, sgrid[i]) - eval_lt(plin, sgrid[i])) <= 1e-14);
}

TEST_CASE("argument domain guards") {
  CHECK_THROWS_AS(eval_lt(LtFamily::gamma(1.0), -0.1), std::domain_error);
  CHECK_THROWS_AS(eval_pgf(PgfFamily::geometric1(0.5), 1.5), std::domain_error);
  CHECK_THROWS_AS(eval_pgf(PgfFamily::geometric1(0.5), -0.1), std::domain_error);
  CHECK_THROWS_AS(ScaleFunction::pure_power(1.0, 0.5).value(-1.0), std::domain_error);

  // Complex evaluation is restricted to the closed unit disk; the error
  // message names the offending modulus.
  try {
    eval_pgf(PgfFamily::harris(2.0, 2), cdouble(1.2, 0.0));
    CHECK(false);
  } catch (const std::domain_error& e) {
    CHECK(std::string(e.what()).find("1.2") != std::string::npos);
  }
  CHECK_NOTHROW(eval_pgf(PgfFamily::harris(2.0, 2), cdouble(0.0, 1.0)));
}

TEST_CASE("constructor parameter guards") {
  CHECK_THROWS_AS(LtFamily::gamma(0.0), std::invalid_argument);
  CHECK_THROWS_AS(LtFamily::mittag_leffler(1.5, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(LtFamily::positive_stable(0.5, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(LtFamily::semi_ml(ScaleFunction::log_periodic(1.0, 1.5, 0.25)),
                  std::invalid_argument);
  CHECK_THROWS_AS(CfFamily::linnik(2.5, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(PgfFamily::harris(1.0, 2), std::invalid_argument);
  CHECK_THROWS_AS(PgfFamily::harris(2.0, 0), std::invalid_argument);
  CHECK_THROWS_AS(PgfFamily::geometric1(1.0), std::invalid_argument);
  CHECK_THROWS_AS(PgfFamily::sibuya(1.5), std::invalid_argument);
  CHECK_THROWS_AS(PgfFamily::degenerate(0), std::invalid_argument);
  CHECK_THROWS_AS(PgfFamily::bernoulli_shift(1.2), std::invalid_argument);
}
