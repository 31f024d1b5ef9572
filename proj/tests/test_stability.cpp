#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "randstab/descriptor.hpp"
#include "randstab/stability.hpp"

using namespace randstab;

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kE = 2.718281828459045;
}  // namespace

TEST_CASE("harris sum of gamma terms is exact at scale one third") {
  const StabilityReport r =
      verify_continuous(PgfFamily::harris(3.0, 2), LtFamily::gamma(0.5), 1.0 / 3.0);
  CHECK(r.pass);
  CHECK(r.max_residual <= 1e-12);
  CHECK(r.equation == EquationTag::kContinuousLt);
  CHECK(r.compounder == "harris:a=3,k=2");
  CHECK(r.residuals.size() == r.points.size());
  CHECK(r.residuals.maxCoeff() == r.max_residual);
}

TEST_CASE("geometric sums of mittag-leffler terms across the parameter box") {
  for (double alpha : {0.3, 0.5, 1.0})
    for (double c : {0.1, 0.25, 0.5}) {
      const double p = std::pow(c, alpha);
      const StabilityReport r = verify_continuous(
          PgfFamily::geometric1(p), LtFamily::mittag_leffler(alpha, 1.0), c);
      CHECK(r.max_residual <= 1e-12);
    }
}

TEST_CASE("skewed heavy-tailed law is harris-stable for every branching rate") {
  for (double a : {1.5, 2.0, kE, 10.0}) {
    const StabilityReport r =
        verify_continuous(PgfFamily::harris(a, 2),
                          CfFamily::generalized_linnik(1.0, kPi / 4.0, 0.5), 1.0 / a);
    CHECK(r.max_residual <= 1e-12);
    CHECK(r.equation == EquationTag::kContinuousCf);
  }
}

TEST_CASE("log-periodic semi families are stable at their own pair") {
  const ScaleFunction psi = ScaleFunction::log_periodic(1.0, 0.6, 0.25, 0.05);
  const double a = psi.a();
  CHECK(verify_continuous(PgfFamily::geometric1(1.0 / a), LtFamily::semi_ml(psi), psi.b())
            .max_residual <= 1e-12);
  CHECK(verify_continuous(PgfFamily::harris(a, 2), LtFamily::gen_semi_ml(psi, 0.5),
                          psi.b())
            .max_residual <= 1e-12);
  CHECK(verify_continuous(PgfFamily::degenerate(2),
                          LtFamily::semi_stable(ScaleFunction::log_periodic(
                              1.0, 0.6, std::pow(2.0, -1.0 / 0.6), 0.05)),
                          std::pow(2.0, -1.0 / 0.6))
            .max_residual <= 1e-12);
}

TEST_CASE("discrete stability: thinned geometric sums reproduce the law") {
  const DiscretePgf q = DiscretePgf::discrete_ml(1.0, 0.85);
  for (double c : {0.1, 0.25, 0.5, 0.75, 0.9}) {
    const StabilityReport r =
        verify_discrete(PgfFamily::geometric1(std::pow(c, 0.85)), q, c);
    CHECK(r.pass);
    CHECK(r.max_residual <= 1e-12);
    CHECK(r.equation == EquationTag::kDiscrete);
  }
}

TEST_CASE("discrete stability: harris and fixed-size counts") {
  const ScaleFunction psi = ScaleFunction::log_periodic(1.0, 0.6, 0.25, 0.05);
  CHECK(verify_discrete(PgfFamily::harris(psi.a(), 2),
                        DiscretePgf::discrete_gen_sml(psi, 0.5), psi.b())
            .max_residual <= 1e-12);

  for (long k : {2L, 3L, 5L})
    for (double alpha : {0.5, 0.85}) {
      const double c = std::pow(static_cast<double>(k), -1.0 / alpha);
      CHECK(verify_discrete(PgfFamily::degenerate(k),
                            DiscretePgf::discrete_stable(1.0, alpha), c)
                .max_residual <= 1e-12);
    }
}

TEST_CASE("wrong scale fails loudly") {
  const StabilityReport r =
      verify_continuous(PgfFamily::geometric1(0.3), LtFamily::gamma(1.0), 0.5);
  CHECK(!r.pass);
  CHECK(r.max_residual > 1e-2);
}

TEST_CASE("scale outside (0,1) is rejected, not searched") {
  CHECK_THROWS_AS(
      verify_continuous(PgfFamily::geometric1(0.3), LtFamily::gamma(1.0), 1.2),
      std::domain_error);
  CHECK_THROWS_AS(
      verify_continuous(PgfFamily::geometric1(0.3), LtFamily::gamma(1.0), 0.0),
      std::domain_error);
  CHECK_THROWS_AS(verify_discrete(PgfFamily::geometric1(0.3),
                                  DiscretePgf::discrete_stable(1.0, 0.5), 1.0),
                  std::domain_error);
}

TEST_CASE("scale solver returns verified closed forms") {
  const ScaleSearchResult harris_gamma =
      solve_scale(PgfFamily::harris(3.0, 2), LtFamily::gamma(0.5));
  CHECK(harris_gamma.stable);
  CHECK(harris_gamma.closed_form);
  CHECK(std::abs(harris_gamma.c - 1.0 / 3.0) <= 1e-12);

  const ScaleSearchResult geo_ml =
      solve_scale(PgfFamily::geometric1(0.25), LtFamily::mittag_leffler(0.5, 2.0));
  CHECK(geo_ml.stable);
  CHECK(geo_ml.closed_form);
  CHECK(std::abs(geo_ml.c - 0.0625) <= 1e-12);

  const ScaleSearchResult deg_stable =
      solve_scale(PgfFamily::degenerate(4), LtFamily::positive_stable(0.5, 1.0));
  CHECK(deg_stable.stable);
  CHECK(deg_stable.closed_form);
  CHECK(std::abs(deg_stable.c - 0.0625) <= 1e-12);

  const ScaleFunction psi = ScaleFunction::log_periodic(1.0, 0.6, 0.25, 0.05);
  const ScaleSearchResult semi =
      solve_scale(PgfFamily::geometric1(1.0 / psi.a()), LtFamily::semi_ml(psi));
  CHECK(semi.stable);
  CHECK(semi.closed_form);
  CHECK(std::abs(semi.c - 0.25) <= 1e-12);

  const ScaleSearchResult linnik =
      solve_scale(PgfFamily::geometric1(0.25), CfFamily::linnik(1.0, 1.0));
  CHECK(linnik.stable);
  CHECK(linnik.closed_form);
  CHECK(std::abs(linnik.c - 0.25) <= 1e-12);
}

TEST_CASE("scale solver falls back to search when no pattern matches") {
  // A branching rate equal to the square of the scale function's own ratio is
  // still stable (two lattice steps), but no recognized pattern covers it.
  const ScaleFunction psi = ScaleFunction::log_periodic(1.0, 0.6, 0.25, 0.05);
  const double a2 = psi.a() * psi.a();
  const ScaleSearchResult found =
      solve_scale(PgfFamily::harris(a2, 2), LtFamily::gen_semi_ml(psi, 0.5));
  CHECK(found.stable);
  CHECK(!found.closed_form);
  CHECK(std::abs(found.c - 0.0625) <= 1e-8);

  const ScaleSearchResult none =
      solve_scale(PgfFamily::geometric1(0.5), LtFamily::gamma(0.5));
  CHECK(!none.stable);
  CHECK(none.residual > 1e-3);
}

TEST_CASE("compound splitting of heavy-tailed members") {
  const Eigen::ArrayXd grid = make_grid(default_cf_grid());
  CHECK(check_class_L_decomposition(CfFamily::linnik(1.0, 1.0), 2.0, grid) <= 1e-12);
  CHECK(check_class_L_decomposition(CfFamily::generalized_linnik(0.5, 0.3, 0.5), 5.0,
                                    grid) <= 1e-12);

  // Log-periodic members split only along their own lattice of ratios.
  const ScaleFunction psi = ScaleFunction::log_periodic(1.0, 1.2, 0.25, 0.05);
  CHECK(check_class_L_decomposition(CfFamily::semi_alpha_laplace(psi), psi.a(), grid) <=
        1e-12);
  CHECK(check_class_L_decomposition(CfFamily::semi_alpha_laplace(psi), 3.0, grid) > 1e-3);

  // nu must be the reciprocal of an integer for the harris factor to exist.
  CHECK_THROWS_AS(check_class_L_decomposition(
                      CfFamily::generalized_linnik(0.5, 0.3, 0.4), 2.0, grid),
                  std::invalid_argument);
  CHECK_THROWS_AS(check_class_L_decomposition(CfFamily::linnik(1.0, 1.0), 1.0, grid),
                  std::invalid_argument);
}

TEST_CASE("stability report serialization fields") {
  const StabilityReport r = verify_continuous(
      PgfFamily::geometric1(0.25), LtFamily::mittag_leffler(0.5, 1.0), 0.0625,
      GridSpec{GridKind::kGeometric, 0.01, 10.0, 50}, 1e-10);
  CHECK(r.c == 0.0625);
  CHECK(r.tolerance == 1e-10);
  CHECK(r.points.size() == 50);
  CHECK(r.transform == "ml:alpha=0.5,lambda=1");
  CHECK(r.pass);
}
