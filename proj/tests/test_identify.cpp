#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "randstab/identify.hpp"
#include "randstab/stability.hpp"

using namespace randstab;

TEST_CASE("monotone inversion in both orientations") {
  const auto falling = [](double x) { return std::exp(-x); };
  const double x1 = invert_monotone_transform(falling, 0.3, true);
  CHECK(std::abs(x1 + std::log(0.3)) <= 1e-12);

  // Deep-tail target forces the bracket to grow before bisection starts.
  const double x2 = invert_monotone_transform(falling, 1e-9, true);
  CHECK(std::abs(falling(x2) - 1e-9) <= 1e-13);

  const auto rising = [](double x) { return x * x; };
  const double x3 = invert_monotone_transform(rising, 0.49, false);
  CHECK(std::abs(x3 - 0.7) <= 1e-12);
}

TEST_CASE("monotone inversion rejects unreachable targets") {
  const auto slow = [](double x) { return 1.0 / (1.0 + x); };
  CHECK_THROWS_AS(invert_monotone_transform(slow, 1e-12, true), std::domain_error);
  const auto rising = [](double x) { return x * x; };
  CHECK_THROWS_AS(invert_monotone_transform(rising, 1.5, false), std::domain_error);
}

TEST_CASE("exponential terms identify a geometric count at every scale") {
  for (double c : {0.1, 0.25, 1.0 / 3.0, 0.5, 0.9}) {
    const IdentifiedCompounder found = identify_from_lt(LtFamily::gamma(1.0), c);
    REQUIRE(found.matched.has_value());
    CHECK(found.matched->family.tag() == PgfFamily::Tag::kGeometric1);
    CHECK(std::abs(found.matched->family.p() - c) <= 1e-9);
    CHECK(found.matched->sup_distance <= 1e-10);
    CHECK(found.verdict.ok);
    CHECK(found.t_lo == 0.0);
  }
}

TEST_CASE("square-root gamma identifies the two-type branching count") {
  const IdentifiedCompounder found = identify_from_lt(LtFamily::gamma(0.5), 1.0 / 3.0);
  REQUIRE(found.matched.has_value());
  CHECK(found.matched->family.tag() == PgfFamily::Tag::kHarris);
  CHECK(std::abs(found.matched->family.a() - 3.0) <= 1e-8);
  CHECK(found.matched->family.k() == 2);
  CHECK(found.matched->sup_distance <= 1e-10);
  // Recovered curve against the closed form at an interior point.
  CHECK(std::abs(found.curve(0.5) - std::sqrt(0.1)) <= 1e-9);
}

TEST_CASE("positive stable terms identify a fixed count of four") {
  const IdentifiedCompounder found =
      identify_from_lt(LtFamily::positive_stable(0.5, 1.0), 0.0625);
  REQUIRE(found.matched.has_value());
  CHECK(found.matched->family.tag() == PgfFamily::Tag::kDegenerate);
  CHECK(found.matched->family.k() == 4);
  CHECK(std::abs(found.curve(0.8) - 0.4096) <= 1e-10);
  CHECK(found.verdict.ok);
  CHECK(std::abs(found.pmf.coeffs[4] - 1.0) <= 1e-9);
}

TEST_CASE("log-periodic members identify along their own lattice") {
  const double b = std::pow(2.0, -1.0 / 0.6);
  const IdentifiedCompounder ss = identify_from_lt(
      LtFamily::semi_stable(ScaleFunction::log_periodic(1.0, 0.6, b, 0.05)), b);
  REQUIRE(ss.matched.has_value());
  CHECK(ss.matched->family.tag() == PgfFamily::Tag::kDegenerate);
  CHECK(ss.matched->family.k() == 2);
  CHECK(std::abs(ss.curve(0.7) - 0.49) <= 1e-9);

  const ScaleFunction psi = ScaleFunction::log_periodic(1.0, 0.6, 0.25, 0.05);
  const IdentifiedCompounder sm = identify_from_lt(LtFamily::semi_ml(psi), psi.b());
  REQUIRE(sm.matched.has_value());
  CHECK(sm.matched->family.tag() == PgfFamily::Tag::kGeometric1);
  CHECK(std::abs(sm.matched->family.p() - 1.0 / psi.a()) <= 1e-9);
}

TEST_CASE("discrete laws identify their thinning counts") {
  const IdentifiedCompounder geo =
      identify_from_pgf(DiscretePgf::discrete_ml(1.0, 0.85), 0.25);
  REQUIRE(geo.matched.has_value());
  CHECK(geo.matched->family.tag() == PgfFamily::Tag::kGeometric1);
  CHECK(std::abs(geo.matched->family.p() - std::pow(0.25, 0.85)) <= 1e-8);
  CHECK(std::abs(geo.t_lo - 1.0 / (1.0 + std::pow(0.25, 0.85))) <= 1e-12);

  const IdentifiedCompounder harris =
      identify_from_pgf(discretize(LtFamily::gamma(0.5)), 1.0 / 3.0);
  REQUIRE(harris.matched.has_value());
  CHECK(harris.matched->family.tag() == PgfFamily::Tag::kHarris);
  CHECK(std::abs(harris.matched->family.a() - 3.0) <= 1e-7);
  CHECK(harris.matched->family.k() == 2);
  CHECK(std::abs(harris.t_lo - std::pow(4.0 / 3.0, -0.5)) <= 1e-12);

  const IdentifiedCompounder deg =
      identify_from_pgf(DiscretePgf::discrete_stable(1.0, 0.5), 0.0625);
  REQUIRE(deg.matched.has_value());
  CHECK(deg.matched->family.tag() == PgfFamily::Tag::kDegenerate);
  CHECK(deg.matched->family.k() == 4);
  CHECK(std::abs(deg.t_lo - std::exp(-0.25)) <= 1e-12);
}

TEST_CASE("foreign scale produces a curve that is not a generating function") {
  const IdentifiedCompounder found = identify_from_lt(LtFamily::gamma(0.7), 0.5);
  CHECK(!found.matched.has_value());
  CHECK(!found.verdict.ok);
  CHECK(found.verdict.first_negative_index.has_value());
  CHECK(found.pmf.coeffs.minCoeff() < -1e-3);
  CHECK(found.pmf.radius == 0.95);
}

TEST_CASE("identification scale must sit inside (0,1)") {
  CHECK_THROWS_AS(identify_from_lt(LtFamily::gamma(1.0), 1.0), std::domain_error);
  CHECK_THROWS_AS(identify_from_pgf(DiscretePgf::discrete_stable(1.0, 0.5), 0.0),
                  std::domain_error);
}

TEST_CASE("power substitution keeps nonnegativity only at integer exponents") {
  CHECK(check_power_pgf(PgfFamily::geometric1(0.5), 2.0));
  CHECK(check_power_pgf(PgfFamily::geometric1(0.5), 3.0));
  CHECK(!check_power_pgf(PgfFamily::geometric1(0.5), 1.5));
  CHECK_THROWS_AS(check_power_pgf(PgfFamily::geometric1(0.5), 0.0),
                  std::invalid_argument);
}

TEST_CASE("power series fit recovers geometric coefficients") {
  const auto f = [](double t) { return 1.0 / (2.0 - t); };
  const Eigen::ArrayXd coeffs = fit_power_series(f, 64);
  for (int n = 0; n <= 8; ++n)
    CHECK(std::abs(coeffs[n] - std::pow(2.0, -(n + 1))) <= 1e-6);
  CHECK(coeffs.minCoeff() >= -1e-6);

  CHECK_THROWS_AS(fit_power_series(f, 0), std::invalid_argument);
  CHECK_THROWS_AS(fit_power_series(f, 8, 1.0), std::invalid_argument);
}

TEST_CASE("classifier recognizes curves sampled from the candidate families") {
  const PgfFamily harris = PgfFamily::harris(2.5, 2);
  const ClassifyResult ch = classify_compounder(
      [&](double t) { return eval_pgf(harris, t); }, 0.0);
  REQUIRE(ch.matched.has_value());
  CHECK(ch.matched->family.tag() == PgfFamily::Tag::kHarris);
  CHECK(std::abs(ch.matched->family.a() - 2.5) <= 1e-8);

  const PgfFamily sib = PgfFamily::sibuya(0.5);
  const ClassifyResult cs = classify_compounder(
      [&](double t) { return eval_pgf(sib, t); }, 0.0);
  REQUIRE(cs.matched.has_value());
  CHECK(cs.matched->family.tag() == PgfFamily::Tag::kSibuya);
  CHECK(std::abs(cs.matched->family.nu() - 0.5) <= 1e-8);

  // A curve outside the catalogue reports its best distance and no match.
  const ClassifyResult none = classify_compounder(
      [](double t) { return 0.5 * t + 0.5 * t * t * t * t * t; }, 0.0);
  CHECK(!none.matched.has_value());
  CHECK(none.best_distance > 1e-8);
}

TEST_CASE("identified counts re-verify the stability equation") {
  const LtFamily ml = LtFamily::mittag_leffler(0.85, 1.0);
  const IdentifiedCompounder a = identify_from_lt(ml, 0.25);
  REQUIRE(a.matched.has_value());
  CHECK(verify_continuous(a.matched->family, ml, 0.25).max_residual <= 1e-10);

  const LtFamily g = LtFamily::gamma(0.5);
  const IdentifiedCompounder b = identify_from_lt(g, 1.0 / 3.0);
  REQUIRE(b.matched.has_value());
  CHECK(verify_continuous(b.matched->family, g, 1.0 / 3.0).max_residual <= 1e-10);

  const DiscretePgf q = DiscretePgf::discrete_ml(1.0, 0.85);
  const IdentifiedCompounder d = identify_from_pgf(q, 0.6);
  REQUIRE(d.matched.has_value());
  CHECK(verify_discrete(d.matched->family, q, 0.6).max_residual <= 1e-10);
}
