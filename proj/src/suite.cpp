#include "randstab/suite.hpp"

#include <cmath>

#include "randstab/descriptor.hpp"
#include "randstab/identify.hpp"
#include "randstab/report.hpp"
#include "randstab/sampling.hpp"
#include "randstab/stability.hpp"
#include "randstab/stats.hpp"

namespace randstab {

namespace {

using detail_t = nlohmann::ordered_json;

constexpr double kE = 2.718281828459045;
constexpr double kPi = 3.14159265358979323846;
constexpr std::int64_t kMcDraws = 100000;

bool residual_entry(detail_t& detail, const char* key, double residual, double tol) {
  detail[key] = residual;
  detail["tolerance"] = tol;
  return residual <= tol;
}

// Max |a - b| over a shared grid for two scalar functions.
template <class F, class G>
double sup_gap(const Eigen::ArrayXd& grid, F&& f, G&& g) {
  double worst = 0.0;
  for (Eigen::Index i = 0; i < grid.size(); ++i)
    worst = std::max(worst, std::abs(f(grid[i]) - g(grid[i])));
  return worst;
}

bool push_verdict(detail_t& detail, const McVerdict& v) {
  detail["verdicts"].push_back(to_json(v));
  return v.pass;
}

struct MatchExpectation {
  PgfFamily::Tag tag;
  double a = 0.0;
  long k = 0;
  double p = 0.0;
};

bool check_match(detail_t& detail, const IdentifiedCompounder& found,
                 const MatchExpectation& want, double param_tol) {
  detail_t d;
  d["verdict"] = found.verdict.ok ? "valid-pgf" : "not-a-pgf";
  if (!found.matched) {
    d["matched"] = nullptr;
    detail["cases"].push_back(d);
    return false;
  }
  const PgfFamily& f = found.matched->family;
  d["matched"] = format_descriptor(f);
  d["sup_distance"] = found.matched->sup_distance;
  detail["cases"].push_back(d);
  if (!found.verdict.ok || f.tag() != want.tag) return false;
  switch (want.tag) {
    case PgfFamily::Tag::kHarris:
      return f.k() == want.k && std::abs(f.a() - want.a) <= param_tol;
    case PgfFamily::Tag::kGeometric1:
      return std::abs(f.p() - want.p) <= param_tol;
    case PgfFamily::Tag::kDegenerate:
      return f.k() == want.k;
    default:
      return false;
  }
}

}  // namespace

std::vector<SuiteEntry> paper_suite(std::uint64_t master_seed) {
  std::vector<SuiteEntry> entries;
  const std::uint64_t seed = master_seed;

  // -------------------------------------------------------------------
  // Scale equation.
  // -------------------------------------------------------------------

  entries.push_back({"scale/pure-power-pairs",
                     "a pure power exponent satisfies the scale equation for every "
                     "admissible pair",
                     [](detail_t& detail) {
                       const ScaleFunction psi = ScaleFunction::pure_power(2.0, 0.6);
                       const Eigen::ArrayXd grid = default_lt_points();
                       double worst = 0.0;
                       for (double b : {0.2, 0.5, 0.8})
                         worst = std::max(worst, check_scale_equation(
                                                     psi, std::pow(b, -0.6), b, grid));
                       return residual_entry(detail, "max_residual", worst, 1e-12);
                     }});

  entries.push_back({"scale/log-periodic-pair",
                     "the log-periodic exponent satisfies the scale equation for its "
                     "own pair",
                     [](detail_t& detail) {
                       const ScaleFunction psi =
                           ScaleFunction::log_periodic(1.0, 0.6, 0.25, 0.05);
                       const double r = check_scale_equation(psi, default_lt_points());
                       detail["a"] = psi.a();
                       detail["b"] = psi.b();
                       return residual_entry(detail, "max_residual", r, 1e-12);
                     }});

  entries.push_back({"scale/mismatched-pair-rejected",
                     "a mismatched pair leaves a visible scale equation residual",
                     [](detail_t& detail) {
                       const ScaleFunction psi =
                           ScaleFunction::log_periodic(1.0, 0.6, 0.25, 0.05);
                       const double r = check_scale_equation(psi, std::pow(0.3, -0.6),
                                                             0.3, default_lt_points());
                       detail["max_residual"] = r;
                       detail["floor"] = 1e-4;
                       return r > 1e-4;
                     }});

  // -------------------------------------------------------------------
  // Transform families.
  // -------------------------------------------------------------------

  entries.push_back(
      {"transform/lt-monotone",
       "laplace transforms start at one and decrease strictly to zero",
       [](detail_t& detail) {
         const ScaleFunction psi = ScaleFunction::log_periodic(1.0, 0.6, 0.25, 0.05);
         const std::vector<LtFamily> families = {
             LtFamily::gamma(0.5),
             LtFamily::mittag_leffler(0.85, 1.0),
             LtFamily::positive_linnik(0.5, 2.0, 0.7),
             LtFamily::semi_ml(psi),
             LtFamily::gen_semi_ml(psi, 0.5),
             LtFamily::positive_stable(0.5, 1.0),
             LtFamily::semi_stable(psi)};
         const Eigen::ArrayXd grid = default_lt_points();
         bool ok = true;
         for (const LtFamily& f : families) {
           if (std::abs(eval_lt(f, 0.0) - 1.0) > 1e-15) ok = false;
           double prev = 1.0;
           for (Eigen::Index i = 0; i < grid.size(); ++i) {
             const double v = eval_lt(f, grid[i]);
             if (!(v > 0.0 && v < prev)) ok = false;
             prev = v;
           }
           detail["families"].push_back(format_descriptor(f));
         }
         return ok;
       }});

  entries.push_back(
      {"transform/cf-hermitian-bounded",
       "characteristic functions are hermitian and bounded by one",
       [](detail_t& detail) {
         const ScaleFunction psi = ScaleFunction::log_periodic(1.0, 1.2, 0.25, 0.05);
         const std::vector<CfFamily> families = {
             CfFamily::linnik(1.0, 1.0),
             CfFamily::generalized_linnik(0.5, 0.3, 0.5),
             CfFamily::generalized_linnik(1.0, kPi / 4.0, 1.0 / 3.0, 2.0),
             CfFamily::semi_alpha_laplace(psi),
             CfFamily::gen_semi_alpha_laplace(psi, 0.5)};
         const Eigen::ArrayXd grid = default_cf_points();
         double worst_sym = 0.0;
         double worst_mod = 0.0;
         for (const CfFamily& f : families) {
           for (Eigen::Index i = 0; i < grid.size(); ++i) {
             const cdouble v = eval_cf(f, grid[i]);
             worst_sym = std::max(worst_sym,
                                  std::abs(v - std::conj(eval_cf(f, -grid[i]))));
             worst_mod = std::max(worst_mod, std::abs(v) - 1.0);
           }
           detail["families"].push_back(format_descriptor(f));
         }
         detail["max_hermitian_gap"] = worst_sym;
         detail["max_modulus_excess"] = worst_mod;
         return worst_sym <= 1e-15 && worst_mod <= 1e-15;
       }});

  entries.push_back(
      {"transform/cf-never-zero",
       "characteristic functions used in passing reports stay away from zero",
       [](detail_t& detail) {
         const ScaleFunction psi = ScaleFunction::log_periodic(1.0, 1.2, 0.25, 0.05);
         const std::vector<CfFamily> families = {
             CfFamily::linnik(1.0, 1.0), CfFamily::generalized_linnik(0.5, 0.3, 0.5),
             CfFamily::semi_alpha_laplace(psi)};
         const Eigen::ArrayXd grid = default_cf_points();
         double least = 1.0;
         for (const CfFamily& f : families)
           for (Eigen::Index i = 0; i < grid.size(); ++i)
             least = std::min(least, std::abs(eval_cf(f, grid[i])));
         detail["min_modulus"] = least;
         return least > 1e-3;
       }});

  entries.push_back(
      {"transform/collapse-k1",
       "one-parameter reductions coincide: harris at k=1 with the geometric law, "
       "semi forms with zero wobble with their power counterparts",
       [](detail_t& detail) {
         const Eigen::ArrayXd tgrid = default_pgf_points();
         const double g1 = sup_gap(
             tgrid,
             [f = PgfFamily::harris(2.5, 1)](double t) { return eval_pgf(f, t); },
             [f = PgfFamily::geometric1(0.4)](double t) { return eval_pgf(f, t); });
         const Eigen::ArrayXd sgrid = default_lt_points();
         const ScaleFunction flat = ScaleFunction::log_periodic(2.0, 0.6, 0.25, 0.0);
         const double g2 = sup_gap(
             sgrid, [f = LtFamily::semi_ml(flat)](double s) { return eval_lt(f, s); },
             [f = LtFamily::mittag_leffler(0.6, 2.0)](double s) { return eval_lt(f, s); });
         const double g3 = sup_gap(
             sgrid,
             [f = LtFamily::gen_semi_ml(ScaleFunction::pure_power(2.0, 0.6), 0.7)](
                 double s) { return eval_lt(f, s); },
             [f = LtFamily::positive_linnik(0.6, 2.0, 0.7)](double s) {
               return eval_lt(f, s);
             });
         detail["harris_vs_geometric"] = g1;
         detail["flat_semi_vs_ml"] = g2;
         detail["pure_power_semi_vs_linnik"] = g3;
         return g1 <= 1e-14 && g2 <= 1e-14 && g3 <= 1e-14;
       }});

  // -------------------------------------------------------------------
  // Stability of random sums.
  // -------------------------------------------------------------------

  entries.push_back({"stability/harris-gamma",
                     "the harris sum of gamma terms at matching shape reproduces the "
                     "gamma law at scale one third",
                     [](detail_t& detail) {
                       const StabilityReport r = verify_continuous(
                           PgfFamily::harris(3.0, 2), LtFamily::gamma(0.5), 1.0 / 3.0);
                       detail["c"] = r.c;
                       return residual_entry(detail, "max_residual", r.max_residual,
                                             1e-12);
                     }});

  entries.push_back(
      {"stability/geometric-ml-sweep",
       "geometric sums reproduce the heavy-tailed transform across tail indices "
       "and success rates",
       [](detail_t& detail) {
         double worst = 0.0;
         for (double alpha : {0.5, 0.85, 1.0})
           for (double p : {0.3, 0.5}) {
             const double c = std::pow(p, 1.0 / alpha);
             const StabilityReport r = verify_continuous(
                 PgfFamily::geometric1(p), LtFamily::mittag_leffler(alpha, 1.0), c);
             worst = std::max(worst, r.max_residual);
           }
         return residual_entry(detail, "max_residual", worst, 1e-12);
       }});

  entries.push_back(
      {"stability/gl-harris-scale-family",
       "harris sums reproduce the skewed heavy-tailed law for every branching "
       "parameter checked",
       [](detail_t& detail) {
         double worst = 0.0;
         for (double a : {1.5, 2.0, kE, 10.0}) {
           const StabilityReport r =
               verify_continuous(PgfFamily::harris(a, 2),
                                 CfFamily::generalized_linnik(0.5, 0.3, 0.5),
                                 std::pow(a, -2.0));
           worst = std::max(worst, r.max_residual);
         }
         // Boundary tail index with the widest admissible skew.
         const StabilityReport r =
             verify_continuous(PgfFamily::harris(2.0, 3),
                               CfFamily::generalized_linnik(1.0, kPi / 4.0, 1.0 / 3.0, 2.0),
                               0.5);
         worst = std::max(worst, r.max_residual);
         return residual_entry(detail, "max_residual", worst, 1e-12);
       }});

  entries.push_back(
      {"stability/semi-ml-log-periodic",
       "log-periodic semi families are stable at their own geometric scale",
       [](detail_t& detail) {
         const ScaleFunction psi = ScaleFunction::log_periodic(1.0, 0.6, 0.25, 0.05);
         const double a = psi.a();
         double worst = verify_continuous(PgfFamily::geometric1(1.0 / a),
                                          LtFamily::semi_ml(psi), psi.b())
                            .max_residual;
         worst = std::max(worst, verify_continuous(PgfFamily::harris(a, 2),
                                                   LtFamily::gen_semi_ml(psi, 0.5),
                                                   psi.b())
                                     .max_residual);
         detail["a"] = a;
         detail["c"] = psi.b();
         return residual_entry(detail, "max_residual", worst, 1e-12);
       }});

  entries.push_back({"stability/wrong-c-rejected",
                     "a wrong scale leaves a residual far above tolerance",
                     [](detail_t& detail) {
                       const StabilityReport r = verify_continuous(
                           PgfFamily::geometric1(0.3), LtFamily::gamma(1.0), 0.5);
                       detail["max_residual"] = r.max_residual;
                       detail["floor"] = 1e-2;
                       return r.max_residual > 1e-2 && !r.pass;
                     }});

  entries.push_back(
      {"stability/scale-search-closed-forms",
       "the scale solver returns the known closed forms and verifies them",
       [](detail_t& detail) {
         bool ok = true;
         const auto record = [&](const char* name, const ScaleSearchResult& r,
                                 double expect) {
           detail_t d;
           d["case"] = name;
           d["c"] = r.c;
           d["closed_form"] = r.closed_form;
           d["residual"] = r.residual;
           detail["cases"].push_back(d);
           ok = ok && r.stable && r.closed_form && std::abs(r.c - expect) <= 1e-12;
         };
         record("harris-gamma",
                solve_scale(PgfFamily::harris(3.0, 2), LtFamily::gamma(0.5)),
                1.0 / 3.0);
         record("geometric-ml",
                solve_scale(PgfFamily::geometric1(0.25),
                            LtFamily::mittag_leffler(0.5, 2.0)),
                0.0625);
         record("degenerate-stable",
                solve_scale(PgfFamily::degenerate(4),
                            LtFamily::positive_stable(0.5, 1.0)),
                0.0625);
         return ok;
       }});

  entries.push_back(
      {"stability/no-stable-scale-detected",
       "a pair with no stabilizing scale is reported unstable, not forced",
       [](detail_t& detail) {
         const ScaleSearchResult r =
             solve_scale(PgfFamily::geometric1(0.5), LtFamily::gamma(0.5));
         detail["stable"] = r.stable;
         detail["best_residual"] = r.residual;
         detail["floor"] = 1e-3;
         return !r.stable && r.residual > 1e-3;
       }});

  entries.push_back(
      {"decomposition/heavy-tail-compound",
       "the heavy-tailed law factors through its own scaled copy compounded by "
       "a harris count",
       [](detail_t& detail) {
         const Eigen::ArrayXd grid = default_cf_points();
         const double r1 =
             check_class_L_decomposition(CfFamily::linnik(1.0, 1.0), 2.0, grid);
         const double r2 = check_class_L_decomposition(
             CfFamily::generalized_linnik(0.5, 0.3, 0.5), 5.0, grid);
         // Off the geometric lattice a log-periodic member does not factor.
         const ScaleFunction psi = ScaleFunction::log_periodic(1.0, 1.2, 0.25, 0.05);
         const double on_lattice =
             check_class_L_decomposition(CfFamily::semi_alpha_laplace(psi), psi.a(), grid);
         const double off_lattice =
             check_class_L_decomposition(CfFamily::semi_alpha_laplace(psi), 3.0, grid);
         detail["linnik_residual"] = r1;
         detail["skewed_residual"] = r2;
         detail["log_periodic_on_lattice"] = on_lattice;
         detail["log_periodic_off_lattice"] = off_lattice;
         return r1 <= 1e-12 && r2 <= 1e-12 && on_lattice <= 1e-12 &&
                off_lattice > 1e-3;
       }});

  // -------------------------------------------------------------------
  // Integer analogues.
  // -------------------------------------------------------------------

  entries.push_back(
      {"discrete/analogue-coefficients",
       "integer analogues of the positive laws have nonnegative extracted "
       "coefficients up to the resolvable index",
       [](detail_t& detail) {
         const std::vector<DiscretePgf> laws = {
             discretize(LtFamily::positive_stable(0.9, 0.85)),
             DiscretePgf::discrete_ml(1.0, 0.85),
             DiscretePgf::discrete_linnik(1.0, 0.85, 0.7),
             discretize(LtFamily::gamma(0.5))};
         bool ok = true;
         for (const DiscretePgf& q : laws) {
           const PmfTable table = extract_pmf(q, ExtractOptions{64, 0.7});
           const PgfCheck check = is_pgf_coeffs_noise_aware(table, 1e-10);
           detail_t d;
           d["law"] = format_descriptor(q);
           d["min_coeff"] = table.coeffs.minCoeff();
           d["mass_deficiency"] = table.mass_deficiency;
           d["ok"] = check.ok;
           detail["cases"].push_back(d);
           ok = ok && check.ok;
         }
         return ok;
       }});

  entries.push_back(
      {"discrete/ml-geometric-sweep",
       "geometric sums of thinned integer terms reproduce the integer "
       "heavy-tailed law at five thinning rates",
       [](detail_t& detail) {
         const double alpha = 0.85;
         const DiscretePgf q = DiscretePgf::discrete_ml(1.0, alpha);
         double worst = 0.0;
         for (double c : {0.1, 0.25, 0.5, 0.75, 0.9}) {
           const double p = std::pow(c, alpha);
           const StabilityReport r = verify_discrete(PgfFamily::geometric1(p), q, c);
           worst = std::max(worst, r.max_residual);
           detail["cs"].push_back(c);
         }
         return residual_entry(detail, "max_residual", worst, 1e-12);
       }});

  entries.push_back(
      {"discrete/harris-semi-analogue",
       "harris sums of thinned terms reproduce the integer log-periodic law at "
       "its own scale",
       [](detail_t& detail) {
         const ScaleFunction psi = ScaleFunction::log_periodic(1.0, 0.6, 0.25, 0.05);
         const DiscretePgf q = DiscretePgf::discrete_gen_sml(psi, 0.5);
         const StabilityReport r =
             verify_discrete(PgfFamily::harris(psi.a(), 2), q, psi.b());
         detail["a"] = psi.a();
         detail["c"] = psi.b();
         return residual_entry(detail, "max_residual", r.max_residual, 1e-12);
       }});

  entries.push_back(
      {"discrete/degenerate-stable",
       "fixed-size sums of thinned terms reproduce the integer stable law",
       [](detail_t& detail) {
         double worst = 0.0;
         for (long k : {2L, 3L, 5L})
           for (double alpha : {0.5, 0.85}) {
             const double c = std::pow(static_cast<double>(k), -1.0 / alpha);
             const StabilityReport r = verify_discrete(
                 PgfFamily::degenerate(k), DiscretePgf::discrete_stable(1.0, alpha), c);
             worst = std::max(worst, r.max_residual);
           }
         return residual_entry(detail, "max_residual", worst, 1e-12);
       }});

  entries.push_back(
      {"discrete/self-splitting",
       "the integer stable law splits into two thinned copies of itself; the "
       "integer heavy-tailed law does not",
       [](detail_t& detail) {
         const Eigen::ArrayXd grid = default_pgf_points();
         double worst = 0.0;
         for (double c : {0.3, 0.6})
           worst = std::max(worst,
                            check_selfdecomp_discrete_stable(0.9, 0.85, c, grid));
         detail["stable_residual"] = worst;
         const double foreign = check_selfdecomp_identity(
             DiscretePgf::discrete_ml(1.0, 0.85), 0.85, 0.5, grid);
         detail["foreign_residual"] = foreign;
         return worst <= 1e-12 && foreign > 1e-3;
       }});

  entries.push_back(
      {"discrete/sibuya-bernoulli-compose",
       "a bernoulli count of sibuya-bernoulli terms closes the family with "
       "multiplied weight",
       [](detail_t& detail) {
         const double r =
             compose_sibuya_bernoulli(0.7, 0.8, 0.5, default_pgf_points());
         return residual_entry(detail, "max_residual", r, 1e-12);
       }});

  entries.push_back(
      {"discrete/thinning-composes",
       "thinning twice equals thinning once at the product rate",
       [](detail_t& detail) {
         const Eigen::ArrayXd grid = default_pgf_points();
         const DiscretePgf q1 = DiscretePgf::discrete_stable(0.9, 0.85);
         const DiscretePgf q2 = discretize(LtFamily::gamma(0.5));
         double worst = 0.0;
         for (const DiscretePgf& q : {q1, q2}) {
           const DiscretePgf two_steps =
               d_type_transform(d_type_transform(q, 0.6), 0.5);
           const DiscretePgf one_step = d_type_transform(q, 0.3);
           worst = std::max(worst, sup_gap(
                                       grid,
                                       [&](double s) {
                                         return eval_discrete_pgf(two_steps, s);
                                       },
                                       [&](double s) {
                                         return eval_discrete_pgf(one_step, s);
                                       }));
         }
         return residual_entry(detail, "max_residual", worst, 1e-12);
       }});

  // -------------------------------------------------------------------
  // Identification of the compounding law.
  // -------------------------------------------------------------------

  entries.push_back(
      {"identify/ml-to-geometric",
       "the compounding law recovered from the heavy-tailed transform is "
       "geometric with the predicted rate",
       [](detail_t& detail) {
         bool ok = true;
         for (double c : {0.25, 0.5}) {
           const IdentifiedCompounder found =
               identify_from_lt(LtFamily::mittag_leffler(0.85, 1.0), c);
           MatchExpectation want;
           want.tag = PgfFamily::Tag::kGeometric1;
           want.p = std::pow(c, 0.85);
           ok = ok && check_match(detail, found, want, 1e-6);
         }
         return ok;
       }});

  entries.push_back(
      {"identify/gamma-to-harris",
       "the compounding law recovered from the gamma transform at scale one "
       "third is the two-branch harris law",
       [](detail_t& detail) {
         const IdentifiedCompounder found =
             identify_from_lt(LtFamily::gamma(0.5), 1.0 / 3.0);
         MatchExpectation want;
         want.tag = PgfFamily::Tag::kHarris;
         want.a = 3.0;
         want.k = 2;
         bool ok = check_match(detail, found, want, 1e-6);
         const double mid = found.curve(0.5);
         detail["curve_at_half"] = mid;
         ok = ok && std::abs(mid - std::sqrt(0.1)) <= 1e-9;
         return ok;
       }});

  entries.push_back(
      {"identify/stable-to-degenerate",
       "the compounding law recovered from the one-sided stable transform is a "
       "fixed count",
       [](detail_t& detail) {
         const IdentifiedCompounder found =
             identify_from_lt(LtFamily::positive_stable(0.5, 1.0), 0.0625);
         MatchExpectation want;
         want.tag = PgfFamily::Tag::kDegenerate;
         want.k = 4;
         return check_match(detail, found, want, 1e-6);
       }});

  entries.push_back(
      {"identify/log-periodic-to-geometric",
       "the log-periodic semi family identifies a geometric compounder at its "
       "own scale",
       [](detail_t& detail) {
         const ScaleFunction psi = ScaleFunction::log_periodic(1.0, 0.6, 0.25, 0.05);
         const IdentifiedCompounder found =
             identify_from_lt(LtFamily::semi_ml(psi), psi.b());
         MatchExpectation want;
         want.tag = PgfFamily::Tag::kGeometric1;
         want.p = 1.0 / psi.a();
         return check_match(detail, found, want, 1e-6);
       }});

  entries.push_back(
      {"identify/discrete-routes",
       "the same compounders are recovered through the integer route",
       [](detail_t& detail) {
         bool ok = true;
         {
           const IdentifiedCompounder found =
               identify_from_pgf(DiscretePgf::discrete_ml(1.0, 0.85), 0.25);
           MatchExpectation want;
           want.tag = PgfFamily::Tag::kGeometric1;
           want.p = std::pow(0.25, 0.85);
           ok = ok && check_match(detail, found, want, 1e-6);
         }
         {
           const IdentifiedCompounder found =
               identify_from_pgf(discretize(LtFamily::gamma(0.5)), 1.0 / 3.0);
           MatchExpectation want;
           want.tag = PgfFamily::Tag::kHarris;
           want.a = 3.0;
           want.k = 2;
           ok = ok && check_match(detail, found, want, 1e-6);
         }
         {
           const IdentifiedCompounder found =
               identify_from_pgf(DiscretePgf::discrete_stable(1.0, 0.5), 0.0625);
           MatchExpectation want;
           want.tag = PgfFamily::Tag::kDegenerate;
           want.k = 4;
           ok = ok && check_match(detail, found, want, 1e-6);
         }
         return ok;
       }});

  entries.push_back(
      {"identify/curve-power-law",
       "for scale-equation transforms the recovered curve is an exact power law",
       [](detail_t& detail) {
         bool ok = true;
         for (double a : {4.0, kE}) {
           const double b = std::pow(a, -1.0 / 0.6);
           const ScaleFunction psi = ScaleFunction::log_periodic(1.0, 0.6, b, 0.05);
           const IdentifiedCompounder found =
               identify_from_lt(LtFamily::semi_stable(psi), b);
           double worst = 0.0;
           for (int i = 1; i <= 19; ++i) {
             const double t = i / 20.0;
             worst = std::max(worst, std::abs(found.curve(t) - std::pow(t, a)));
           }
           detail_t d;
           d["a"] = a;
           d["max_curve_gap"] = worst;
           if (found.matched) d["matched"] = format_descriptor(found.matched->family);
           detail["cases"].push_back(d);
           ok = ok && worst <= 1e-9;
           if (a == 4.0)
             ok = ok && found.matched &&
                  found.matched->family.tag() == PgfFamily::Tag::kDegenerate &&
                  found.matched->family.k() == 4;
         }
         return ok;
       }});

  entries.push_back(
      {"identify/rejects-foreign-scale",
       "at a scale the gamma family cannot support, the recovered curve is not "
       "a generating function",
       [](detail_t& detail) {
         const IdentifiedCompounder found = identify_from_lt(LtFamily::gamma(0.7), 0.5);
         detail["verdict"] = found.verdict.ok ? "valid-pgf" : "not-a-pgf";
         detail["matched"] = found.matched != std::nullopt;
         detail["min_coeff"] = found.pmf.coeffs.minCoeff();
         return !found.matched && !found.verdict.ok &&
                found.pmf.coeffs.minCoeff() < -1e-6;
       }});

  entries.push_back(
      {"identify/power-substitution-gate",
       "composing with an integer power keeps a generating function; a "
       "fractional power does not",
       [](detail_t& detail) {
         const PgfFamily p = PgfFamily::geometric1(0.5);
         const bool integer_ok = check_power_pgf(p, 2.0);
         const bool fractional_bad = !check_power_pgf(p, 1.5);
         detail["integer_ok"] = integer_ok;
         detail["fractional_rejected"] = fractional_bad;
         return integer_ok && fractional_bad;
       }});

  entries.push_back(
      {"identify/round-trips",
       "every identified compounder closes the loop: its sum reproduces the "
       "transform it was recovered from",
       [](detail_t& detail) {
         bool ok = true;
         const auto round_trip_lt = [&](const LtFamily& phi, double c) {
           const IdentifiedCompounder found = identify_from_lt(phi, c);
           if (!found.matched) {
             ok = false;
             return;
           }
           const StabilityReport r =
               verify_continuous(found.matched->family, phi, c, default_lt_grid(), 1e-7);
           detail_t d;
           d["transform"] = format_descriptor(phi);
           d["compounder"] = format_descriptor(found.matched->family);
           d["residual"] = r.max_residual;
           detail["cases"].push_back(d);
           ok = ok && r.pass;
         };
         round_trip_lt(LtFamily::mittag_leffler(0.85, 1.0), 0.5);
         round_trip_lt(LtFamily::gamma(0.5), 1.0 / 3.0);
         round_trip_lt(LtFamily::positive_stable(0.5, 1.0), 0.0625);

         const DiscretePgf q = DiscretePgf::discrete_ml(1.0, 0.85);
         const IdentifiedCompounder found = identify_from_pgf(q, 0.25);
         if (found.matched) {
           const StabilityReport r = verify_discrete(found.matched->family, q, 0.25,
                                                     default_pgf_grid(), 1e-7);
           detail_t d;
           d["transform"] = format_descriptor(q);
           d["compounder"] = format_descriptor(found.matched->family);
           d["residual"] = r.max_residual;
           detail["cases"].push_back(d);
           ok = ok && r.pass;
         } else {
           ok = false;
         }
         return ok;
       }});

  // -------------------------------------------------------------------
  // Monte Carlo confirmation.
  // -------------------------------------------------------------------

  entries.push_back(
      {"mc/sum-matches-law-continuous",
       "a scaled geometric sum of heavy-tailed draws is indistinguishable from "
       "a fresh draw of the law",
       [seed](detail_t& detail) {
         const double alpha = 0.85;
         const double p = 0.5;
         const double c = std::pow(p, 1.0 / alpha);
         const LtFamily phi = LtFamily::mittag_leffler(alpha, 1.0);
         const SampleBatch sums =
             sample_random_sum(PgfFamily::geometric1(p), phi, c, kMcDraws, seed, 100);
         const SampleBatch fresh = sample_lt_family(phi, kMcDraws, seed, 101);
         detail["c"] = c;
         detail["zero_n_events"] = sums.zero_n_events;
         return push_verdict(detail, ks_verdict(sums, fresh));
       }});

  entries.push_back(
      {"mc/degenerate-stable-sum",
       "a scaled fixed-size sum of one-sided stable draws is indistinguishable "
       "from one draw",
       [seed](detail_t& detail) {
         const double alpha = 0.7;
         const long k = 3;
         const double c = std::pow(static_cast<double>(k), -1.0 / alpha);
         const LtFamily phi = LtFamily::positive_stable(alpha, 1.0);
         const SampleBatch sums =
             sample_random_sum(PgfFamily::degenerate(k), phi, c, kMcDraws, seed, 110);
         const SampleBatch fresh = sample_lt_family(phi, kMcDraws, seed, 111);
         detail["c"] = c;
         return push_verdict(detail, ks_verdict(sums, fresh));
       }});

  entries.push_back(
      {"mc/thinned-sum-matches-law",
       "a geometric sum of thinned integer draws matches the integer law in "
       "total variation",
       [seed](detail_t& detail) {
         const double alpha = 0.85;
         const double c = 0.6;
         const double p = std::pow(c, alpha);
         const DiscretePgf q = DiscretePgf::discrete_ml(1.0, alpha);
         const SampleBatch sums = sample_random_sum_discrete(
             PgfFamily::geometric1(p), q, c, kMcDraws, seed, 120);
         const PmfTable table = extract_pmf(q, ExtractOptions{64, 0.7});
         detail["c"] = c;
         return push_verdict(detail, tv_verdict(sums, table));
       }});

  entries.push_back(
      {"mc/sampler-tables",
       "integer samplers match their extracted coefficient tables in total "
       "variation",
       [seed](detail_t& detail) {
         bool ok = true;
         const std::vector<DiscretePgf> laws = {
             DiscretePgf::discrete_stable(0.9, 0.85),
             DiscretePgf::discrete_ml(1.0, 0.85),
             DiscretePgf::discrete_linnik(1.0, 0.85, 0.7)};
         std::uint64_t stream = 130;
         for (const DiscretePgf& q : laws) {
           const SampleBatch draws = sample_discrete(q, kMcDraws, seed, stream++);
           const PmfTable table = extract_pmf(q, ExtractOptions{64, 0.7});
           ok = push_verdict(detail, tv_verdict(draws, table)) && ok;
         }
         return ok;
       }});

  entries.push_back(
      {"mc/sampler-transform",
       "continuous samplers reproduce their transforms within three standard "
       "errors pointwise",
       [seed](detail_t& detail) {
         const Eigen::ArrayXd pts = (Eigen::ArrayXd(5) << 0.05, 0.2, 1.0, 3.0, 10.0)
                                        .finished();
         bool ok = true;
         std::uint64_t stream = 140;
         const std::vector<LtFamily> families = {
             LtFamily::positive_stable(0.5, 1.0),
             LtFamily::positive_linnik(0.85, 1.0, 0.7), LtFamily::gamma(1.3)};
         for (const LtFamily& phi : families) {
           const SampleBatch draws = sample_lt_family(phi, kMcDraws, seed, stream++);
           const LtCheckResult r = empirical_lt_check(draws.values, phi, pts);
           detail_t d;
           d["family"] = format_descriptor(phi);
           d["max_z"] = r.max_z;
           detail["cases"].push_back(d);
           ok = ok && r.pass;
         }
         return ok;
       }});

  entries.push_back(
      {"mc/thinning-semigroup",
       "thinning draws twice matches the law thinned once at the product rate",
       [seed](detail_t& detail) {
         const DiscretePgf q = DiscretePgf::discrete_stable(0.9, 0.85);
         const SampleBatch base = sample_discrete(q, kMcDraws, seed, 150);
         const SampleBatch once = binomial_thin(base, 0.6, seed, 151);
         const SampleBatch twice = binomial_thin(once, 0.5, seed, 152);
         const DiscretePgf target = d_type_transform(q, 0.3);
         const PmfTable table = extract_pmf(target, ExtractOptions{64, 0.7});
         return push_verdict(detail, tv_verdict(twice, table));
       }});

  entries.push_back(
      {"mc/reproducible-streams",
       "the same seed and stream reproduce a batch exactly; a different stream "
       "does not",
       [seed](detail_t& detail) {
         const DiscretePgf q = DiscretePgf::discrete_ml(1.0, 0.85);
         const SampleBatch a = sample_discrete(q, 1000, seed, 160);
         const SampleBatch b = sample_discrete(q, 1000, seed, 160);
         const SampleBatch other = sample_discrete(q, 1000, seed, 161);
         const bool same = (a.values == b.values).all();
         const bool differs = (a.values != other.values).any();
         detail["identical"] = same;
         detail["other_stream_differs"] = differs;
         detail["head"] = {a.values[0], a.values[1], a.values[2]};
         return same && differs;
       }});

  entries.push_back(
      {"mc/streams-uncorrelated",
       "parallel streams from one seed show no linear correlation",
       [seed](detail_t& detail) {
         const std::int64_t n = kMcDraws;
         RandomSource s0(seed, 170);
         RandomSource s1(seed, 171);
         Eigen::ArrayXd a(n);
         Eigen::ArrayXd b(n);
         for (std::int64_t i = 0; i < n; ++i) {
           a[i] = s0.uniform01();
           b[i] = s1.uniform01();
         }
         const double ma = a.mean();
         const double mb = b.mean();
         const double cov = ((a - ma) * (b - mb)).sum();
         const double r =
             cov / std::sqrt((a - ma).square().sum() * (b - mb).square().sum());
         detail["pearson_r"] = r;
         detail["limit"] = 0.01;
         return std::abs(r) <= 0.01;
       }});

  entries.push_back(
      {"stats/detects-mismatch",
       "the statistical machinery rejects laws that truly differ",
       [seed](detail_t& detail) {
         // Shifted exponentials must fail the two-sample comparison.
         RandomSource src(seed, 180);
         Eigen::ArrayXd x(20000);
         Eigen::ArrayXd y(20000);
         for (Eigen::Index i = 0; i < x.size(); ++i) {
           x[i] = src.exponential();
           y[i] = src.exponential() + 0.5;
         }
         const KsResult ks = ks_two_sample(x, y);
         detail["ks_p_shifted"] = ks.p_value;
         // Counting laws with different means must sit far apart in total
         // variation.
         const SampleBatch pois =
             sample_discrete(DiscretePgf::discrete_stable(1.0, 1.0), 20000, seed, 181);
         const PmfTable table2 =
             extract_pmf(DiscretePgf::discrete_stable(2.0, 1.0), ExtractOptions{64, 0.7});
         const double tv = tv_distance_pmf(pois.values, table2);
         detail["tv_poisson_1_vs_2"] = tv;
         return ks.p_value < 1e-3 && tv > 0.1;
       }});

  return entries;
}

}  // namespace randstab
