#include "randstab/report.hpp"

#include <sstream>

#include "randstab/descriptor.hpp"

namespace randstab {

namespace {

ojson array_of(const Eigen::ArrayXd& v) {
  ojson arr = ojson::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v[i]);
  return arr;
}

const char* equation_name(EquationTag tag) {
  switch (tag) {
    case EquationTag::kContinuousLt:
      return "continuous-lt";
    case EquationTag::kContinuousCf:
      return "continuous-cf";
    case EquationTag::kDiscrete:
      return "discrete";
  }
  return "unknown";
}

ojson params_of(const PgfFamily& f) {
  ojson p = ojson::object();
  switch (f.tag()) {
    case PgfFamily::Tag::kHarris:
      p["a"] = f.a();
      p["k"] = f.k();
      break;
    case PgfFamily::Tag::kGeometric1:
      p["p"] = f.p();
      break;
    case PgfFamily::Tag::kSibuya:
      p["nu"] = f.nu();
      break;
    case PgfFamily::Tag::kDegenerate:
      p["k"] = f.k();
      break;
    case PgfFamily::Tag::kBernoulliShift:
      p["lambda"] = f.lambda();
      break;
  }
  return p;
}

}  // namespace

ojson to_json(const GridSpec& grid) {
  ojson j = ojson::object();
  j["kind"] = grid.kind == GridKind::kGeometric ? "geometric" : "linear";
  j["lo"] = grid.lo;
  j["hi"] = grid.hi;
  j["n"] = grid.n;
  return j;
}

ojson to_json(const StabilityReport& report) {
  ojson j = ojson::object();
  j["equation"] = equation_name(report.equation);
  j["compounder"] = report.compounder;
  j["transform"] = report.transform;
  j["c"] = report.c;
  j["tolerance"] = report.tolerance;
  j["max_residual"] = report.max_residual;
  j["pass"] = report.pass;
  j["grid"] = to_json(report.grid);
  j["points"] = array_of(report.points);
  j["residuals"] = array_of(report.residuals);
  return j;
}

ojson to_json(const PmfTable& table) {
  ojson j = ojson::object();
  j["n_max"] = table.coeffs.size() - 1;
  j["radius"] = table.radius;
  j["mass_deficiency"] = table.mass_deficiency;
  if (table.first_negative_index)
    j["first_negative_index"] = *table.first_negative_index;
  else
    j["first_negative_index"] = nullptr;
  j["coeffs"] = array_of(table.coeffs);
  return j;
}

ojson to_json(const IdentifiedCompounder& result) {
  ojson j = ojson::object();
  j["c"] = result.c;
  j["t_lo"] = result.t_lo;
  j["verdict"] = result.verdict.ok ? "valid-pgf" : "not-a-pgf";
  if (result.verdict.first_negative_index)
    j["first_negative_index"] = *result.verdict.first_negative_index;
  else
    j["first_negative_index"] = nullptr;
  if (result.matched) {
    ojson m = ojson::object();
    m["family"] = format_descriptor(result.matched->family);
    m["params"] = params_of(result.matched->family);
    m["sup_distance"] = result.matched->sup_distance;
    j["matched"] = m;
  } else {
    j["matched"] = nullptr;
  }
  j["pmf"] = to_json(result.pmf);
  return j;
}

ojson to_json(const McVerdict& verdict) {
  ojson j = ojson::object();
  j["test"] = verdict.test;
  j["statistic"] = verdict.statistic;
  if (verdict.p_value_based)
    j["p_value"] = verdict.p_value;
  else
    j["p_value"] = nullptr;
  j["threshold"] = verdict.threshold;
  j["n"] = verdict.n;
  j["pass"] = verdict.pass;
  ojson seeds = ojson::array();
  for (const SeedInfo& s : verdict.seeds) {
    ojson e = ojson::object();
    e["seed"] = s.seed;
    e["stream"] = s.stream;
    seeds.push_back(e);
  }
  j["seeds"] = seeds;
  return j;
}

ojson to_json(const SampleBatch& batch) {
  ojson j = ojson::object();
  j["family"] = batch.family;
  j["n"] = batch.n;
  j["seed"] = batch.master_seed;
  j["stream"] = batch.stream_index;
  j["discrete"] = batch.discrete;
  j["zero_n_events"] = batch.zero_n_events;
  j["values"] = array_of(batch.values);
  return j;
}

std::string to_csv(const StabilityReport& report) {
  std::ostringstream out;
  out << "point,residual\n";
  for (Eigen::Index i = 0; i < report.points.size(); ++i)
    out << format_number(report.points[i]) << "," << format_number(report.residuals[i])
        << "\n";
  return out.str();
}

std::string to_csv(const PmfTable& table) {
  std::ostringstream out;
  out << "n,p_n\n";
  for (Eigen::Index n = 0; n < table.coeffs.size(); ++n)
    out << n << "," << format_number(table.coeffs[n]) << "\n";
  return out.str();
}

std::string to_csv(const IdentifiedCompounder& result) {
  std::ostringstream out;
  out << "t,p\n";
  const int n = 200;
  for (int i = 1; i <= n; ++i) {
    const double t = result.t_lo + (1.0 - result.t_lo) * i / (n + 1.0);
    out << format_number(t) << "," << format_number(result.curve(t)) << "\n";
  }
  return out.str();
}

std::string to_csv(const SampleBatch& batch) {
  std::ostringstream out;
  out << "# family=" << batch.family << " n=" << batch.n << " seed=" << batch.master_seed
      << " stream=" << batch.stream_index << " discrete=" << (batch.discrete ? 1 : 0)
      << " zero_n_events=" << batch.zero_n_events << "\n";
  for (Eigen::Index i = 0; i < batch.values.size(); ++i)
    out << format_number(batch.values[i]) << "\n";
  return out.str();
}

}  // namespace randstab
