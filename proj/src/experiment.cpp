#include "randstab/experiment.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>
#include <variant>
#include <vector>

#include "randstab/descriptor.hpp"
#include "randstab/grid.hpp"
#include "randstab/identify.hpp"
#include "randstab/report.hpp"
#include "randstab/sampling.hpp"
#include "randstab/stability.hpp"
#include "randstab/stats.hpp"
#include "randstab/suite.hpp"

namespace randstab {

namespace {

struct Range {
  double lo = 0.0;
  double hi = 0.0;
  long n = 0;
};

double parse_double_token(const std::string& text) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last)
    throw std::invalid_argument("expected a number, got '" + text + "'");
  return v;
}

// "lo:hi:n" with n a positive integer.
Range parse_range(const std::string& text) {
  const auto first_colon = text.find(':');
  const auto second_colon =
      first_colon == std::string::npos ? std::string::npos
                                       : text.find(':', first_colon + 1);
  if (second_colon == std::string::npos)
    throw std::invalid_argument("expected lo:hi:n, got '" + text + "'");
  Range r;
  r.lo = parse_double_token(text.substr(0, first_colon));
  r.hi = parse_double_token(text.substr(first_colon + 1, second_colon - first_colon - 1));
  const std::string count = text.substr(second_colon + 1);
  long n = 0;
  const auto [ptr, ec] = std::from_chars(count.data(), count.data() + count.size(), n);
  if (ec != std::errc() || ptr != count.data() + count.size() || n < 2)
    throw std::invalid_argument("expected a point count >= 2, got '" + count + "'");
  if (!(r.lo < r.hi))
    throw std::invalid_argument("range must have lo < hi: '" + text + "'");
  r.n = n;
  return r;
}

GridSpec grid_for(const ExperimentConfig& config, GridSpec fallback) {
  if (!config.grid) return fallback;
  const Range r = parse_range(*config.grid);
  return GridSpec{fallback.kind, r.lo, r.hi, static_cast<int>(r.n)};
}

double require_c(const ExperimentConfig& config) {
  if (!config.c) throw std::invalid_argument("--c is required");
  return *config.c;
}

std::uint64_t seed_of(const ExperimentConfig& config) {
  return config.seed.value_or(kDefaultSeed);
}

ExperimentResult run_verify(const ExperimentConfig& config) {
  if (!config.compounder)
    throw std::invalid_argument("verify needs --compounder");
  if (config.transform.has_value() == config.discrete.has_value())
    throw std::invalid_argument(
        "verify needs exactly one of --transform or --discrete");
  const PgfFamily compounder = parse_pgf(*config.compounder);
  const double c = require_c(config);
  const double tol = config.tol.value_or(1e-9);

  StabilityReport report;
  if (config.transform) {
    const TransformFamily transform = parse_transform(*config.transform);
    if (std::holds_alternative<LtFamily>(transform)) {
      report = verify_continuous(compounder, std::get<LtFamily>(transform), c,
                                 grid_for(config, default_lt_grid()), tol);
    } else {
      report = verify_continuous(compounder, std::get<CfFamily>(transform), c,
                                 grid_for(config, default_cf_grid()), tol);
    }
  } else {
    report = verify_discrete(compounder, parse_discrete(*config.discrete), c,
                             grid_for(config, default_pgf_grid()), tol);
  }

  ExperimentResult result;
  result.exit_code = report.pass ? 0 : 2;
  result.report = to_json(report);
  if (config.format == "csv") result.text_output = to_csv(report);
  return result;
}

ExperimentResult run_identify(const ExperimentConfig& config) {
  if (config.transform.has_value() == config.discrete.has_value())
    throw std::invalid_argument(
        "identify needs exactly one of --transform or --discrete");
  if (config.c.has_value() == config.c_sweep.has_value())
    throw std::invalid_argument("identify needs exactly one of --c or --c-sweep");

  const auto identify_at = [&](double c) {
    if (config.transform) {
      const TransformFamily transform = parse_transform(*config.transform);
      if (!std::holds_alternative<LtFamily>(transform))
        throw std::invalid_argument(
            "identification runs on Laplace transforms; characteristic "
            "functions are not invertible on a real grid");
      return identify_from_lt(std::get<LtFamily>(transform), c);
    }
    return identify_from_pgf(parse_discrete(*config.discrete), c);
  };

  ExperimentResult result;
  if (config.c) {
    const IdentifiedCompounder found = identify_at(*config.c);
    result.exit_code = found.verdict.ok ? 0 : 2;
    result.report = to_json(found);
    if (config.format == "csv") result.text_output = to_csv(found);
    return result;
  }

  if (config.format == "csv")
    throw std::invalid_argument("csv output covers a single --c, not a sweep");
  const Range sweep = parse_range(*config.c_sweep);
  bool all_ok = true;
  result.report["sweep"] = nlohmann::ordered_json::array();
  for (long i = 0; i < sweep.n; ++i) {
    const double c =
        sweep.lo + (sweep.hi - sweep.lo) * static_cast<double>(i) /
                       static_cast<double>(sweep.n - 1);
    const IdentifiedCompounder found = identify_at(c);
    all_ok = all_ok && found.verdict.ok;
    result.report["sweep"].push_back(to_json(found));
  }
  result.exit_code = all_ok ? 0 : 2;
  return result;
}

ExperimentResult run_sample(const ExperimentConfig& config) {
  const int sources = (config.transform ? 1 : 0) + (config.discrete ? 1 : 0) +
                      (config.compounder ? 1 : 0);
  if (sources != 1)
    throw std::invalid_argument(
        "sample needs exactly one of --transform, --discrete, or --compounder");
  const std::int64_t n = config.samples.value_or(100000);
  const std::uint64_t seed = seed_of(config);
  const std::uint64_t stream = config.stream.value_or(0);

  SampleBatch batch = [&] {
    if (config.transform) {
      const TransformFamily transform = parse_transform(*config.transform);
      if (!std::holds_alternative<LtFamily>(transform))
        throw std::invalid_argument(
            "two-sided characteristic function families have no sampler here; "
            "sample a Laplace family instead");
      return sample_lt_family(std::get<LtFamily>(transform), n, seed, stream);
    }
    if (config.discrete)
      return sample_discrete(parse_discrete(*config.discrete), n, seed, stream);
    return sample_compounder(parse_pgf(*config.compounder), n, seed, stream);
  }();

  ExperimentResult result;
  result.exit_code = 0;
  result.report = to_json(batch);
  if (config.format == "csv") result.text_output = to_csv(batch);
  if (config.binary_out) write_binary(batch, *config.binary_out);
  return result;
}

ExperimentResult run_mc(const ExperimentConfig& config) {
  if (config.format == "csv")
    throw std::invalid_argument("mc reports are json only");
  if (!config.mc_n) throw std::invalid_argument("mc needs --n (a pgf descriptor)");
  if (!config.mc_x)
    throw std::invalid_argument(
        "mc needs --x (a Laplace or discrete descriptor for the terms)");
  const PgfFamily compounder = parse_pgf(*config.mc_n);
  const double c = require_c(config);
  const std::int64_t n = config.samples.value_or(100000);
  const std::uint64_t seed = seed_of(config);
  const std::uint64_t stream = config.stream.value_or(0);

  // Try the integer route first; anything else must parse as a Laplace family.
  McVerdict verdict;
  std::int64_t zero_n_events = 0;
  try {
    const DiscretePgf q = parse_discrete(*config.mc_x);
    const SampleBatch sums =
        sample_random_sum_discrete(compounder, q, c, n, seed, stream);
    const PmfTable table = extract_pmf(q, ExtractOptions{64, 0.7});
    verdict = tv_verdict(sums, table);
    zero_n_events = sums.zero_n_events;
  } catch (const DescriptorError&) {
    const LtFamily phi = parse_lt(*config.mc_x);
    const SampleBatch sums = sample_random_sum(compounder, phi, c, n, seed, stream);
    const SampleBatch fresh = sample_lt_family(phi, n, seed, stream + 1);
    verdict = ks_verdict(sums, fresh);
    zero_n_events = sums.zero_n_events;
  }

  ExperimentResult result;
  result.exit_code = verdict.pass ? 0 : 2;
  result.report["compounder"] = format_descriptor(compounder);
  result.report["terms"] = *config.mc_x;
  result.report["c"] = c;
  result.report["zero_n_events"] = zero_n_events;
  result.report["verdict"] = to_json(verdict);
  return result;
}

ExperimentResult run_suite(const ExperimentConfig& config) {
  if (config.format == "csv")
    throw std::invalid_argument("suite reports are json only");
  const std::string name = config.suite_name.value_or("paper");
  if (name != "paper")
    throw std::invalid_argument("unknown suite '" + name + "'; available: paper");
  const std::uint64_t seed = seed_of(config);

  std::vector<SuiteEntry> entries = paper_suite(seed);
  ExperimentResult result;
  result.report["suite"] = name;
  result.report["seed"] = seed;
  result.report["entries"] = nlohmann::ordered_json::array();

  std::string table;
  int failures = 0;
  for (SuiteEntry& entry : entries) {
    nlohmann::ordered_json detail;
    const bool pass = entry.run(detail);
    if (!pass) ++failures;
    nlohmann::ordered_json row;
    row["id"] = entry.id;
    row["claim"] = entry.claim;
    row["pass"] = pass;
    row["detail"] = detail.is_null() ? nlohmann::ordered_json::object() : detail;
    result.report["entries"].push_back(row);
    table += pass ? "PASS  " : "FAIL  ";
    table += entry.id;
    table.append(entry.id.size() < 36 ? 36 - entry.id.size() : 1, ' ');
    table += entry.claim;
    table += '\n';
  }
  result.report["total"] = entries.size();
  result.report["failures"] = failures;
  table += failures == 0 ? "all " + std::to_string(entries.size()) + " checks passed\n"
                         : std::to_string(failures) + " of " +
                               std::to_string(entries.size()) + " checks failed\n";
  result.text_output = table;
  result.exit_code = failures == 0 ? 0 : 2;
  return result;
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& config) {
  if (config.format != "json" && config.format != "csv")
    throw std::invalid_argument("--format must be json or csv, got '" +
                                config.format + "'");
  if (config.command == "verify") return run_verify(config);
  if (config.command == "identify") return run_identify(config);
  if (config.command == "sample") return run_sample(config);
  if (config.command == "mc") return run_mc(config);
  if (config.command == "suite") return run_suite(config);
  throw std::invalid_argument("unknown command '" + config.command + "'");
}

ExperimentConfig merge_config(const ExperimentConfig& flags,
                              const nlohmann::json& file) {
  ExperimentConfig merged = flags;
  if (!file.is_object())
    throw std::invalid_argument("config file must hold a JSON object");

  const auto fill_string = [&](std::optional<std::string>& slot,
                               std::initializer_list<const char*> keys) {
    if (slot) return;
    for (const char* key : keys)
      if (file.contains(key)) {
        slot = file.at(key).get<std::string>();
        return;
      }
  };
  fill_string(merged.compounder, {"compounder"});
  fill_string(merged.transform, {"transform"});
  fill_string(merged.discrete, {"discrete"});
  fill_string(merged.c_sweep, {"c-sweep", "c_sweep"});
  fill_string(merged.grid, {"grid"});
  fill_string(merged.out, {"out"});
  fill_string(merged.binary_out, {"binary-out", "binary_out"});
  fill_string(merged.suite_name, {"suite"});
  fill_string(merged.mc_n, {"n"});
  fill_string(merged.mc_x, {"x"});

  if (!flags.c && file.contains("c")) merged.c = file.at("c").get<double>();
  if (!flags.tol && file.contains("tol")) merged.tol = file.at("tol").get<double>();
  if (!flags.samples && file.contains("samples"))
    merged.samples = file.at("samples").get<std::int64_t>();
  if (!flags.seed && file.contains("seed"))
    merged.seed = file.at("seed").get<std::uint64_t>();
  if (!flags.stream && file.contains("stream"))
    merged.stream = file.at("stream").get<std::uint64_t>();
  if (flags.format == "json" && file.contains("format"))
    merged.format = file.at("format").get<std::string>();
  return merged;
}

}  // namespace randstab
