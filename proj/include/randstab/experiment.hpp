#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

namespace randstab {

// Parsed command line / config file for one CLI invocation. Fields are
// optional so a config file can supply defaults and flags can override.
struct ExperimentConfig {
  std::string command;                       // verify | identify | sample | mc | suite
  std::optional<std::string> compounder;     // pgf descriptor
  std::optional<std::string> transform;      // laplace or characteristic descriptor
  std::optional<std::string> discrete;       // discrete descriptor
  std::optional<double> c;
  std::optional<std::string> c_sweep;        // "lo:hi:n"
  std::optional<std::string> grid;           // "lo:hi:n"
  std::optional<double> tol;
  std::optional<std::int64_t> samples;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> stream;
  std::optional<std::string> out;
  std::optional<std::string> binary_out;
  std::string format = "json";               // json | csv
  std::optional<std::string> suite_name;     // suite positional
  std::optional<std::string> mc_n;           // mc: compounder descriptor
  std::optional<std::string> mc_x;           // mc: summand descriptor
};

struct ExperimentResult {
  int exit_code = 0;                 // 0 pass, 2 checked-and-failed
  nlohmann::ordered_json report;
  std::string text_output;           // csv payload or suite table, if any
};

inline constexpr std::uint64_t kDefaultSeed = 0xC0FFEE;

// Runs one experiment. Usage and domain errors surface as exceptions
// (DescriptorError, std::invalid_argument, std::domain_error); the CLI front
// end maps those to exit code 1.
ExperimentResult run_experiment(const ExperimentConfig& config);

// Overlays config-file values under explicitly set flags: flags win.
ExperimentConfig merge_config(const ExperimentConfig& flags, const nlohmann::json& file);

}  // namespace randstab
