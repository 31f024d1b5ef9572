#include <cstdlib>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "randstab/descriptor.hpp"
#include "randstab/experiment.hpp"

namespace {

using randstab::ExperimentConfig;

// Explicit --seed wins, then a config-file seed, then the environment
// variable; the built-in default applies only when none of those is set.
void apply_env_seed(ExperimentConfig& config) {
  if (config.seed) return;
  const char* env = std::getenv("RANDSTAB_SEED");
  if (env == nullptr || *env == '\0') return;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(env, &end, 0);
  if (end == nullptr || *end != '\0')
    throw std::invalid_argument(std::string("RANDSTAB_SEED is not an integer: '") +
                                env + "'");
  config.seed = static_cast<std::uint64_t>(value);
}

ExperimentConfig load_config_file(const ExperimentConfig& flags, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file '" + path + "'");
  nlohmann::json file = nlohmann::json::parse(in);
  return randstab::merge_config(flags, file);
}

void write_payload(const std::string& payload, const std::optional<std::string>& out) {
  if (!out) {
    std::cout << payload;
    return;
  }
  std::ofstream file(*out);
  if (!file) throw std::invalid_argument("cannot open output file '" + *out + "'");
  file << payload;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "randstab: stability of random sums. Verifies compound-sum functional "
      "identities, identifies compounding laws, builds integer analogues, and "
      "confirms them by seeded Monte Carlo."};
  app.require_subcommand(1);

  ExperimentConfig config;
  std::string config_path;

  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--out", config.out, "write the report to this file instead of stdout");
    cmd->add_option("--format", config.format, "report format: json or csv")
        ->default_val("json");
    cmd->add_option("--config", config_path,
                    "JSON file supplying defaults; explicit flags win");
  };
  const auto add_seed = [&](CLI::App* cmd) {
    cmd->add_option("--seed", config.seed,
                    "master seed (default 0xC0FFEE, or RANDSTAB_SEED if set)");
    cmd->add_option("--stream", config.stream, "stream index within the seed (default 0)");
  };

  CLI::App* verify = app.add_subcommand(
      "verify", "check the stability equation for a compounder and a transform");
  verify->add_option("--compounder", config.compounder, "pgf descriptor, e.g. harris:a=3,k=2");
  verify->add_option("--transform", config.transform,
                     "Laplace or characteristic descriptor, e.g. gamma:beta=0.5");
  verify->add_option("--discrete", config.discrete,
                     "discrete descriptor, e.g. dml:lambda=1,alpha=0.85");
  verify->add_option("--c", config.c, "scale in (0,1)");
  verify->add_option("--grid", config.grid, "evaluation grid as lo:hi:n");
  verify->add_option("--tol", config.tol, "residual tolerance (default 1e-9)");
  add_common(verify);

  CLI::App* identify = app.add_subcommand(
      "identify", "recover the compounding law from the compounded law at scale c");
  identify->add_option("--transform", config.transform, "Laplace descriptor");
  identify->add_option("--discrete", config.discrete, "discrete descriptor");
  identify->add_option("--c", config.c, "scale in (0,1)");
  identify->add_option("--c-sweep", config.c_sweep, "sweep of scales as lo:hi:n");
  add_common(identify);

  CLI::App* sample = app.add_subcommand("sample", "draw a reproducible batch from one family");
  sample->add_option("--transform", config.transform, "Laplace descriptor");
  sample->add_option("--discrete", config.discrete, "discrete descriptor");
  sample->add_option("--compounder", config.compounder, "pgf descriptor");
  sample->add_option("--samples", config.samples, "batch size (default 100000)");
  sample->add_option("--binary-out", config.binary_out,
                     "also write the batch in the compact binary form");
  add_seed(sample);
  add_common(sample);

  CLI::App* mc = app.add_subcommand(
      "mc", "Monte Carlo check that the scaled random sum reproduces the law");
  mc->add_option("--n", config.mc_n, "compounder pgf descriptor");
  mc->add_option("--x", config.mc_x, "term descriptor: Laplace (KS) or discrete (TV)");
  mc->add_option("--c", config.c, "scale in (0,1)");
  mc->add_option("--samples", config.samples, "draws per batch (default 100000)");
  add_seed(mc);
  add_common(mc);

  CLI::App* suite = app.add_subcommand(
      "suite", "run a named battery of checks; table on stderr, JSON report on stdout");
  suite->add_option("name", config.suite_name, "suite name (paper)");
  add_seed(suite);
  add_common(suite);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  config.command = app.get_subcommands().front()->get_name();

  try {
    if (!config_path.empty()) config = load_config_file(config, config_path);
    apply_env_seed(config);
    const randstab::ExperimentResult result = randstab::run_experiment(config);
    if (config.command == "suite") {
      std::cerr << result.text_output;
      write_payload(result.report.dump(2) + "\n", config.out);
    } else if (config.format == "csv") {
      write_payload(result.text_output, config.out);
    } else {
      write_payload(result.report.dump(2) + "\n", config.out);
    }
    return result.exit_code;
  } catch (const randstab::DescriptorError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: config file: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::overflow_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
