#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

namespace randstab {

// One named check in the verification suite. `run` returns pass/fail and
// fills a detail object (residuals, statistics, seeds) for the JSON report.
struct SuiteEntry {
  std::string id;      // stable machine name, e.g. "stability/harris-gamma"
  std::string claim;   // one plain-language sentence of what is being checked
  std::function<bool(nlohmann::ordered_json& detail)> run;
};

struct SuiteOutcome {
  std::string id;
  std::string claim;
  bool pass = false;
  nlohmann::ordered_json detail;
};

// The full battery of identity, construction, identification and Monte Carlo
// checks, in a stable order. Deterministic given the master seed.
std::vector<SuiteEntry> paper_suite(std::uint64_t master_seed);

}  // namespace randstab
