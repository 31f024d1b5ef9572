#pragma once

#include <string>

#include <json.hpp>

#include "randstab/discrete.hpp"
#include "randstab/identify.hpp"
#include "randstab/sampling.hpp"
#include "randstab/stability.hpp"
#include "randstab/stats.hpp"

namespace randstab {

// Reports serialize with fixed key order so byte-identical reruns stay
// byte-identical.
using ojson = nlohmann::ordered_json;

ojson to_json(const GridSpec& grid);
ojson to_json(const StabilityReport& report);
ojson to_json(const PmfTable& table);
ojson to_json(const IdentifiedCompounder& result);
ojson to_json(const McVerdict& verdict);
ojson to_json(const SampleBatch& batch);

std::string to_csv(const StabilityReport& report);       // point,residual
std::string to_csv(const PmfTable& table);               // n,p_n
std::string to_csv(const IdentifiedCompounder& result);  // t,P(t) curve samples
std::string to_csv(const SampleBatch& batch);            // metadata line + values

}  // namespace randstab
