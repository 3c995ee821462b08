#pragma once

#include <string_view>

namespace logitdyn {

inline constexpr std::string_view kToolName = "logitdyn";
inline constexpr std::string_view kToolVersion = "1.0.0";

// Every seeded draw in the project goes through std::mt19937_64; the name is
// recorded in run manifests so outputs can be tied to the generator.
inline constexpr std::string_view kRngAlgorithm = "mt19937_64";

}  // namespace logitdyn
