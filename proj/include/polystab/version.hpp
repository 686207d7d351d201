#pragma once

#include <string_view>

namespace polystab {

inline constexpr std::string_view kToolName = "polystab";
inline constexpr std::string_view kToolVersion = "1.0.0";

}  // namespace polystab
