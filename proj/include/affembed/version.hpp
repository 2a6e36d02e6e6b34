#pragma once

#include <string_view>

namespace affembed {

inline constexpr std::string_view kToolName = "affembed";
inline constexpr std::string_view kVersion = "0.1.0";

}  // namespace affembed
