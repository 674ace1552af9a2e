#pragma once

namespace grover {

inline constexpr const char* k_version = "0.1.0";
inline constexpr const char* k_tool_name = "grover-exact";
inline constexpr int k_schema_version = 1;

}  // namespace grover
