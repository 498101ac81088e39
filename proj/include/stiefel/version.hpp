#pragma once

namespace stiefel {

inline constexpr const char* tool_version = "1.0.0";
inline constexpr const char* wire_schema_version = "1";

} // namespace stiefel
