#pragma once

namespace centra {

inline constexpr const char* tool_name = "centra";
inline constexpr const char* tool_version = "0.1.0";

} // namespace centra
