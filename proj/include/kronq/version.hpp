#pragma once

namespace kronq {

inline constexpr const char* engine_version = "0.1.0";

}  // namespace kronq
