#pragma once

namespace gingap {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace gingap
