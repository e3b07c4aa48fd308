#pragma once

namespace dqc {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace dqc
