#pragma once

namespace qcpg {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace qcpg
