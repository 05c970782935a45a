#pragma once

namespace cclab {

inline constexpr const char* kVersion = "0.1.0";

} // namespace cclab
