#pragma once

namespace treekummer {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace treekummer
