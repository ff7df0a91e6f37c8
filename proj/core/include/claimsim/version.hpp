#pragma once

namespace claimsim {

inline constexpr const char* kVersion = "1.0.0";

} // namespace claimsim
