#pragma once

namespace maxsub {

inline constexpr const char* kToolVersion = "1.0.0";
/// Version of the matrix text format and the JSON report schemas.
inline constexpr const char* kFormatVersion = "1";

}  // namespace maxsub
