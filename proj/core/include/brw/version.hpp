#pragma once

namespace brw {

inline constexpr const char* kToolVersion = "brwsim 0.1.0";

} // namespace brw
