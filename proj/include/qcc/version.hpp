// version.hpp
#pragma once

namespace qcc {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace qcc
