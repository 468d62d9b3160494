#pragma once

namespace qes {
inline constexpr const char* kVersion = "0.1.0";
}
