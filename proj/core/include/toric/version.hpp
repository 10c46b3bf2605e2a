#pragma once

namespace toric {
inline constexpr const char* version = "0.1.0";
}
