#pragma once

namespace cavkg {
inline constexpr const char* kVersion = "0.1.0";
}
