#pragma once

namespace exemplar {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace exemplar
