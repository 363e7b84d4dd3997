#pragma once

#include <filesystem>

#include "ppnet/geometry.hpp"

namespace ppnet {

// Point-pattern CSV layout:
//   # window x_min x_max y_min y_max
//   x,y
//   <one point per row>
// Coordinates are written with enough digits to round-trip doubles exactly.

PointPattern load_pattern(const std::filesystem::path& path);
void save_pattern(const PointPattern& pattern, const std::filesystem::path& path);

}  // namespace ppnet
