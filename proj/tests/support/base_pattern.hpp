#pragma once

#include <string>
#include <vector>

#include "knitfold/compiler.hpp"

namespace knitfold::test_support {

/// Square sheet with Valley creases along both center lines and Mountain
/// creases along both diagonals, each split at the center vertex.
/// 105 mm on a 5 mm gauge gives a 21×21 grid centred on cell (10, 10).
CreasePattern base_pattern(double side = 105.0);

inline constexpr Gauge kBaseGauge{5.0, 5.0};
inline constexpr int kBaseCenter = 10;

/// Rule-conformance checks for the compiled base pattern. Empty when the
/// chart has Purl at the center crossing, Knit where diagonals cross, Tuck
/// along the rest of the center row, Purl along the rest of the center
/// column, twists in 2-wide pairs on every diagonal, and fusible yarn exactly
/// outside the fold cells and their wale neighbours.
std::vector<std::string> base_chart_violations(const StitchChart& chart);

}  // namespace knitfold::test_support
