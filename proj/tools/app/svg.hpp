#pragma once

#include <string>

#include "sddm/region.hpp"

namespace sddm::app {

// Self-contained SVG of one bargaining-region slice family: solid curves
// for the expected-wealth bounds, dashed curves for the variance bounds
// (omitted when sigma == 0), and a shaded polygon for the combined region.
// Output is byte-stable for identical inputs.
std::string region_svg(const RegionReport& report);

}  // namespace sddm::app
