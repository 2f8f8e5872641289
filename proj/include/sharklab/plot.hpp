#pragma once

#include <string>

#include "sharklab/pl_map.hpp"

namespace sharklab {

enum class PlotFormat { csv, svg };

// csv: "x,y" rows at every breakpoint plus `samples` evenly spaced points,
// sorted by x, 12 significant digits.
// svg: the polyline through the breakpoints (a PL map is its own plot) with
// axes; the exact breakpoints are kept in a data-exact attribute.
std::string plot(const PLMap& f, PlotFormat format, unsigned samples);

}  // namespace sharklab
