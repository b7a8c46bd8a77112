#pragma once

#include <span>

#include "tdahrv/diagram.hpp"

namespace tdahrv {

/// 0-dimensional persistence of the sub-level set filtration of a sampled
/// function on a path graph (sample i adjacent to i-1 and i+1).
///
/// Every sample value is a threshold. On a merge the component whose minimum
/// is higher dies (elder rule); equal minima are ordered by index, smaller
/// index being elder. The global minimum's component is essential.
///
/// Throws std::invalid_argument for an empty or non-finite series.
PersistenceDiagram sublevel_pd0(std::span<const double> samples);

/// Same filtration observed only at the given thresholds (strictly
/// ascending). Births and deaths are threshold values; every component still
/// alive at the last threshold is reported with death = inf.
PersistenceDiagram sublevel_pd0_at(std::span<const double> samples,
                                   std::span<const double> thresholds);

}  // namespace tdahrv
