#pragma once

#include "tdahrv/diagram.hpp"

namespace tdahrv {

/// Bottleneck distance under the L-infinity ground metric.
///
/// Finite points may be matched to each other or to the diagonal (cost
/// (d - b) / 2). Essential points are matched among themselves in sorted
/// birth order; if the essential counts differ the distance is infinite.
/// Exact: binary search over the candidate costs with a Hopcroft–Karp
/// perfect-matching test at each step.
double bottleneck(const PersistenceDiagram& a, const PersistenceDiagram& b);

}  // namespace tdahrv
