#pragma once

#include <span>
#include <vector>

#include "tdahrv/diagram.hpp"
#include "tdahrv/point_cloud.hpp"

namespace tdahrv {

/// A simplex (1 to 3 vertex indices) entering the filtration at `value`.
struct FiltrationStep {
  std::vector<int> simplex;
  double value = 0.0;
};

/// Persistence in dimensions 0 and 1 of an explicitly listed filtration,
/// by textbook reduction of the full Z/2 boundary matrix. No clearing, no
/// implicit columns; this is the reference the optimized engine is checked
/// against.
///
/// Throws std::invalid_argument if a simplex is malformed, listed twice, or
/// appears before one of its faces (the message names the simplex).
std::vector<PersistenceDiagram> explicit_filtration_ph(std::span<const FiltrationStep> steps);

/// Every vertex, edge and triangle of the Vietoris–Rips complex of `cloud`,
/// each at its diameter. Distances are computed here, independently of
/// DistanceMatrix.
std::vector<FiltrationStep> enumerate_rips_filtration(const PointCloud& cloud);

}  // namespace tdahrv
