#pragma once

#include <array>
#include <cstddef>
#include <span>

#include "tdahrv/diagram.hpp"

namespace tdahrv {

inline constexpr std::size_t kSummarySize = 8;
inline constexpr std::size_t kPsSize = 2 * kSummarySize;

/// mean, std, skewness, kurtosis, p25, p50, p75, persistent entropy.
using SummaryStats = std::array<double, kSummarySize>;

/// 16 persistence statistics: the eight summary statistics of the midpoints
/// (slots 0-7) followed by those of the lifespans (slots 8-15).
struct PsVector {
  std::array<double, kPsSize> values{};
  bool empty = false;  // no finite pairs; values are all zero
};

/// Shannon entropy (natural log) of |s_i| / sum |s_j|; 0 for an empty or
/// all-zero multiset.
double persistent_entropy(std::span<const double> s);

/// Sample std (n - 1), population skewness m3/m2^1.5 and non-excess kurtosis
/// m4/m2^2, percentiles by linear interpolation at rank (n - 1) q. Degenerate
/// moments (n < 2 for std, n < 3 for skewness, zero spread) are 0.
SummaryStats summary_statistics(std::span<const double> s);

PsVector persistence_statistics(const PersistenceDiagram& pd);

}  // namespace tdahrv
