#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tdahrv/features.hpp"

namespace tdahrv {

/// Class-balanced down-sampling. Every class in `classes` keeps as many rows
/// as the smallest one: the smallest class is kept whole, the others are
/// sampled uniformly without replacement (partial Fisher–Yates driven by a
/// Pcg32 seeded with `seed`). Returns selected row indices, ascending.
///
/// Throws std::invalid_argument if fewer than two classes are requested or
/// a requested class has no rows.
std::vector<std::size_t> balanced_subsample(std::span<const int> labels, std::span<const int> classes,
                                            std::uint64_t seed);

/// balanced_subsample over the rows' labels, returning the selected rows.
std::vector<FeatureVector> downsample_balance(std::span<const FeatureVector> rows,
                                              std::span<const int> classes, std::uint64_t seed);

}  // namespace tdahrv
