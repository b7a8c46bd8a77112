#pragma once

#include <span>
#include <vector>

#include "tdahrv/features.hpp"

namespace tdahrv {

/// Two-sided Wilcoxon rank-sum (Mann–Whitney U) p-value, normal
/// approximation with tie and continuity corrections. Requires at least 8
/// observations per sample; throws std::invalid_argument otherwise.
double rank_sum_test(std::span<const double> a, std::span<const double> b);

struct FeatureScreen {
  std::size_t feature;  // 0-based column
  double p_value;
  bool significant;     // p < alpha / number of features (Bonferroni)
};

/// Rank-sum screening of every feature column between rows labelled
/// `group_a` and rows labelled `group_b`.
std::vector<FeatureScreen> screen_features(std::span<const FeatureVector> rows, int group_a, int group_b,
                                           double alpha = 0.05);

}  // namespace tdahrv
