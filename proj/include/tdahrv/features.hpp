#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "tdahrv/hrv.hpp"
#include "tdahrv/pstats.hpp"

namespace tdahrv {

inline constexpr std::size_t kFeatureCount = 3 * kPsSize;

/// Persistence statistics of the sub-level dim-0, Rips dim-0 and Rips dim-1
/// diagrams of one epoch window, in that order.
struct FeatureVector {
  std::string recording_id;
  int epoch_index = 0;
  int label = -1;
  std::array<double, kFeatureCount> features{};
};

struct EmbeddingConfig {
  std::size_t dim = 120;
  std::size_t lag = 1;
  int vr_max_dim = 1;  // 0 leaves the Rips dim-1 block as for an empty diagram
};

FeatureVector extract_features(const EpochWindow& window, const EmbeddingConfig& embedding = {});

/// z-scores each feature column within one recording (sample std). Columns
/// with zero spread become 0. Throws if the rows mix recordings.
std::vector<FeatureVector> normalize_per_recording(std::vector<FeatureVector> rows);

/// Applies normalize_per_recording to each recording's rows; row order is
/// preserved.
std::vector<FeatureVector> normalize_recordings(std::vector<FeatureVector> rows);

/// Runs extract_features over all windows on `threads` workers. Output order
/// and values do not depend on the thread count.
std::vector<FeatureVector> extract_all(std::span<const EpochWindow> windows,
                                       const EmbeddingConfig& embedding, unsigned threads);

}  // namespace tdahrv
