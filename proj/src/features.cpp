#include "tdahrv/features.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "tdahrv/point_cloud.hpp"
#include "tdahrv/rips.hpp"
#include "tdahrv/sublevel.hpp"

namespace tdahrv {

FeatureVector extract_features(const EpochWindow& window, const EmbeddingConfig& embedding) {
  FeatureVector out;
  out.recording_id = window.recording_id;
  out.epoch_index = window.epoch_index;
  out.label = window.label;

  const auto sub = persistence_statistics(sublevel_pd0(window.samples));
  const auto rips = vr_pd(lag_map(window.samples, embedding.dim, embedding.lag), embedding.vr_max_dim);
  const auto vr0 = persistence_statistics(rips[0]);
  const auto vr1 = persistence_statistics(rips.size() > 1 ? rips[1] : PersistenceDiagram(1));

  auto it = out.features.begin();
  it = std::copy(sub.values.begin(), sub.values.end(), it);
  it = std::copy(vr0.values.begin(), vr0.values.end(), it);
  std::copy(vr1.values.begin(), vr1.values.end(), it);
  return out;
}

std::vector<FeatureVector> normalize_per_recording(std::vector<FeatureVector> rows) {
  if (rows.empty()) return rows;
  for (const auto& r : rows)
    if (r.recording_id != rows.front().recording_id)
      throw std::invalid_argument("normalize_per_recording: rows span several recordings");
  const auto n = static_cast<double>(rows.size());
  for (std::size_t c = 0; c < kFeatureCount; ++c) {
    double mean = 0.0;
    for (const auto& r : rows) mean += r.features[c];
    mean /= n;
    double ss = 0.0;
    for (const auto& r : rows) ss += (r.features[c] - mean) * (r.features[c] - mean);
    const double sd = rows.size() > 1 ? std::sqrt(ss / (n - 1.0)) : 0.0;
    for (auto& r : rows) r.features[c] = sd > 0.0 ? (r.features[c] - mean) / sd : 0.0;
  }
  return rows;
}

std::vector<FeatureVector> normalize_recordings(std::vector<FeatureVector> rows) {
  std::map<std::string, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < rows.size(); ++i) groups[rows[i].recording_id].push_back(i);
  for (const auto& [id, idx] : groups) {
    std::vector<FeatureVector> part;
    part.reserve(idx.size());
    for (auto i : idx) part.push_back(rows[i]);
    part = normalize_per_recording(std::move(part));
    for (std::size_t k = 0; k < idx.size(); ++k) rows[idx[k]] = std::move(part[k]);
  }
  return rows;
}

std::vector<FeatureVector> extract_all(std::span<const EpochWindow> windows,
                                       const EmbeddingConfig& embedding, unsigned threads) {
  std::vector<FeatureVector> out(windows.size());
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(windows.size())));
  if (threads <= 1) {
    for (std::size_t i = 0; i < windows.size(); ++i) out[i] = extract_features(windows[i], embedding);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < windows.size(); i = next++) {
      try {
        out[i] = extract_features(windows[i], embedding);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  pool.clear();
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace tdahrv
