#include "tdahrv/sampling.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "tdahrv/random.hpp"

namespace tdahrv {

std::vector<std::size_t> balanced_subsample(std::span<const int> labels, std::span<const int> classes,
                                            std::uint64_t seed) {
  if (classes.size() < 2) throw std::invalid_argument("down-sampling needs at least two classes");
  std::vector<std::vector<std::size_t>> members(classes.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const auto it = std::find(classes.begin(), classes.end(), labels[i]);
    if (it != classes.end()) members[static_cast<std::size_t>(it - classes.begin())].push_back(i);
  }
  std::size_t quota = labels.size();
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (members[c].empty())
      throw std::invalid_argument("down-sampling: class " + std::to_string(classes[c]) + " has no rows");
    quota = std::min(quota, members[c].size());
  }

  Pcg32 rng(seed);
  std::vector<std::size_t> selected;
  for (auto& pool : members) {
    for (std::size_t k = 0; k < quota && quota < pool.size(); ++k) {
      const auto pick = k + rng.bounded(static_cast<std::uint32_t>(pool.size() - k));
      std::swap(pool[k], pool[pick]);
    }
    selected.insert(selected.end(), pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(quota));
  }
  std::sort(selected.begin(), selected.end());
  return selected;
}

std::vector<FeatureVector> downsample_balance(std::span<const FeatureVector> rows,
                                              std::span<const int> classes, std::uint64_t seed) {
  std::vector<int> labels;
  labels.reserve(rows.size());
  for (const auto& r : rows) labels.push_back(r.label);
  std::vector<FeatureVector> out;
  for (auto i : balanced_subsample(labels, classes, seed)) out.push_back(rows[i]);
  return out;
}

}  // namespace tdahrv
