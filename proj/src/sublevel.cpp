#include "tdahrv/sublevel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace tdahrv {
namespace {

void check_series(std::span<const double> samples) {
  if (samples.empty()) throw std::invalid_argument("sub-level persistence: empty series");
  for (double v : samples)
    if (!std::isfinite(v)) throw std::invalid_argument("sub-level persistence: non-finite sample");
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void attach(std::size_t child_root, std::size_t parent_root) { parent_[child_root] = parent_root; }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

PersistenceDiagram sublevel_pd0(std::span<const double> samples) {
  check_series(samples);
  const std::size_t n = samples.size();

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return samples[a] < samples[b]; });

  // Each root remembers the index of its component's minimum, which is also
  // the elder-rule key (value, index).
  UnionFind uf(n);
  std::vector<std::size_t> birth_index(n);
  std::vector<bool> alive(n, false);
  auto elder = [&](std::size_t a, std::size_t b) {
    return samples[a] != samples[b] ? samples[a] < samples[b] : a < b;
  };

  std::vector<PersistenceDiagram::Interval> intervals;
  for (std::size_t i : order) {
    alive[i] = true;
    birth_index[i] = i;
    const double value = samples[i];
    for (std::size_t nb : {i - 1, i + 1}) {
      if (nb >= n || !alive[nb]) continue;  // i - 1 wraps for i = 0
      const std::size_t ra = uf.find(i);
      const std::size_t rb = uf.find(nb);
      if (ra == rb) continue;
      const std::size_t ba = birth_index[ra];
      const std::size_t bb = birth_index[rb];
      const bool a_elder = elder(ba, bb);
      const std::size_t young_root = a_elder ? rb : ra;
      const std::size_t old_root = a_elder ? ra : rb;
      intervals.emplace_back(samples[birth_index[young_root]], value);
      uf.attach(young_root, old_root);
    }
  }
  intervals.emplace_back(samples[order.front()], kInfinity);
  return PersistenceDiagram(0, std::move(intervals));
}

PersistenceDiagram sublevel_pd0_at(std::span<const double> samples,
                                   std::span<const double> thresholds) {
  check_series(samples);
  if (thresholds.empty()) throw std::invalid_argument("sub-level persistence: no thresholds");
  for (std::size_t k = 0; k < thresholds.size(); ++k) {
    if (!std::isfinite(thresholds[k]))
      throw std::invalid_argument("sub-level persistence: non-finite threshold");
    if (k > 0 && !(thresholds[k - 1] < thresholds[k]))
      throw std::invalid_argument("sub-level persistence: thresholds must be strictly ascending");
  }

  struct Component {
    std::size_t rep;  // index of the component's minimum sample
    double birth;
  };
  // Components are kept ordered by rep; a sub-level set only grows, so a
  // component's rep stays inside the run that contains it later on.
  std::vector<Component> alive;
  std::vector<PersistenceDiagram::Interval> intervals;
  const std::size_t n = samples.size();

  for (double h : thresholds) {
    std::vector<Component> next;
    std::size_t cursor = 0;
    std::size_t i = 0;
    while (i < n) {
      if (samples[i] > h) {
        ++i;
        continue;
      }
      const std::size_t lo = i;
      std::size_t argmin = i;
      while (i < n && samples[i] <= h) {
        if (samples[i] < samples[argmin]) argmin = i;
        ++i;
      }
      const std::size_t hi = i;  // run is [lo, hi)

      while (cursor < alive.size() && alive[cursor].rep < lo) ++cursor;
      std::size_t first = cursor;
      while (cursor < alive.size() && alive[cursor].rep < hi) ++cursor;

      if (first == cursor) {
        next.push_back({argmin, h});
        continue;
      }
      auto older = [&](const Component& a, const Component& b) {
        if (a.birth != b.birth) return a.birth < b.birth;
        if (samples[a.rep] != samples[b.rep]) return samples[a.rep] < samples[b.rep];
        return a.rep < b.rep;
      };
      std::size_t eldest = first;
      for (std::size_t k = first + 1; k < cursor; ++k)
        if (older(alive[k], alive[eldest])) eldest = k;
      for (std::size_t k = first; k < cursor; ++k)
        if (k != eldest) intervals.emplace_back(alive[k].birth, h);
      next.push_back({argmin, alive[eldest].birth});
    }
    alive = std::move(next);
  }
  for (const auto& c : alive) intervals.emplace_back(c.birth, kInfinity);
  return PersistenceDiagram(0, std::move(intervals));
}

}  // namespace tdahrv
