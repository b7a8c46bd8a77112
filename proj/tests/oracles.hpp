#pragma once

// Slow reference implementations used only by the tests. Each one follows
// the textbook definition and shares no code with the library engines.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "tdahrv/diagram.hpp"
#include "tdahrv/point_cloud.hpp"
#include "tdahrv/random.hpp"

namespace oracle {

using Intervals = std::vector<std::pair<double, double>>;

// Dim-0 sub-level persistence observed at `levels` (ascending). At each
// level the sub-level set is a union of maximal runs of indices; a run's
// components from the previous level merge, and the elder (earliest birth,
// then lowest value, then smallest index) survives.
inline Intervals sublevel_runs(const std::vector<double>& x, const std::vector<double>& levels) {
  struct Comp {
    double birth;
    double value;
    std::size_t index;
    bool operator<(const Comp& o) const {
      if (birth != o.birth) return birth < o.birth;
      if (value != o.value) return value < o.value;
      return index < o.index;
    }
  };
  Intervals out;
  std::vector<Comp> prev;  // components alive at the previous level
  std::vector<std::pair<std::size_t, std::size_t>> prev_runs;
  for (double t : levels) {
    std::vector<std::pair<std::size_t, std::size_t>> runs;
    for (std::size_t i = 0; i < x.size();) {
      if (x[i] > t) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < x.size() && x[j] <= t) ++j;
      runs.emplace_back(i, j);
      i = j;
    }
    std::vector<Comp> next;
    for (auto [lo, hi] : runs) {
      std::vector<Comp> inside;
      for (std::size_t k = 0; k < prev_runs.size(); ++k)
        if (prev_runs[k].first >= lo && prev_runs[k].second <= hi) inside.push_back(prev[k]);
      if (inside.empty()) {
        std::size_t arg = lo;
        for (std::size_t i = lo; i < hi; ++i)
          if (x[i] < x[arg]) arg = i;
        next.push_back({t, x[arg], arg});
        continue;
      }
      std::sort(inside.begin(), inside.end());
      for (std::size_t k = 1; k < inside.size(); ++k)
        if (inside[k].birth < t) out.emplace_back(inside[k].birth, t);
      next.push_back(inside.front());
    }
    prev = std::move(next);
    prev_runs = std::move(runs);
  }
  for (const auto& c : prev) out.emplace_back(c.birth, tdahrv::kInfinity);
  return out;
}

// Full resolution: every distinct sample value is a level.
inline Intervals sublevel_full(const std::vector<double>& x) {
  std::vector<double> levels = x;
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  return sublevel_runs(x, levels);
}

inline double distance(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

// Prim's algorithm on the complete graph; returns the MST edge lengths.
inline std::vector<double> mst_lengths(const tdahrv::PointCloud& cloud) {
  const std::size_t n = cloud.size();
  std::vector<double> best(n, std::numeric_limits<double>::infinity());
  std::vector<bool> in(n, false);
  std::vector<double> out;
  best[0] = 0.0;
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t u = n;
    for (std::size_t v = 0; v < n; ++v)
      if (!in[v] && (u == n || best[v] < best[u])) u = v;
    in[u] = true;
    if (step > 0) out.push_back(best[u]);
    for (std::size_t v = 0; v < n; ++v)
      if (!in[v]) best[v] = std::min(best[v], distance(cloud.point(u), cloud.point(v)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Bottleneck distance by enumerating every partial matching of the finite
// points (feasible for a handful of points); essential points are paired in
// sorted birth order.
inline double bottleneck(const tdahrv::PersistenceDiagram& a, const tdahrv::PersistenceDiagram& b) {
  std::vector<std::pair<double, double>> fa, fb;
  std::vector<double> ea, eb;
  for (const auto& p : a) (p.essential() ? ea.push_back(p.birth) : fa.push_back({p.birth, p.death}));
  for (const auto& p : b) (p.essential() ? eb.push_back(p.birth) : fb.push_back({p.birth, p.death}));
  if (ea.size() != eb.size()) return tdahrv::kInfinity;
  std::sort(ea.begin(), ea.end());
  std::sort(eb.begin(), eb.end());
  double essential = 0.0;
  for (std::size_t i = 0; i < ea.size(); ++i) essential = std::max(essential, std::abs(ea[i] - eb[i]));

  auto diag = [](const std::pair<double, double>& p) { return (p.second - p.first) / 2.0; };
  auto cost = [](const std::pair<double, double>& p, const std::pair<double, double>& q) {
    return std::max(std::abs(p.first - q.first), std::abs(p.second - q.second));
  };
  double best = tdahrv::kInfinity;
  std::vector<bool> used(fb.size(), false);
  std::function<void(std::size_t, double)> go = [&](std::size_t i, double worst) {
    if (worst >= best) return;
    if (i == fa.size()) {
      for (std::size_t j = 0; j < fb.size(); ++j)
        if (!used[j]) worst = std::max(worst, diag(fb[j]));
      best = std::min(best, worst);
      return;
    }
    go(i + 1, std::max(worst, diag(fa[i])));
    for (std::size_t j = 0; j < fb.size(); ++j) {
      if (used[j]) continue;
      used[j] = true;
      go(i + 1, std::max(worst, cost(fa[i], fb[j])));
      used[j] = false;
    }
  };
  go(0, 0.0);
  return std::max(best, essential);
}

// Random cloud of n points in R^dim with coordinates uniform in [0, 1).
inline tdahrv::PointCloud random_cloud(tdahrv::Pcg32& rng, std::size_t n, std::size_t dim) {
  std::vector<double> coords(n * dim);
  for (double& c : coords) c = rng.uniform();
  return tdahrv::PointCloud(dim, std::move(coords));
}

inline std::vector<std::pair<double, double>> as_pairs(const tdahrv::PersistenceDiagram& pd) {
  std::vector<std::pair<double, double>> out;
  for (const auto& p : pd) out.emplace_back(p.birth, p.death);
  return out;
}

}  // namespace oracle
