#include "tdahrv/pstats.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace tdahrv {
namespace {

double percentile(const std::vector<double>& sorted, double q) {
  const double h = static_cast<double>(sorted.size() - 1) * q;
  const auto lo = static_cast<std::size_t>(std::floor(h));
  if (lo + 1 >= sorted.size()) return sorted.back();
  return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[lo + 1] - sorted[lo]);
}

}  // namespace

double persistent_entropy(std::span<const double> s) {
  double total = 0.0;
  for (double x : s) total += std::abs(x);
  if (!(total > 0.0)) return 0.0;
  double h = 0.0;
  for (double x : s) {
    const double p = std::abs(x) / total;
    if (p > 0.0) h -= p * std::log(p);
  }
  return std::max(h, 0.0);
}

SummaryStats summary_statistics(std::span<const double> s) {
  SummaryStats out{};
  if (s.empty()) return out;
  const auto n = static_cast<double>(s.size());

  double mean = 0.0;
  double scale = 0.0;
  for (double x : s) {
    mean += x;
    scale = std::max(scale, std::abs(x));
  }
  mean /= n;

  double m2 = 0.0, m3 = 0.0, m4 = 0.0;
  for (double x : s) {
    const double d = x - mean;
    const double d2 = d * d;
    m2 += d2;
    m3 += d2 * d;
    m4 += d2 * d2;
  }
  const double sum_sq = m2;
  m2 /= n;
  m3 /= n;
  m4 /= n;
  // Spread below rounding noise of the data counts as zero spread.
  const bool flat = std::sqrt(m2) <= 1e-12 * scale || m2 == 0.0;

  out[0] = mean;
  out[1] = s.size() < 2 || flat ? 0.0 : std::sqrt(sum_sq / (n - 1.0));
  out[2] = s.size() < 3 || flat ? 0.0 : m3 / std::pow(m2, 1.5);
  out[3] = flat ? 0.0 : m4 / (m2 * m2);

  std::vector<double> sorted(s.begin(), s.end());
  std::sort(sorted.begin(), sorted.end());
  out[4] = percentile(sorted, 0.25);
  out[5] = percentile(sorted, 0.50);
  out[6] = percentile(sorted, 0.75);
  out[7] = persistent_entropy(s);
  return out;
}

PsVector persistence_statistics(const PersistenceDiagram& pd) {
  PsVector out;
  const auto mids = midpoints(pd);
  const auto spans = lifespans(pd);
  out.empty = spans.empty();
  if (out.empty) return out;
  const auto m = summary_statistics(mids);
  const auto l = summary_statistics(spans);
  std::copy(m.begin(), m.end(), out.values.begin());
  std::copy(l.begin(), l.end(), out.values.begin() + kSummarySize);
  return out;
}

}  // namespace tdahrv
