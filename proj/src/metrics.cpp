#include "tdahrv/metrics.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace tdahrv {

namespace {
constexpr double kUndefined = std::numeric_limits<double>::quiet_NaN();

double ratio(double num, double den) { return den > 0.0 ? num / den : kUndefined; }
}  // namespace

void ConfusionMatrix::add(std::size_t truth, std::size_t predicted, std::uint64_t count) {
  if (truth >= m_ || predicted >= m_) throw std::invalid_argument("confusion: label out of range");
  counts_[truth * m_ + predicted] += count;
}

std::uint64_t ConfusionMatrix::total() const {
  return std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0});
}

std::uint64_t ConfusionMatrix::row_sum(std::size_t k) const {
  std::uint64_t s = 0;
  for (std::size_t l = 0; l < m_; ++l) s += (*this)(k, l);
  return s;
}

std::uint64_t ConfusionMatrix::col_sum(std::size_t l) const {
  std::uint64_t s = 0;
  for (std::size_t k = 0; k < m_; ++k) s += (*this)(k, l);
  return s;
}

ConfusionMatrix confusion(std::span<const int> truth, std::span<const int> predicted, std::size_t m) {
  if (truth.size() != predicted.size()) throw std::invalid_argument("confusion: length mismatch");
  ConfusionMatrix cm(m);
  for (std::size_t i = 0; i < truth.size(); ++i) {
    if (truth[i] < 0 || predicted[i] < 0) throw std::invalid_argument("confusion: negative label");
    cm.add(static_cast<std::size_t>(truth[i]), static_cast<std::size_t>(predicted[i]));
  }
  return cm;
}

ClassificationMetrics metrics(const ConfusionMatrix& m) {
  const auto total = static_cast<double>(m.total());
  if (total == 0.0) throw std::invalid_argument("metrics: empty confusion matrix");
  const std::size_t k_max = m.classes();
  ClassificationMetrics out;
  double diagonal = 0.0;
  double chance = 0.0;
  for (std::size_t k = 0; k < k_max; ++k) {
    const auto hit = static_cast<double>(m(k, k));
    const auto row = static_cast<double>(m.row_sum(k));
    const auto col = static_cast<double>(m.col_sum(k));
    const double se = ratio(hit, row);
    const double pp = ratio(hit, col);
    out.sensitivity.push_back(se);
    out.precision.push_back(pp);
    out.f1.push_back(ratio(2.0 * pp * se, pp + se));
    diagonal += hit;
    chance += row * col;
  }
  out.accuracy = diagonal / total;
  out.expected_accuracy = chance / (total * total);
  out.kappa = ratio(out.accuracy - out.expected_accuracy, 1.0 - out.expected_accuracy);
  return out;
}

double auc(std::span<const double> scores, std::span<const bool> positive) {
  if (scores.size() != positive.size()) throw std::invalid_argument("auc: length mismatch");
  const std::size_t n = scores.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });
  double rank_sum = 0.0;
  std::size_t n_pos = 0;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && scores[order[j]] == scores[order[i]]) ++j;
    const double mid_rank = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
    for (std::size_t k = i; k < j; ++k)
      if (positive[order[k]]) {
        rank_sum += mid_rank;
        ++n_pos;
      }
    i = j;
  }
  const std::size_t n_neg = n - n_pos;
  if (n_pos == 0 || n_neg == 0) throw std::invalid_argument("auc: both classes must be present");
  const double np = static_cast<double>(n_pos);
  return (rank_sum - np * (np + 1.0) / 2.0) / (np * static_cast<double>(n_neg));
}

}  // namespace tdahrv
