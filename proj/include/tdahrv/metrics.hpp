#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace tdahrv {

/// counts(k, l): epochs of true class k predicted as class l.
class ConfusionMatrix {
 public:
  explicit ConfusionMatrix(std::size_t classes) : m_(classes), counts_(classes * classes, 0) {}

  std::size_t classes() const { return m_; }
  std::uint64_t operator()(std::size_t k, std::size_t l) const { return counts_[k * m_ + l]; }
  void add(std::size_t truth, std::size_t predicted, std::uint64_t count = 1);
  std::uint64_t total() const;
  std::uint64_t row_sum(std::size_t k) const;
  std::uint64_t col_sum(std::size_t l) const;

 private:
  std::size_t m_;
  std::vector<std::uint64_t> counts_;
};

/// Labels must lie in [0, m); throws std::invalid_argument otherwise.
ConfusionMatrix confusion(std::span<const int> truth, std::span<const int> predicted, std::size_t m);

/// Per-class sensitivity, positive predictivity and F1, overall accuracy,
/// expected (chance) accuracy and Cohen's kappa. A ratio whose denominator
/// is zero is NaN, never a silent 0.
struct ClassificationMetrics {
  std::vector<double> sensitivity;
  std::vector<double> precision;
  std::vector<double> f1;
  double accuracy = 0.0;
  double expected_accuracy = 0.0;
  double kappa = 0.0;
};

/// Throws std::invalid_argument for an all-zero matrix.
ClassificationMetrics metrics(const ConfusionMatrix& m);

/// Area under the ROC curve: P(score of a random positive > score of a
/// random negative), ties counting 1/2. `positive` flags the positive
/// class. Throws if either class is absent.
double auc(std::span<const double> scores, std::span<const bool> positive);

}  // namespace tdahrv
