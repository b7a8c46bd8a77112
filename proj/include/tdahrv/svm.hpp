#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace tdahrv {

/// Dense row-major design matrix.
class FeatureMatrix {
 public:
  explicit FeatureMatrix(std::size_t cols) : cols_(cols) {}

  void add_row(std::span<const double> row);

  std::size_t rows() const { return cols_ == 0 ? 0 : values_.size() / cols_; }
  std::size_t cols() const { return cols_; }
  std::span<const double> row(std::size_t i) const {
    return std::span<const double>(values_).subspan(i * cols_, cols_);
  }

 private:
  std::size_t cols_;
  std::vector<double> values_;
};

/// Linear decision function w.x + b. `class_pair` is (negative, positive):
/// a positive score votes for `class_pair.second`.
struct LinearModel {
  std::vector<double> weights;
  double bias = 0.0;
  std::pair<int, int> class_pair{-1, 1};
};

struct SvmOptions {
  double c = 1.0;
  double tolerance = 1e-6;
  int max_sweeps = 1000;
};

/// Soft-margin linear SVM (hinge loss) by dual coordinate descent. The bias
/// is learnt as the weight of a constant unit feature. Rows are visited in
/// the order of their sorted (features, label) key, so the result does not
/// depend on row order and is bit-reproducible.
///
/// `y` holds +1 / -1. Throws std::invalid_argument if a class is missing or
/// the shapes disagree.
LinearModel train_linear_svm(const FeatureMatrix& x, std::span<const int> y, const SvmOptions& options = {});

/// w.x + b; throws std::invalid_argument on a dimension mismatch.
double decision_score(const LinearModel& model, std::span<const double> x);

/// +1 when the score is strictly positive, otherwise -1.
int predict(const LinearModel& model, std::span<const double> x);

}  // namespace tdahrv
