#include "tdahrv/svm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace tdahrv {

void FeatureMatrix::add_row(std::span<const double> row) {
  if (row.size() != cols_)
    throw std::invalid_argument("row has " + std::to_string(row.size()) + " columns, expected " +
                                std::to_string(cols_));
  values_.insert(values_.end(), row.begin(), row.end());
}

LinearModel train_linear_svm(const FeatureMatrix& x, std::span<const int> y, const SvmOptions& options) {
  const std::size_t n = x.rows();
  const std::size_t d = x.cols();
  if (y.size() != n) throw std::invalid_argument("SVM: label count does not match row count");
  if (!(options.c > 0.0)) throw std::invalid_argument("SVM: C must be positive");
  bool has_pos = false, has_neg = false;
  for (int label : y) {
    if (label == 1) has_pos = true;
    else if (label == -1) has_neg = true;
    else throw std::invalid_argument("SVM: labels must be +1 or -1");
  }
  if (!has_pos || !has_neg) throw std::invalid_argument("SVM: both classes must be present");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto ra = x.row(a), rb = x.row(b);
    for (std::size_t k = 0; k < d; ++k)
      if (ra[k] != rb[k]) return ra[k] < rb[k];
    return y[a] < y[b];
  });

  // w[d] is the bias, paired with an implicit constant feature of 1.
  std::vector<double> w(d + 1, 0.0);
  std::vector<double> alpha(n, 0.0);
  std::vector<double> q_diag(n);
  for (std::size_t i = 0; i < n; ++i) {
    double s = 1.0;
    for (double v : x.row(i)) s += v * v;
    q_diag[i] = s;
  }
  const double upper = options.c;

  for (int sweep = 0; sweep < options.max_sweeps; ++sweep) {
    double max_pg = -std::numeric_limits<double>::infinity();
    double min_pg = std::numeric_limits<double>::infinity();
    for (std::size_t i : order) {
      const auto row = x.row(i);
      const double yi = y[i];
      double margin = w[d];
      for (std::size_t k = 0; k < d; ++k) margin += w[k] * row[k];
      const double g = yi * margin - 1.0;
      double pg = g;
      if (alpha[i] == 0.0) pg = std::min(g, 0.0);
      else if (alpha[i] == upper) pg = std::max(g, 0.0);
      max_pg = std::max(max_pg, pg);
      min_pg = std::min(min_pg, pg);
      if (pg == 0.0) continue;
      const double old = alpha[i];
      alpha[i] = std::clamp(old - g / q_diag[i], 0.0, upper);
      const double step = (alpha[i] - old) * yi;
      if (step == 0.0) continue;
      for (std::size_t k = 0; k < d; ++k) w[k] += step * row[k];
      w[d] += step;
    }
    if (max_pg - min_pg < options.tolerance) break;
  }

  LinearModel model;
  model.bias = w[d];
  w.pop_back();
  model.weights = std::move(w);
  return model;
}

double decision_score(const LinearModel& model, std::span<const double> x) {
  if (x.size() != model.weights.size())
    throw std::invalid_argument("decision_score: input has " + std::to_string(x.size()) +
                                " features, model expects " + std::to_string(model.weights.size()));
  double s = model.bias;
  for (std::size_t k = 0; k < x.size(); ++k) s += model.weights[k] * x[k];
  return s;
}

int predict(const LinearModel& model, std::span<const double> x) {
  return decision_score(model, x) > 0.0 ? 1 : -1;
}

}  // namespace tdahrv
