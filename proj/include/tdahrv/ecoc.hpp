#pragma once

#include <span>
#include <vector>

#include "tdahrv/svm.hpp"

namespace tdahrv {

/// One-versus-one error-correcting output code ensemble: one binary linear
/// SVM per unordered pair of classes.
struct EcocModel {
  std::vector<int> classes;  // ascending
  std::vector<LinearModel> members;
};

/// Trains one member per class pair (a, b), a < b, on the rows of those two
/// classes; label b is the positive side. Throws std::invalid_argument if a
/// class in `classes` has no rows or fewer than two classes are given.
EcocModel train_ecoc_ovo(const FeatureMatrix& x, std::span<const int> labels, std::vector<int> classes,
                         const SvmOptions& options = {});

/// Majority vote over the members. A tied vote goes to the class with the
/// larger sum of |score| over the members that voted for it; a remaining
/// tie goes to the smaller class label.
int predict(const EcocModel& model, std::span<const double> x);

/// Vote resolution on precomputed member scores (same order as members).
int resolve_votes(const EcocModel& model, std::span<const double> scores);

}  // namespace tdahrv
