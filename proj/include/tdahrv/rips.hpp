#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "tdahrv/diagram.hpp"
#include "tdahrv/point_cloud.hpp"

namespace tdahrv {

double euclidean_distance(std::span<const double> a, std::span<const double> b);

/// Dense symmetric matrix of pairwise Euclidean distances.
class DistanceMatrix {
 public:
  explicit DistanceMatrix(const PointCloud& cloud);
  /// Row-major n x n matrix; must be symmetric with a zero diagonal and
  /// finite nonnegative entries.
  DistanceMatrix(std::size_t n, std::vector<double> values);

  std::size_t size() const { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return d_[i * n_ + j]; }
  const double* row(std::size_t i) const { return d_.data() + i * n_; }

 private:
  std::size_t n_;
  std::vector<double> d_;
};

/// Vietoris–Rips persistence in dimensions 0..max_dim (max_dim <= 1).
///
/// The filtration value of a simplex is its diameter, so births and deaths
/// are in the cloud's distance units. Only simplices with diameter <=
/// threshold enter the filtration. Dimension 0 uses union-find over the
/// length-sorted edges; dimension 1 reduces edge coboundaries (persistent
/// cohomology), skipping the spanning-tree edges already paired in
/// dimension 0.
///
/// Throws std::invalid_argument for an empty cloud, max_dim outside {0, 1}
/// or a non-positive threshold.
std::vector<PersistenceDiagram> vr_pd(const PointCloud& cloud, int max_dim = 1,
                                      double threshold = kInfinity);
std::vector<PersistenceDiagram> vr_pd(const DistanceMatrix& distances, int max_dim = 1,
                                      double threshold = kInfinity);

}  // namespace tdahrv
