#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace tdahrv {

/// Finite set of points in R^dim, stored row-major.
class PointCloud {
 public:
  explicit PointCloud(std::size_t dim);
  /// `coords.size()` must be a multiple of `dim`; all coordinates finite.
  PointCloud(std::size_t dim, std::vector<double> coords);

  void add_point(std::span<const double> point);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return dim_ == 0 ? 0 : coords_.size() / dim_; }
  bool empty() const { return coords_.empty(); }
  std::span<const double> point(std::size_t i) const {
    return std::span<const double>(coords_).subspan(i * dim_, dim_);
  }
  std::span<const double> coords() const { return coords_; }

 private:
  std::size_t dim_;
  std::vector<double> coords_;
};

/// Delay embedding: point k is (x[t], x[t - lag], ..., x[t - (dim - 1) lag])
/// with t = (dim - 1) lag + k. Needs x.size() >= (dim - 1) lag + 1, else
/// throws std::invalid_argument naming the minimum length.
PointCloud lag_map(std::span<const double> series, std::size_t dim, std::size_t lag);

}  // namespace tdahrv
