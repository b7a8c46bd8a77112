#include "tdahrv/point_cloud.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace tdahrv {

PointCloud::PointCloud(std::size_t dim) : dim_(dim) {
  if (dim == 0) throw std::invalid_argument("point cloud dimension must be positive");
}

PointCloud::PointCloud(std::size_t dim, std::vector<double> coords)
    : dim_(dim), coords_(std::move(coords)) {
  if (dim == 0) throw std::invalid_argument("point cloud dimension must be positive");
  if (coords_.size() % dim != 0)
    throw std::invalid_argument("point cloud coordinate count is not a multiple of the dimension");
  for (double c : coords_)
    if (!std::isfinite(c)) throw std::invalid_argument("point cloud coordinate is not finite");
}

void PointCloud::add_point(std::span<const double> point) {
  if (point.size() != dim_)
    throw std::invalid_argument("point has dimension " + std::to_string(point.size()) +
                                ", cloud has " + std::to_string(dim_));
  for (double c : point)
    if (!std::isfinite(c)) throw std::invalid_argument("point cloud coordinate is not finite");
  coords_.insert(coords_.end(), point.begin(), point.end());
}

PointCloud lag_map(std::span<const double> series, std::size_t dim, std::size_t lag) {
  if (dim == 0 || lag == 0) throw std::invalid_argument("lag map: dimension and lag must be positive");
  const std::size_t span = (dim - 1) * lag;
  if (series.size() < span + 1)
    throw std::invalid_argument("lag map: series of length " + std::to_string(series.size()) +
                                " is too short; need at least " + std::to_string(span + 1) +
                                " samples for dim=" + std::to_string(dim) +
                                ", lag=" + std::to_string(lag));
  const std::size_t count = series.size() - span;
  std::vector<double> coords;
  coords.reserve(count * dim);
  for (std::size_t t = span; t < series.size(); ++t)
    for (std::size_t c = 0; c < dim; ++c) coords.push_back(series[t - c * lag]);
  return PointCloud(dim, std::move(coords));
}

}  // namespace tdahrv
