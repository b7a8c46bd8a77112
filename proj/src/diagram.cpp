#include "tdahrv/diagram.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace tdahrv {

PersistenceDiagram::PersistenceDiagram(int dim, std::vector<Interval> intervals) : dim_(dim) {
  if (dim < 0) throw std::invalid_argument("persistence diagram dimension must be nonnegative");
  pairs_.reserve(intervals.size());
  for (const auto& [birth, death] : intervals) {
    if (std::isnan(birth) || std::isnan(death))
      throw std::invalid_argument("persistence pair contains NaN");
    if (std::isinf(birth))
      throw std::invalid_argument("persistence pair has infinite birth");
    if (death < birth)
      throw std::invalid_argument("persistence pair dies before it is born: (" +
                                  std::to_string(birth) + ", " + std::to_string(death) + ")");
    if (death == birth) continue;
    pairs_.push_back({dim, birth, death});
  }
  std::sort(pairs_.begin(), pairs_.end(), [](const PersistencePair& a, const PersistencePair& b) {
    return a.birth != b.birth ? a.birth < b.birth : a.death < b.death;
  });
}

std::size_t PersistenceDiagram::essential_count() const {
  return static_cast<std::size_t>(
      std::count_if(pairs_.begin(), pairs_.end(), [](const auto& p) { return p.essential(); }));
}

std::vector<double> lifespans(const PersistenceDiagram& pd) {
  std::vector<double> out;
  out.reserve(pd.size());
  for (const auto& p : pd)
    if (!p.essential()) out.push_back(p.death - p.birth);
  return out;
}

std::vector<double> midpoints(const PersistenceDiagram& pd) {
  std::vector<double> out;
  out.reserve(pd.size());
  for (const auto& p : pd)
    if (!p.essential()) out.push_back((p.death + p.birth) / 2.0);
  return out;
}

PersistenceDiagram remove_essential(const PersistenceDiagram& pd) {
  std::vector<PersistenceDiagram::Interval> finite;
  finite.reserve(pd.size());
  for (const auto& p : pd)
    if (!p.essential()) finite.emplace_back(p.birth, p.death);
  return PersistenceDiagram(pd.dim(), std::move(finite));
}

}  // namespace tdahrv
