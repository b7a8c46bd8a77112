#include "tdahrv/explicit_filtration.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace tdahrv {
namespace {

std::string describe(const std::vector<int>& simplex) {
  std::string s = "<";
  for (std::size_t k = 0; k < simplex.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(simplex[k]);
  }
  return s + ">";
}

std::vector<std::vector<int>> facets(const std::vector<int>& simplex) {
  std::vector<std::vector<int>> out;
  if (simplex.size() < 2) return out;
  for (std::size_t skip = 0; skip < simplex.size(); ++skip) {
    std::vector<int> face;
    for (std::size_t k = 0; k < simplex.size(); ++k)
      if (k != skip) face.push_back(simplex[k]);
    out.push_back(std::move(face));
  }
  return out;
}

}  // namespace

std::vector<PersistenceDiagram> explicit_filtration_ph(std::span<const FiltrationStep> steps) {
  std::vector<FiltrationStep> simplices(steps.begin(), steps.end());
  for (auto& s : simplices) {
    if (s.simplex.empty() || s.simplex.size() > 3)
      throw std::invalid_argument("filtration: simplex " + describe(s.simplex) +
                                  " must have 1 to 3 vertices");
    if (std::isnan(s.value) || std::isinf(s.value))
      throw std::invalid_argument("filtration: simplex " + describe(s.simplex) +
                                  " has a non-finite value");
    std::sort(s.simplex.begin(), s.simplex.end());
    if (std::adjacent_find(s.simplex.begin(), s.simplex.end()) != s.simplex.end())
      throw std::invalid_argument("filtration: simplex " + describe(s.simplex) +
                                  " repeats a vertex");
  }

  std::map<std::vector<int>, double> value_of;
  for (const auto& s : simplices)
    if (!value_of.emplace(s.simplex, s.value).second)
      throw std::invalid_argument("filtration: simplex " + describe(s.simplex) + " listed twice");
  for (const auto& s : simplices)
    for (const auto& face : facets(s.simplex)) {
      const auto it = value_of.find(face);
      if (it == value_of.end() || it->second > s.value)
        throw std::invalid_argument("filtration: simplex " + describe(s.simplex) +
                                    " enters before its face " + describe(face));
    }

  // Filtration order: value, then dimension, then vertex tuple.
  std::sort(simplices.begin(), simplices.end(), [](const FiltrationStep& a, const FiltrationStep& b) {
    if (a.value != b.value) return a.value < b.value;
    if (a.simplex.size() != b.simplex.size()) return a.simplex.size() < b.simplex.size();
    return a.simplex < b.simplex;
  });
  std::map<std::vector<int>, std::size_t> position;
  for (std::size_t k = 0; k < simplices.size(); ++k) position[simplices[k].simplex] = k;

  const std::size_t m = simplices.size();
  std::vector<std::vector<std::size_t>> boundary(m);
  for (std::size_t j = 0; j < m; ++j) {
    for (const auto& face : facets(simplices[j].simplex)) boundary[j].push_back(position.at(face));
    std::sort(boundary[j].begin(), boundary[j].end());
  }

  // low -> column whose reduced boundary ends at that row.
  std::vector<std::size_t> owner(m, m);
  std::vector<bool> paired(m, false);
  std::vector<std::vector<PersistenceDiagram::Interval>> intervals(2);
  for (std::size_t j = 0; j < m; ++j) {
    auto& col = boundary[j];
    while (!col.empty() && owner[col.back()] != m) {
      const auto& other = boundary[owner[col.back()]];
      std::vector<std::size_t> sum;
      std::set_symmetric_difference(col.begin(), col.end(), other.begin(), other.end(),
                                    std::back_inserter(sum));
      col = std::move(sum);
    }
    if (col.empty()) continue;
    const std::size_t low = col.back();
    owner[low] = j;
    paired[low] = paired[j] = true;
    const std::size_t dim = simplices[low].simplex.size() - 1;
    if (dim < 2) intervals[dim].emplace_back(simplices[low].value, simplices[j].value);
  }
  for (std::size_t j = 0; j < m; ++j) {
    if (paired[j] || !boundary[j].empty()) continue;
    const std::size_t dim = simplices[j].simplex.size() - 1;
    if (dim < 2) intervals[dim].emplace_back(simplices[j].value, kInfinity);
  }

  std::vector<PersistenceDiagram> out;
  out.emplace_back(0, std::move(intervals[0]));
  out.emplace_back(1, std::move(intervals[1]));
  return out;
}

std::vector<FiltrationStep> enumerate_rips_filtration(const PointCloud& cloud) {
  const int n = static_cast<int>(cloud.size());
  auto dist = [&](int a, int b) {
    const auto p = cloud.point(static_cast<std::size_t>(a));
    const auto q = cloud.point(static_cast<std::size_t>(b));
    double s = 0.0;
    for (std::size_t k = 0; k < p.size(); ++k) s += (p[k] - q[k]) * (p[k] - q[k]);
    return std::sqrt(s);
  };
  std::vector<FiltrationStep> steps;
  for (int a = 0; a < n; ++a) steps.push_back({{a}, 0.0});
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) steps.push_back({{a, b}, dist(a, b)});
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        steps.push_back({{a, b, c}, std::max({dist(a, b), dist(a, c), dist(b, c)})});
  return steps;
}

}  // namespace tdahrv
