#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <utility>
#include <vector>

namespace tdahrv {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// One homology class: born at `birth`, dies at `death` (infinite for
/// essential classes).
struct PersistencePair {
  int dim = 0;
  double birth = 0.0;
  double death = kInfinity;

  bool essential() const { return std::isinf(death); }
  double persistence() const { return death - birth; }

  friend bool operator==(const PersistencePair&, const PersistencePair&) = default;
};

/// Multiset of persistence pairs of a single homology dimension.
///
/// Pairs are kept sorted by (birth, death), so two diagrams holding the same
/// multiset compare equal and serialize identically. Zero-persistence pairs
/// are dropped on construction. The object is immutable once built.
class PersistenceDiagram {
 public:
  using Interval = std::pair<double, double>;

  explicit PersistenceDiagram(int dim = 0) : dim_(dim) {}

  /// Throws std::invalid_argument on NaN, on birth = +inf, or on death < birth.
  PersistenceDiagram(int dim, std::vector<Interval> intervals);

  int dim() const { return dim_; }
  std::span<const PersistencePair> pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }
  std::size_t essential_count() const;

  auto begin() const { return pairs_.begin(); }
  auto end() const { return pairs_.end(); }

  friend bool operator==(const PersistenceDiagram&, const PersistenceDiagram&) = default;

 private:
  int dim_ = 0;
  std::vector<PersistencePair> pairs_;
};

/// d - b over the finite pairs; essential pairs are skipped.
std::vector<double> lifespans(const PersistenceDiagram& pd);

/// (d + b) / 2 over the finite pairs; essential pairs are skipped.
std::vector<double> midpoints(const PersistenceDiagram& pd);

PersistenceDiagram remove_essential(const PersistenceDiagram& pd);

}  // namespace tdahrv
