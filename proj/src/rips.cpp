#include "tdahrv/rips.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <functional>
#include <stdexcept>
#include <unordered_map>

namespace tdahrv {

double euclidean_distance(std::span<const double> a, std::span<const double> b) {
  double sum = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double diff = a[k] - b[k];
    sum += diff * diff;
  }
  return std::sqrt(sum);
}

DistanceMatrix::DistanceMatrix(const PointCloud& cloud) : n_(cloud.size()), d_(n_ * n_, 0.0) {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j) {
      const double d = euclidean_distance(cloud.point(i), cloud.point(j));
      d_[i * n_ + j] = d;
      d_[j * n_ + i] = d;
    }
}

DistanceMatrix::DistanceMatrix(std::size_t n, std::vector<double> values) : n_(n), d_(std::move(values)) {
  if (d_.size() != n_ * n_) throw std::invalid_argument("distance matrix must be square");
  for (std::size_t i = 0; i < n_; ++i) {
    if (d_[i * n_ + i] != 0.0) throw std::invalid_argument("distance matrix diagonal must be zero");
    for (std::size_t j = 0; j < i; ++j) {
      const double d = d_[i * n_ + j];
      if (!std::isfinite(d) || d < 0.0)
        throw std::invalid_argument("distance matrix entries must be finite and nonnegative");
      if (d != d_[j * n_ + i]) throw std::invalid_argument("distance matrix must be symmetric");
    }
  }
}

namespace {

using Index = std::uint32_t;

struct Edge {
  double length;
  Index u, v;  // u < v
};

// A triangle, ordered by (diameter, key). The key packs the sorted vertex
// triple, so the order is total and identical on every platform.
struct Entry {
  double diameter;
  std::uint64_t key;

  friend bool operator==(const Entry&, const Entry&) = default;
  friend bool operator>(const Entry& a, const Entry& b) {
    return a.diameter != b.diameter ? a.diameter > b.diameter : a.key > b.key;
  }
  friend bool operator<(const Entry& a, const Entry& b) { return b > a; }
};


class RipsComplex {
 public:
  RipsComplex(const DistanceMatrix& d, double threshold) : d_(d), n_(d.size()), threshold_(threshold) {
    for (Index u = 0; u < n_; ++u)
      for (Index v = u + 1; v < n_; ++v)
        if (d(u, v) <= threshold_) edges_.push_back({d(u, v), u, v});
    std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
      if (a.length != b.length) return a.length < b.length;
      if (a.u != b.u) return a.u < b.u;
      return a.v < b.v;
    });
  }

  std::size_t vertex_count() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }

  std::uint64_t triangle_key(Index a, Index b, Index c) const {
    if (a > b) std::swap(a, b);
    if (b > c) std::swap(b, c);
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(c) * n_ + b) * n_ + a;
  }

  // Earliest cofacet of `e` in the filtration order, if any.
  bool min_cofacet(const Edge& e, Entry& out) const {
    const double* row_u = d_.row(e.u);
    const double* row_v = d_.row(e.v);
    // Smallest max(d(u,k), d(v,k)) over k != u, v; plain loops so they
    // vectorize.
    double far = kInfinity;
    auto scan = [&](Index lo, Index hi) {
      double m = kInfinity;
      for (Index k = lo; k < hi; ++k) m = std::min(m, std::max(row_u[k], row_v[k]));
      far = std::min(far, m);
    };
    scan(0, e.u);
    scan(e.u + 1, e.v);
    scan(e.v + 1, static_cast<Index>(n_));
    const double diam = std::max(e.length, far);
    if (!(diam <= threshold_)) return false;
    // For fixed u < v the key grows with k, so the first match is minimal.
    for (Index k = 0; k < n_; ++k) {
      if (k == e.u || k == e.v || std::max(row_u[k], row_v[k]) > diam) continue;
      out = {diam, triangle_key(e.u, e.v, k)};
      return true;
    }
    return false;
  }

  void coboundary(const Edge& e, std::vector<Entry>& out) const {
    out.clear();
    const double* row_u = d_.row(e.u);
    const double* row_v = d_.row(e.v);
    for (Index k = 0; k < n_; ++k) {
      if (k == e.u || k == e.v) continue;
      const double diam = std::max({e.length, row_u[k], row_v[k]});
      if (diam > threshold_) continue;
      out.push_back({diam, triangle_key(e.u, e.v, k)});
    }
  }

 private:
  const DistanceMatrix& d_;
  std::size_t n_;
  double threshold_;
  std::vector<Edge> edges_;
};

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), Index{0}); }
  Index find(Index x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void link(Index a, Index b) {  // smaller root index survives
    if (a < b) parent_[b] = a;
    else parent_[a] = b;
  }

 private:
  std::vector<Index> parent_;
};

// Z/2 sum of edge coboundaries. Each added coboundary is kept as its own
// small heap and only the current head of each enters the merge heap, so a
// pivot search touches a short prefix of every summand instead of all of it.
class WorkingColumn {
 public:
  void clear() {
    used_ = 0;
    heads_.clear();
  }

  void add(const RipsComplex& complex, const Edge& e) {
    if (used_ == parts_.size()) parts_.emplace_back();
    auto& part = parts_[used_];
    complex.coboundary(e, part.entries);
    if (part.entries.empty()) return;
    part.pos = 0;
    part.sorted = 0;
    part.refill();
    heads_.push_back({part.entries.front(), static_cast<Index>(used_)});
    sift_up(heads_.size() - 1);
    ++used_;
  }

  // Cancels equal entries pairwise and reports the surviving minimum, which
  // stays in the column. An entry equal to the root always has a copy among
  // the root's children, so duplicates are found without popping.
  bool pivot(Entry& out) {
    while (!heads_.empty()) {
      const Entry top = heads_[0].entry;
      const bool twin = (heads_.size() > 1 && heads_[1].entry == top) || (heads_.size() > 2 && heads_[2].entry == top);
      if (!twin) {
        out = top;
        return true;
      }
      advance_root();
      advance_root();
    }
    return false;
  }

 private:
  struct Head {
    Entry entry;
    Index part;
  };

  // A coboundary consumed in ascending order; it is sorted lazily in short
  // runs since a reduction usually stops early in each summand.
  struct Part {
    std::vector<Entry> entries;
    std::size_t pos = 0;
    std::size_t sorted = 0;

    void refill() {
      const auto first = entries.begin() + static_cast<std::ptrdiff_t>(pos);
      const std::size_t run = std::min<std::size_t>(kRun, entries.size() - pos);
      const auto last = first + static_cast<std::ptrdiff_t>(run);
      std::nth_element(first, last - 1, entries.end(), std::less<Entry>());
      std::sort(first, last, std::less<Entry>());
      sorted = pos + run;
    }
  };
  static constexpr std::size_t kRun = 32;

  void advance_root() {
    auto& part = parts_[heads_[0].part];
    if (++part.pos < part.entries.size()) {
      if (part.pos == part.sorted) part.refill();
      heads_[0].entry = part.entries[part.pos];
    } else {
      heads_[0] = heads_.back();
      heads_.pop_back();
      if (heads_.empty()) return;
    }
    sift_down(0);
  }

  void sift_up(std::size_t i) {
    const Head h = heads_[i];
    while (i > 0) {
      const std::size_t parent = (i - 1) / 2;
      if (!(heads_[parent].entry > h.entry)) break;
      heads_[i] = heads_[parent];
      i = parent;
    }
    heads_[i] = h;
  }

  void sift_down(std::size_t i) {
    const Head h = heads_[i];
    const std::size_t n = heads_.size();
    for (;;) {
      std::size_t child = 2 * i + 1;
      if (child >= n) break;
      if (child + 1 < n && heads_[child].entry > heads_[child + 1].entry) ++child;
      if (!(h.entry > heads_[child].entry)) break;
      heads_[i] = heads_[child];
      i = child;
    }
    heads_[i] = h;
  }

  std::vector<Part> parts_;
  std::size_t used_ = 0;
  std::vector<Head> heads_;
};

PersistenceDiagram dim0(const RipsComplex& complex, std::vector<bool>& tree_edge) {
  const auto& edges = complex.edges();
  UnionFind uf(complex.vertex_count());
  tree_edge.assign(edges.size(), false);
  std::vector<PersistenceDiagram::Interval> intervals;
  std::size_t components = complex.vertex_count();
  for (std::size_t r = 0; r < edges.size() && components > 1; ++r) {
    const Index a = uf.find(edges[r].u);
    const Index b = uf.find(edges[r].v);
    if (a == b) continue;
    uf.link(a, b);
    tree_edge[r] = true;
    intervals.emplace_back(0.0, edges[r].length);
    --components;
  }
  for (std::size_t c = 0; c < components; ++c) intervals.emplace_back(0.0, kInfinity);
  return PersistenceDiagram(0, std::move(intervals));
}

PersistenceDiagram dim1(const RipsComplex& complex, const std::vector<bool>& tree_edge) {
  const auto& edges = complex.edges();
  std::unordered_map<std::uint64_t, Index> column_of_pivot;
  column_of_pivot.reserve(edges.size());
  // Reduction columns that differ from the bare edge; absent means {edge}.
  std::unordered_map<Index, std::vector<Index>> reduction;
  std::vector<PersistenceDiagram::Interval> intervals;

  WorkingColumn column;
  std::vector<Index> combination;
  for (std::size_t r = edges.size(); r-- > 0;) {
    if (tree_edge[r]) continue;
    const Edge& e = edges[r];
    const Index rank = static_cast<Index>(r);

    Entry pivot{};
    if (!complex.min_cofacet(e, pivot)) {
      intervals.emplace_back(e.length, kInfinity);
      continue;
    }
    if (!column_of_pivot.contains(pivot.key)) {
      column_of_pivot.emplace(pivot.key, rank);
      intervals.emplace_back(e.length, pivot.diameter);
      continue;
    }

    column.clear();
    combination.assign(1, rank);
    column.add(complex, e);
    bool has_pivot = column.pivot(pivot);
    while (has_pivot) {
      const auto owner = column_of_pivot.find(pivot.key);
      if (owner == column_of_pivot.end()) break;
      const Index other = owner->second;
      const auto stored = reduction.find(other);
      if (stored == reduction.end()) {
        combination.push_back(other);
        column.add(complex, edges[other]);
      } else {
        for (Index f : stored->second) {
          combination.push_back(f);
          column.add(complex, edges[f]);
        }
      }
      has_pivot = column.pivot(pivot);
    }

    if (!has_pivot) {
      intervals.emplace_back(e.length, kInfinity);
      continue;
    }
    column_of_pivot.emplace(pivot.key, rank);
    intervals.emplace_back(e.length, pivot.diameter);

    std::sort(combination.begin(), combination.end());
    std::vector<Index> reduced;
    for (std::size_t k = 0; k < combination.size();) {
      std::size_t run = k;
      while (run < combination.size() && combination[run] == combination[k]) ++run;
      if ((run - k) % 2 == 1) reduced.push_back(combination[k]);
      k = run;
    }
    if (reduced.size() != 1 || reduced.front() != rank) reduction.emplace(rank, std::move(reduced));
  }
  return PersistenceDiagram(1, std::move(intervals));
}

}  // namespace

std::vector<PersistenceDiagram> vr_pd(const DistanceMatrix& distances, int max_dim, double threshold) {
  if (distances.size() == 0) throw std::invalid_argument("Vietoris-Rips: empty point cloud");
  if (max_dim < 0 || max_dim > 1)
    throw std::invalid_argument("Vietoris-Rips: max_dim must be 0 or 1");
  if (std::isnan(threshold) || !(threshold > 0))
    throw std::invalid_argument("Vietoris-Rips: threshold must be positive");
  if (distances.size() >= (std::size_t{1} << 21))
    throw std::invalid_argument("Vietoris-Rips: too many points");

  // Beyond the enclosing radius the complex is a cone over the center, so
  // nothing born later can persist; truncating there leaves the diagrams
  // unchanged.
  double enclosing = kInfinity;
  for (std::size_t i = 0; i < distances.size(); ++i) {
    const double* row = distances.row(i);
    enclosing = std::min(enclosing, *std::max_element(row, row + distances.size()));
  }
  const RipsComplex complex(distances, std::min(threshold, enclosing));
  std::vector<bool> tree_edge;
  std::vector<PersistenceDiagram> out;
  out.push_back(dim0(complex, tree_edge));
  if (max_dim >= 1) out.push_back(dim1(complex, tree_edge));
  return out;
}

std::vector<PersistenceDiagram> vr_pd(const PointCloud& cloud, int max_dim, double threshold) {
  if (cloud.empty()) throw std::invalid_argument("Vietoris-Rips: empty point cloud");
  return vr_pd(DistanceMatrix(cloud), max_dim, threshold);
}

}  // namespace tdahrv
