#include "tdahrv/bottleneck.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace tdahrv {
namespace {

struct Point {
  double birth, death;
};

// Hopcroft–Karp on a square bipartite graph given as adjacency lists.
class BipartiteMatcher {
 public:
  explicit BipartiteMatcher(const std::vector<std::vector<int>>& adj)
      : adj_(adj), n_(static_cast<int>(adj.size())), match_left_(n_, -1), match_right_(n_, -1),
        dist_(n_) {}

  int max_matching() {
    int matched = 0;
    while (bfs())
      for (int u = 0; u < n_; ++u)
        if (match_left_[u] == -1 && dfs(u)) ++matched;
    return matched;
  }

 private:
  static constexpr int kUnreached = std::numeric_limits<int>::max();

  bool bfs() {
    std::queue<int> q;
    bool found = false;
    for (int u = 0; u < n_; ++u) {
      dist_[u] = match_left_[u] == -1 ? 0 : kUnreached;
      if (dist_[u] == 0) q.push(u);
    }
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int v : adj_[u]) {
        const int w = match_right_[v];
        if (w == -1) {
          found = true;
        } else if (dist_[w] == kUnreached) {
          dist_[w] = dist_[u] + 1;
          q.push(w);
        }
      }
    }
    return found;
  }

  bool dfs(int u) {
    for (int v : adj_[u]) {
      const int w = match_right_[v];
      if (w == -1 || (dist_[w] == dist_[u] + 1 && dfs(w))) {
        match_left_[u] = v;
        match_right_[v] = u;
        return true;
      }
    }
    dist_[u] = kUnreached;
    return false;
  }

  const std::vector<std::vector<int>>& adj_;
  int n_;
  std::vector<int> match_left_, match_right_, dist_;
};

double finite_bottleneck(const std::vector<Point>& a, const std::vector<Point>& b) {
  const int na = static_cast<int>(a.size());
  const int nb = static_cast<int>(b.size());
  const int n = na + nb;
  if (n == 0) return 0.0;

  // Left: a_0..a_{na-1}, then the diagonal shadows of b. Right: b_0..b_{nb-1},
  // then the diagonal shadows of a. Shadow-to-shadow edges cost nothing.
  constexpr double kNoEdge = std::numeric_limits<double>::infinity();
  std::vector<double> cost(static_cast<std::size_t>(n) * n, kNoEdge);
  auto at = [&](int l, int r) -> double& { return cost[static_cast<std::size_t>(l) * n + r]; };
  for (int i = 0; i < na; ++i) {
    for (int j = 0; j < nb; ++j)
      at(i, j) = std::max(std::abs(a[i].birth - b[j].birth), std::abs(a[i].death - b[j].death));
    at(i, nb + i) = (a[i].death - a[i].birth) / 2.0;
  }
  for (int j = 0; j < nb; ++j) {
    at(na + j, j) = (b[j].death - b[j].birth) / 2.0;
    for (int i = 0; i < na; ++i) at(na + j, nb + i) = 0.0;
  }

  std::vector<double> candidates;
  candidates.reserve(cost.size());
  for (double c : cost)
    if (c != kNoEdge) candidates.push_back(c);
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  std::vector<std::vector<int>> adj(n);
  auto feasible = [&](double limit) {
    for (int l = 0; l < n; ++l) {
      adj[l].clear();
      for (int r = 0; r < n; ++r)
        if (at(l, r) <= limit) adj[l].push_back(r);
    }
    return BipartiteMatcher(adj).max_matching() == n;
  };

  std::size_t lo = 0, hi = candidates.size() - 1;  // the largest candidate is always feasible
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (feasible(candidates[mid])) hi = mid;
    else lo = mid + 1;
  }
  return candidates[lo];
}

}  // namespace

double bottleneck(const PersistenceDiagram& a, const PersistenceDiagram& b) {
  std::vector<Point> fa, fb;
  std::vector<double> ea, eb;
  for (const auto& p : a) {
    if (p.essential()) ea.push_back(p.birth);
    else fa.push_back({p.birth, p.death});
  }
  for (const auto& p : b) {
    if (p.essential()) eb.push_back(p.birth);
    else fb.push_back({p.birth, p.death});
  }
  if (ea.size() != eb.size()) return kInfinity;
  std::sort(ea.begin(), ea.end());
  std::sort(eb.begin(), eb.end());
  double essential_cost = 0.0;
  for (std::size_t k = 0; k < ea.size(); ++k)
    essential_cost = std::max(essential_cost, std::abs(ea[k] - eb[k]));
  return std::max(essential_cost, finite_bottleneck(fa, fb));
}

}  // namespace tdahrv
