#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "oracles.hpp"
#include "tdahrv/bottleneck.hpp"
#include "tdahrv/sublevel.hpp"

using namespace tdahrv;

namespace {
PersistenceDiagram small_diagram(Pcg32& rng, std::size_t n, bool essential) {
  std::vector<PersistenceDiagram::Interval> iv;
  for (std::size_t i = 0; i < n; ++i) {
    const double b = std::round(8 * rng.uniform()) / 4;  // coarse grid, many ties
    iv.emplace_back(b, b + std::round(8 * rng.uniform() + 1) / 4);
  }
  if (essential) iv.emplace_back(rng.uniform(), kInfinity);
  return PersistenceDiagram(0, iv);
}
}  // namespace

TEST_CASE("bottleneck examples") {
  const PersistenceDiagram a(0, {{0, 4}});
  CHECK(bottleneck(a, PersistenceDiagram(0)) == 2.0);
  CHECK(bottleneck(a, PersistenceDiagram(0, {{1, 5}})) == 1.0);
  CHECK(bottleneck(a, a) == 0.0);
  CHECK(bottleneck(PersistenceDiagram(0), PersistenceDiagram(0)) == 0.0);

  const PersistenceDiagram e1(0, {{0, kInfinity}, {1, 2}}), e2(0, {{0.5, kInfinity}});
  CHECK(bottleneck(e1, e2) == 0.5);
  CHECK(std::isinf(bottleneck(e1, PersistenceDiagram(0, {{1, 2}}))));
}

TEST_CASE("property: agrees with exhaustive matching") {
  Pcg32 rng(301);
  for (int trial = 0; trial < 300; ++trial) {
    const bool ess = trial % 3 == 0;
    const auto a = small_diagram(rng, rng.bounded(6), ess), b = small_diagram(rng, rng.bounded(6), ess);
    CHECK(bottleneck(a, b) == oracle::bottleneck(a, b));
  }
}

TEST_CASE("property: metric axioms") {
  Pcg32 rng(302);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = small_diagram(rng, rng.bounded(6), true);
    const auto b = small_diagram(rng, rng.bounded(6), true);
    const auto c = small_diagram(rng, rng.bounded(6), true);
    CHECK(bottleneck(a, a) == 0.0);
    CHECK(bottleneck(a, b) == bottleneck(b, a));
    CHECK(bottleneck(a, c) <= bottleneck(a, b) + bottleneck(b, c) + 1e-12);
  }
}

TEST_CASE("property: sub-level stability") {
  Pcg32 rng(303);
  for (int trial = 0; trial < 100; ++trial) {
    const double eps = 0.05 * (1 + trial % 4);
    std::vector<double> f, g;
    for (int i = 0; i < 120; ++i) {
      f.push_back(rng.normal());
      g.push_back(f.back() + eps * (2 * rng.uniform() - 1));
    }
    CHECK(bottleneck(sublevel_pd0(f), sublevel_pd0(g)) <= eps + 1e-9);
  }
}
