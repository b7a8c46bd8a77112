#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "tdahrv/pstats.hpp"
#include "tdahrv/random.hpp"

using namespace tdahrv;

namespace {
void check_block(const PsVector& v, std::size_t offset, const SummaryStats& want, double tol) {
  for (std::size_t k = 0; k < kSummarySize; ++k) {
    INFO("slot " << offset + k);
    CHECK(std::abs(v.values[offset + k] - want[k]) <= tol);
  }
}

PersistenceDiagram random_diagram(Pcg32& rng, std::size_t n) {
  std::vector<PersistenceDiagram::Interval> iv;
  for (std::size_t i = 0; i < n; ++i) {
    const double b = rng.uniform();
    iv.emplace_back(b, b + 0.01 + rng.uniform());
  }
  return PersistenceDiagram(1, iv);
}
}  // namespace

TEST_CASE("persistent_entropy examples") {
  const std::vector<double> s{2, 4};
  const double want = -(1.0 / 3) * std::log(1.0 / 3) - (2.0 / 3) * std::log(2.0 / 3);
  CHECK(std::abs(persistent_entropy(s) - want) <= 1e-15);
  CHECK(std::abs(persistent_entropy(s) - 0.636514) <= 1e-6);
  CHECK(persistent_entropy(std::vector<double>{}) == 0.0);
  CHECK(persistent_entropy(std::vector<double>{0, 0}) == 0.0);
  for (std::size_t n : {1u, 2u, 10u, 1000u}) {
    const std::vector<double> equal(n, 0.37);
    CHECK(std::abs(persistent_entropy(equal) - std::log(static_cast<double>(n))) <= 1e-12);
  }
}

TEST_CASE("persistence_statistics examples") {
  const PersistenceDiagram pd(1, {{1, 3}, {2, 6}});
  const auto v = persistence_statistics(pd);
  CHECK(!v.empty);
  const SummaryStats block{3, std::sqrt(2.0), 0, 1, 2.5, 3, 3.5, 0.636514};
  check_block(v, 0, block, 1e-6);
  check_block(v, kSummarySize, block, 1e-6);

  const auto e = persistence_statistics(PersistenceDiagram(0));
  CHECK(e.empty);
  for (double x : e.values) CHECK(x == 0.0);

  // Only the essential pair: nothing finite to summarize.
  const auto ess = persistence_statistics(PersistenceDiagram(0, {{0, kInfinity}}));
  CHECK(ess.empty);

  const double c = 1.75;
  const auto single = persistence_statistics(PersistenceDiagram(0, {{0, c}}));
  check_block(single, 0, {c / 2, 0, 0, 0, c / 2, c / 2, c / 2, 0}, 1e-15);
  check_block(single, kSummarySize, {c, 0, 0, 0, c, c, c, 0}, 1e-15);
}

TEST_CASE("summary_statistics: moments and percentiles") {
  // Hand-computed for {1, 2, 3, 10}.
  const std::vector<double> s{10, 1, 3, 2};
  const auto st = summary_statistics(s);
  const double mean = 4.0;
  const double m2 = (9 + 4 + 1 + 36) / 4.0, m3 = (-27 - 8 - 1 + 216) / 4.0, m4 = (81 + 16 + 1 + 1296) / 4.0;
  CHECK(st[0] == mean);
  CHECK(std::abs(st[1] - std::sqrt(m2 * 4 / 3)) <= 1e-12);
  CHECK(std::abs(st[2] - m3 / std::pow(m2, 1.5)) <= 1e-12);
  CHECK(std::abs(st[3] - m4 / (m2 * m2)) <= 1e-12);
  CHECK(std::abs(st[4] - 1.75) <= 1e-12);
  CHECK(std::abs(st[5] - 2.5) <= 1e-12);
  CHECK(std::abs(st[6] - 4.75) <= 1e-12);

  // Two points: skewness undefined below three.
  CHECK(summary_statistics(std::vector<double>{1, 5})[2] == 0.0);
}

TEST_CASE("property: scale equivariance") {
  Pcg32 rng(201);
  for (int trial = 0; trial < 100; ++trial) {
    const auto pd = random_diagram(rng, 1 + rng.bounded(12));
    const double lambda = 0.1 + 5 * rng.uniform();
    std::vector<PersistenceDiagram::Interval> scaled;
    for (const auto& p : pd) scaled.emplace_back(lambda * p.birth, lambda * p.death);
    const auto a = persistence_statistics(pd), b = persistence_statistics(PersistenceDiagram(1, scaled));
    for (std::size_t block : {0u, 8u}) {
      for (std::size_t k : {0u, 1u, 4u, 5u, 6u})
        CHECK(b.values[block + k] == doctest::Approx(lambda * a.values[block + k]).epsilon(1e-9));
      for (std::size_t k : {2u, 3u, 7u}) CHECK(std::abs(b.values[block + k] - a.values[block + k]) <= 1e-9);
    }
  }
}

TEST_CASE("property: percentile order, entropy bound, permutation invariance") {
  Pcg32 rng(202);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng.bounded(20);
    std::vector<double> s(n);
    for (double& x : s) x = rng.uniform() + 1e-3;
    const auto st = summary_statistics(s);
    CHECK(st[4] <= st[5]);
    CHECK(st[5] <= st[6]);
    CHECK(st[7] <= std::log(static_cast<double>(n)) + 1e-12);

    std::vector<double> shuffled = s;
    for (std::size_t i = n; i > 1; --i) std::swap(shuffled[i - 1], shuffled[rng.bounded(static_cast<std::uint32_t>(i))]);
    const auto sh = summary_statistics(shuffled);
    for (std::size_t k = 0; k < kSummarySize; ++k) CHECK(sh[k] == doctest::Approx(st[k]).epsilon(1e-12));
  }
}
