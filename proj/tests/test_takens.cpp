#include <doctest.h>

#include <stdexcept>

#include <string>

#include "tdahrv/point_cloud.hpp"
#include "tdahrv/random.hpp"

using namespace tdahrv;

namespace {
std::vector<double> point(const PointCloud& c, std::size_t i) {
  auto p = c.point(i);
  return {p.begin(), p.end()};
}
}  // namespace

TEST_CASE("lag_map examples") {
  const auto c = lag_map(std::vector<double>{1, 2, 3, 4}, 2, 1);
  REQUIRE(c.size() == 3);
  CHECK(c.dim() == 2);
  CHECK(point(c, 0) == std::vector<double>{2, 1});
  CHECK(point(c, 1) == std::vector<double>{3, 2});
  CHECK(point(c, 2) == std::vector<double>{4, 3});

  const auto big = lag_map(std::vector<double>(360, 0.5), 120, 1);
  CHECK(big.size() == 241);
  CHECK(big.dim() == 120);

  const auto id = lag_map(std::vector<double>{7, 8, 9}, 1, 1);
  REQUIRE(id.size() == 3);
  CHECK(point(id, 0) == std::vector<double>{7});
  CHECK(point(id, 2) == std::vector<double>{9});
}

TEST_CASE("lag_map with lag > 1") {
  const auto c = lag_map(std::vector<double>{0, 1, 2, 3, 4, 5, 6}, 3, 2);
  REQUIRE(c.size() == 3);
  CHECK(point(c, 0) == std::vector<double>{4, 2, 0});
  CHECK(point(c, 2) == std::vector<double>{6, 4, 2});
}

TEST_CASE("lag_map errors name the minimum length") {
  try {
    lag_map(std::vector<double>{1, 2, 3}, 3, 2);
    FAIL("expected invalid_argument");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("at least 5") != std::string::npos);
  }
  CHECK_THROWS_AS(lag_map(std::vector<double>{1, 2}, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(lag_map(std::vector<double>{1, 2}, 1, 0), std::invalid_argument);
}

TEST_CASE("property: count, first coordinate and translation equivariance") {
  Pcg32 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t p = 1 + rng.bounded(6), tau = 1 + rng.bounded(4);
    const std::size_t n = (p - 1) * tau + 1 + rng.bounded(20);
    std::vector<double> x(n);
    for (double& v : x) v = rng.normal();
    const auto c = lag_map(x, p, tau);
    REQUIRE(c.size() == n - (p - 1) * tau);
    const double shift = 3.25;
    std::vector<double> y = x;
    for (double& v : y) v += shift;
    const auto d = lag_map(y, p, tau);
    for (std::size_t k = 0; k < c.size(); ++k) {
      CHECK(c.point(k)[0] == x[(p - 1) * tau + k]);
      for (std::size_t j = 0; j < p; ++j) {
        CHECK(c.point(k)[j] == x[(p - 1) * tau + k - j * tau]);
        CHECK(d.point(k)[j] == x[(p - 1) * tau + k - j * tau] + shift);
      }
    }
  }
}

TEST_CASE("PointCloud validation") {
  CHECK_THROWS_AS(PointCloud(2, {1, 2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(PointCloud(1, {std::numeric_limits<double>::infinity()}), std::invalid_argument);
  PointCloud c(2);
  c.add_point(std::vector<double>{1, 2});
  CHECK(c.size() == 1);
  CHECK_THROWS_AS(c.add_point(std::vector<double>{1}), std::invalid_argument);
}
