#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tdahrv/hrv.hpp"
#include "tdahrv/synth.hpp"

using namespace tdahrv;

namespace {
double stage_rr_std(const SyntheticRecording& r, int stage) {
  const auto rr = clean_rr(rr_from_peaks(r.peaks));
  double s = 0, ss = 0;
  std::size_t n = 0;
  for (const auto& x : rr) {
    const auto epoch = static_cast<std::size_t>(x.time / 30.0);
    if (epoch >= r.labels.size() || r.labels[epoch] != stage) continue;
    s += x.rr;
    ss += x.rr * x.rr;
    ++n;
  }
  REQUIRE(n > 10);
  return std::sqrt((ss - s * s / n) / (n - 1));
}
}  // namespace

TEST_CASE("synthetic recordings are deterministic and well formed") {
  const auto a = synthesize_recordings(3, 30, 30, 11);
  const auto b = synthesize_recordings(3, 30, 30, 11);
  const auto c = synthesize_recordings(3, 30, 30, 12);
  REQUIRE(a.size() == 3);
  CHECK(a[0].id == "rec001");
  CHECK(a[2].id == "rec003");
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].peaks == b[i].peaks);
    CHECK(a[i].labels == b[i].labels);
    CHECK(a[i].labels.size() == 60);
    for (std::size_t k = 1; k < a[i].peaks.size(); ++k) CHECK(a[i].peaks[k] > a[i].peaks[k - 1]);
    CHECK(a[i].peaks.front() >= 0.0);
    CHECK(a[i].peaks.back() >= 30 * 60 - 2);
    for (int l : a[i].labels) CHECK((l >= 0 && l <= 2));
  }
  CHECK(a[0].peaks != c[0].peaks);
  CHECK(synthesize_recordings(1, 10, 30, 1, "x")[0].id == "x001");
}

TEST_CASE("stage profiles: every stage occurs, wake is most variable") {
  const auto recs = synthesize_recordings(4, 60, 30, 3);
  for (const auto& r : recs) {
    for (int stage : {kWake, kRem, kNrem})
      CHECK(std::count(r.labels.begin(), r.labels.end(), stage) > 0);
    CHECK(r.labels.front() == kWake);
    CHECK(stage_rr_std(r, kWake) > stage_rr_std(r, kNrem));
  }
  CHECK(stage_profile(kWake).mean_rr < stage_profile(kNrem).mean_rr);
  CHECK_THROWS_AS(stage_profile(7), std::invalid_argument);
}
