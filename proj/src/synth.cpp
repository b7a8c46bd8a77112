#include "tdahrv/synth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

namespace tdahrv {

StageProfile stage_profile(int stage) {
  switch (stage) {
    case kWake: return {0.85, 0.070, 0.015, 0.045};
    case kRem: return {0.92, 0.035, 0.020, 0.020};
    case kNrem: return {1.00, 0.010, 0.045, 0.012};
    default: throw std::invalid_argument("unknown stage " + std::to_string(stage));
  }
}

namespace {

int uniform_int(Pcg32& rng, int lo, int hi) {  // inclusive
  return lo + static_cast<int>(rng.bounded(static_cast<std::uint32_t>(hi - lo + 1)));
}

std::vector<int> hypnogram(std::size_t epochs, Pcg32& rng) {
  std::vector<int> stages;
  auto append = [&](int stage, int count) {
    for (int k = 0; k < count && stages.size() < epochs; ++k) stages.push_back(stage);
  };
  const int final_wake = uniform_int(rng, 4, 8);
  append(kWake, uniform_int(rng, 6, 12));
  while (stages.size() + static_cast<std::size_t>(final_wake) < epochs) {
    append(kNrem, uniform_int(rng, 14, 30));
    append(kRem, uniform_int(rng, 6, 14));
    if (rng.uniform() < 0.3) append(kWake, uniform_int(rng, 3, 7));
  }
  stages.resize(std::min(stages.size(), epochs - std::min<std::size_t>(epochs, final_wake)));
  append(kWake, final_wake);
  return stages;
}

}  // namespace

SyntheticRecording synthesize_recording(const std::string& id, double minutes, double epoch_sec, Pcg32& rng) {
  if (!(minutes > 0.0) || !(epoch_sec > 0.0)) throw std::invalid_argument("synth: duration must be positive");
  SyntheticRecording rec;
  rec.id = id;
  const double duration = minutes * 60.0;
  const auto epochs = static_cast<std::size_t>(std::floor(duration / epoch_sec + 1e-9));
  rec.labels = hypnogram(epochs, rng);

  // Subject-level variation: baseline RR offset and overall variability gain.
  const double offset = 0.16 * (rng.uniform() - 0.5);
  const double gain = 0.8 + 0.4 * rng.uniform();
  const double resp_freq = 0.22 + 0.08 * rng.uniform();
  double resp_phase = 2.0 * std::numbers::pi * rng.uniform();

  double slow = 0.0;  // AR(1) slow modulation, unit stationary variance
  double mean_rr = stage_profile(rec.labels.empty() ? kWake : rec.labels.front()).mean_rr + offset;
  double t = 0.2 + 0.5 * rng.uniform();
  while (t < duration) {
    rec.peaks.push_back(t);
    const auto epoch = std::min(rec.labels.size() - 1, static_cast<std::size_t>(t / epoch_sec));
    const StageProfile p = stage_profile(rec.labels.empty() ? kWake : rec.labels[epoch]);
    // Heart rate drifts toward the stage's level with a ~10 s time constant.
    mean_rr += (p.mean_rr + offset - mean_rr) * 0.1;
    slow = 0.95 * slow + std::sqrt(1.0 - 0.95 * 0.95) * rng.normal();
    double rr = mean_rr + gain * (p.slow_amplitude * slow +
                                  p.resp_amplitude * std::sin(resp_phase) +
                                  p.jitter * rng.normal());
    rr = std::clamp(rr, 0.35, 1.8);
    // Occasional missed detection doubles an interval.
    if (rng.uniform() < 0.002) rr *= 2.0;
    t += rr;
    // Breathing rate wanders from breath to breath.
    resp_phase += 2.0 * std::numbers::pi * resp_freq * rr * (1.0 + 0.3 * rng.normal());
  }
  return rec;
}

std::vector<SyntheticRecording> synthesize_recordings(int count, double minutes, double epoch_sec,
                                                      std::uint64_t seed, const std::string& prefix) {
  Pcg32 rng(seed);
  std::vector<SyntheticRecording> out;
  for (int i = 0; i < count; ++i) {
    char name[32];
    std::snprintf(name, sizeof(name), "%03d", i + 1);
    out.push_back(synthesize_recording(prefix + name, minutes, epoch_sec, rng));
  }
  return out;
}

}  // namespace tdahrv
