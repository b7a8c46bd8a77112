#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tdahrv/random.hpp"

namespace tdahrv {

/// Sleep stage labels used throughout: 0 wake, 1 REM, 2 NREM, -1 unscored.
enum Stage : int { kWake = 0, kRem = 1, kNrem = 2 };

struct SyntheticRecording {
  std::string id;
  std::vector<double> peaks;  // seconds, strictly increasing
  std::vector<int> labels;    // one per epoch
};

/// Beat-to-beat model of one stage: mean RR (s), amplitude of a slow
/// random modulation, amplitude of the respiratory sinusoid, white jitter.
struct StageProfile {
  double mean_rr;
  double slow_amplitude;
  double resp_amplitude;
  double jitter;
};

StageProfile stage_profile(int stage);

/// Hypnogram (wake onset, NREM/REM cycles with brief awakenings, final
/// wake) followed by an R-peak train whose RR dynamics follow each epoch's
/// stage profile. Fully determined by the state of `rng`.
SyntheticRecording synthesize_recording(const std::string& id, double minutes, double epoch_sec, Pcg32& rng);

/// `count` recordings named <prefix>NNN from one generator seeded with `seed`.
std::vector<SyntheticRecording> synthesize_recordings(int count, double minutes, double epoch_sec,
                                                      std::uint64_t seed, const std::string& prefix = "rec");

}  // namespace tdahrv
