#pragma once

#include <vector>

namespace tdahrv {

/// Uniformly sampled real signal. `sample_rate` is 0 for abstract series;
/// `start_time` is the time (seconds) of samples[0].
struct TimeSeries {
  std::vector<double> samples;
  double sample_rate = 0.0;
  double start_time = 0.0;

  std::size_t size() const { return samples.size(); }
};

}  // namespace tdahrv
