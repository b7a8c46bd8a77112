#pragma once

#include <span>
#include <string>
#include <vector>

#include "tdahrv/time_series.hpp"

namespace tdahrv {

/// RR interval `rr` (seconds) ending at the R peak at `time`.
struct RrSample {
  double time;
  double rr;

  friend bool operator==(const RrSample&, const RrSample&) = default;
};

/// Intervals between consecutive R peaks, stamped at the later peak.
/// Peaks must be finite, nonnegative and strictly increasing; needs >= 2.
std::vector<RrSample> rr_from_peaks(std::span<const double> peaks);

/// Acceptance band for the 5-beat median filter, as fractions of the local
/// median.
struct RrBounds {
  double low = 0.6;
  double high = 1.8;
};

/// 5-beat median filter: an interval outside [low m, high m], with m the
/// median of the (edge-truncated) 5-interval window centred on it, is
/// replaced by m. Windows always read the original values.
std::vector<RrSample> clean_rr(std::span<const RrSample> rr, RrBounds bounds = {});

/// Monotone piecewise-cubic Hermite interpolant (pchip slopes, Fritsch–Carlson
/// monotonicity) through strictly increasing knots.
class MonotoneCubic {
 public:
  MonotoneCubic(std::vector<double> x, std::vector<double> y);
  double operator()(double t) const;
  double lower() const { return x_.front(); }
  double upper() const { return x_.back(); }

 private:
  std::vector<double> x_, y_, slope_;
};

/// Instantaneous heart rate 60 / rr (beats per minute) at each interval's
/// timestamp, resampled at `fs` Hz on the absolute grid k / fs, clipped to
/// the knot span. Needs >= 2 intervals.
TimeSeries ihr_resample(std::span<const RrSample> rr, double fs = 4.0);

/// rr_from_peaks + clean_rr + ihr_resample.
TimeSeries ihr_from_peaks(std::span<const double> peaks, double fs = 4.0, RrBounds bounds = {});

struct EpochConfig {
  double epoch_sec = 30.0;
  int window_epochs = 3;
  double fs = 4.0;
  int min_peaks = 5;

  std::size_t window_samples() const;
};

/// Median-subtracted IHR over the epoch and its predecessors.
struct EpochWindow {
  std::string recording_id;
  int epoch_index = 0;
  int label = -1;  // 0 wake, 1 REM, 2 NREM, -1 unscored
  std::vector<double> samples;
};

struct DroppedEpoch {
  int epoch_index;
  std::string reason;
};

/// One window per scored epoch j >= window_epochs - 1. Epoch j covers
/// [j E, (j + 1) E) seconds; its window holds the window_samples() grid
/// samples ending at t_j = (j + 1) E. Epochs with fewer than min_peaks R
/// peaks, or whose window leaves the IHR support, are dropped and recorded
/// in `dropped` when given.
std::vector<EpochWindow> build_epochs(const TimeSeries& ihr, std::span<const int> labels,
                                      std::span<const double> peaks, const EpochConfig& config,
                                      const std::string& recording_id,
                                      std::vector<DroppedEpoch>* dropped = nullptr);

double median(std::vector<double> values);

}  // namespace tdahrv
