#include "tdahrv/hrv.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tdahrv {

double median(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("median of empty set");
  const std::size_t mid = values.size() / 2;
  std::nth_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(mid), values.end());
  const double upper = values[mid];
  if (values.size() % 2 == 1) return upper;
  const double lower = *std::max_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(mid));
  return (lower + upper) / 2.0;
}

std::vector<RrSample> rr_from_peaks(std::span<const double> peaks) {
  if (peaks.size() < 2) throw std::invalid_argument("need at least 2 R peaks");
  for (std::size_t i = 0; i < peaks.size(); ++i) {
    if (!std::isfinite(peaks[i]) || peaks[i] < 0.0)
      throw std::invalid_argument("R peak times must be finite and nonnegative");
    if (i > 0 && !(peaks[i] > peaks[i - 1]))
      throw std::invalid_argument("R peak times must be strictly increasing");
  }
  std::vector<RrSample> out;
  out.reserve(peaks.size() - 1);
  for (std::size_t i = 1; i < peaks.size(); ++i) out.push_back({peaks[i], peaks[i] - peaks[i - 1]});
  return out;
}

std::vector<RrSample> clean_rr(std::span<const RrSample> rr, RrBounds bounds) {
  std::vector<RrSample> out(rr.begin(), rr.end());
  const std::size_t n = rr.size();
  std::vector<double> window;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t lo = i >= 2 ? i - 2 : 0;
    const std::size_t hi = std::min(n, i + 3);
    window.clear();
    for (std::size_t k = lo; k < hi; ++k) window.push_back(rr[k].rr);
    const double m = median(window);
    if (rr[i].rr < bounds.low * m || rr[i].rr > bounds.high * m) out[i].rr = m;
  }
  return out;
}

MonotoneCubic::MonotoneCubic(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)), slope_(x_.size(), 0.0) {
  const std::size_t n = x_.size();
  if (n < 2 || y_.size() != n) throw std::invalid_argument("interpolation needs >= 2 matching knots");
  for (std::size_t k = 1; k < n; ++k)
    if (!(x_[k] > x_[k - 1])) throw std::invalid_argument("interpolation knots must increase strictly");

  std::vector<double> h(n - 1), delta(n - 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    h[k] = x_[k + 1] - x_[k];
    delta[k] = (y_[k + 1] - y_[k]) / h[k];
  }
  if (n == 2) {
    slope_[0] = slope_[1] = delta[0];
    return;
  }
  // Interior: weighted harmonic mean of the neighbouring secants, zero at
  // local extrema.
  for (std::size_t k = 1; k + 1 < n; ++k) {
    if (delta[k - 1] * delta[k] <= 0.0) continue;
    const double w1 = 2.0 * h[k] + h[k - 1];
    const double w2 = h[k] + 2.0 * h[k - 1];
    slope_[k] = (w1 + w2) / (w1 / delta[k - 1] + w2 / delta[k]);
  }
  // Ends: shape-preserving three-point estimate.
  auto sign = [](double v) { return (v > 0.0) - (v < 0.0); };
  auto end_slope = [&](double h0, double h1, double d0, double d1) {
    double s = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
    if (sign(s) != sign(d0)) {
      s = 0.0;
    } else if (sign(d0) != sign(d1) && std::abs(s) > std::abs(3.0 * d0)) {
      s = 3.0 * d0;
    }
    return s;
  };
  slope_[0] = end_slope(h[0], h[1], delta[0], delta[1]);
  slope_[n - 1] = end_slope(h[n - 2], h[n - 3], delta[n - 2], delta[n - 3]);
}

double MonotoneCubic::operator()(double t) const {
  const auto it = std::upper_bound(x_.begin(), x_.end(), t);
  std::size_t k = it == x_.begin() ? 0 : static_cast<std::size_t>(it - x_.begin()) - 1;
  if (k >= x_.size() - 1) k = x_.size() - 2;
  const double h = x_[k + 1] - x_[k];
  const double s = (t - x_[k]) / h;
  const double s2 = s * s, s3 = s2 * s;
  const double h00 = 2 * s3 - 3 * s2 + 1;
  const double h10 = s3 - 2 * s2 + s;
  const double h01 = -2 * s3 + 3 * s2;
  const double h11 = s3 - s2;
  return h00 * y_[k] + h10 * h * slope_[k] + h01 * y_[k + 1] + h11 * h * slope_[k + 1];
}

TimeSeries ihr_resample(std::span<const RrSample> rr, double fs) {
  if (!(fs > 0.0)) throw std::invalid_argument("sampling rate must be positive");
  if (rr.size() < 2) throw std::invalid_argument("need at least 2 RR intervals to build the IHR");
  std::vector<double> x, y;
  x.reserve(rr.size());
  y.reserve(rr.size());
  for (const auto& s : rr) {
    if (!(s.rr > 0.0) || !std::isfinite(s.rr)) throw std::invalid_argument("RR interval must be positive");
    x.push_back(s.time);
    y.push_back(60.0 / s.rr);
  }
  const MonotoneCubic interp(std::move(x), std::move(y));

  const auto first = static_cast<long long>(std::ceil(interp.lower() * fs - 1e-9));
  const auto last = static_cast<long long>(std::floor(interp.upper() * fs + 1e-9));
  TimeSeries out;
  out.sample_rate = fs;
  out.start_time = static_cast<double>(first) / fs;
  for (long long k = first; k <= last; ++k) {
    const double t = std::clamp(static_cast<double>(k) / fs, interp.lower(), interp.upper());
    out.samples.push_back(interp(t));
  }
  return out;
}

TimeSeries ihr_from_peaks(std::span<const double> peaks, double fs, RrBounds bounds) {
  const auto rr = clean_rr(rr_from_peaks(peaks), bounds);
  return ihr_resample(rr, fs);
}

std::size_t EpochConfig::window_samples() const {
  return static_cast<std::size_t>(std::llround(window_epochs * epoch_sec * fs));
}

std::vector<EpochWindow> build_epochs(const TimeSeries& ihr, std::span<const int> labels,
                                      std::span<const double> peaks, const EpochConfig& config,
                                      const std::string& recording_id,
                                      std::vector<DroppedEpoch>* dropped) {
  if (!(config.fs > 0.0) || !(config.epoch_sec > 0.0) || config.window_epochs < 1)
    throw std::invalid_argument("invalid epoch configuration");
  if (ihr.sample_rate > 0.0 && std::abs(ihr.sample_rate - config.fs) > 1e-12)
    throw std::invalid_argument("IHR sampling rate does not match the epoch configuration");
  const std::size_t length = config.window_samples();
  const auto grid_start = std::llround(ihr.start_time * config.fs);

  auto drop = [&](int j, std::string reason) {
    if (dropped) dropped->push_back({j, std::move(reason)});
  };

  std::vector<EpochWindow> out;
  for (std::size_t j = 0; j < labels.size(); ++j) {
    const int epoch = static_cast<int>(j);
    if (labels[j] < 0) continue;
    if (epoch < config.window_epochs - 1) {
      drop(epoch, "insufficient history");
      continue;
    }
    const double begin = epoch * config.epoch_sec;
    const double end = (epoch + 1) * config.epoch_sec;
    const auto lo = std::lower_bound(peaks.begin(), peaks.end(), begin);
    const auto hi = std::lower_bound(peaks.begin(), peaks.end(), end);
    if (hi - lo < config.min_peaks) {
      drop(epoch, "fewer than " + std::to_string(config.min_peaks) + " R peaks");
      continue;
    }
    const long long last = std::llround(end * config.fs) - grid_start;
    const long long first = last - static_cast<long long>(length) + 1;
    if (first < 0 || last >= static_cast<long long>(ihr.samples.size())) {
      drop(epoch, "window outside IHR support");
      continue;
    }
    EpochWindow w;
    w.recording_id = recording_id;
    w.epoch_index = epoch;
    w.label = labels[j];
    w.samples.assign(ihr.samples.begin() + first, ihr.samples.begin() + last + 1);
    const double m = median(w.samples);
    for (double& v : w.samples) v -= m;
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace tdahrv
