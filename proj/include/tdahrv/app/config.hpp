#pragma once

#include <cstdint>
#include <istream>
#include <stdexcept>
#include <string>

#include "tdahrv/features.hpp"
#include "tdahrv/hrv.hpp"

namespace tdahrv::app {

/// Invalid configuration or command-line values (exit code 1).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  double fs = 4.0;
  double epoch_sec = 30.0;
  int window_epochs = 3;
  std::size_t embed_dim = 120;
  std::size_t lag = 1;
  int vr_max_dim = 1;
  std::uint64_t seed = 1;
  bool normalize = true;
  double rr_low = 0.6;
  double rr_high = 1.8;
  unsigned threads = 1;

  /// Throws UsageError unless every field is in range.
  void validate() const;

  EpochConfig epoch_config() const;
  EmbeddingConfig embedding() const;
  RrBounds rr_bounds() const;
};

/// Sets one field from its key (fs, epoch, window, dim, lag, vr_max_dim,
/// seed, normalize, rr_low, rr_high, threads). Throws UsageError on an
/// unknown key or unparsable value.
void set_config_value(RunConfig& config, const std::string& key, const std::string& value);

/// Reads `key = value` lines into `config`; blank lines and lines starting
/// with '#' are ignored.
void read_config(std::istream& in, const std::string& source, RunConfig& config);

}  // namespace tdahrv::app
