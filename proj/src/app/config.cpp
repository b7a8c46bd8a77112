#include "tdahrv/app/config.hpp"

#include <cmath>
#include <limits>

#include "tdahrv/text_format.hpp"

namespace tdahrv::app {

void RunConfig::validate() const {
  if (!(fs > 0.0) || !std::isfinite(fs)) throw UsageError("fs must be positive");
  if (!(epoch_sec > 0.0) || !std::isfinite(epoch_sec)) throw UsageError("epoch length must be positive");
  if (window_epochs < 1) throw UsageError("window must span at least one epoch");
  if (embed_dim < 1) throw UsageError("embedding dimension must be positive");
  if (lag < 1) throw UsageError("lag must be positive");
  if (vr_max_dim < 0 || vr_max_dim > 1) throw UsageError("vr_max_dim must be 0 or 1");
  if (!(rr_low > 0.0) || !(rr_high > rr_low) || !std::isfinite(rr_high))
    throw UsageError("rr bounds must satisfy 0 < rr_low < rr_high");
  const double window = epoch_sec * window_epochs * fs;
  if (std::abs(window - std::round(window)) > 1e-9)
    throw UsageError("window length times fs must be a whole number of samples");
  const double span = static_cast<double>(embed_dim - 1) * static_cast<double>(lag) + 1.0;
  if (span > std::round(window))
    throw UsageError("embedding needs " + std::to_string(static_cast<long long>(span)) +
                     " samples but a window holds " + std::to_string(std::llround(window)));
}

EpochConfig RunConfig::epoch_config() const {
  EpochConfig c;
  c.epoch_sec = epoch_sec;
  c.window_epochs = window_epochs;
  c.fs = fs;
  return c;
}

EmbeddingConfig RunConfig::embedding() const { return {embed_dim, lag, vr_max_dim}; }

RrBounds RunConfig::rr_bounds() const { return {rr_low, rr_high}; }

namespace {

double real_value(const std::string& key, const std::string& value) {
  auto v = parse_real(trim(value));
  if (!v || !std::isfinite(*v)) throw UsageError("invalid value for " + key + ": '" + value + "'");
  return *v;
}

long long integer_value(const std::string& key, const std::string& value, long long lo, long long hi) {
  auto v = parse_integer(trim(value));
  if (!v || *v < lo || *v > hi) throw UsageError("invalid value for " + key + ": '" + value + "'");
  return *v;
}

bool bool_value(const std::string& key, const std::string& value) {
  const auto v = trim(value);
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw UsageError("invalid value for " + key + ": '" + value + "'");
}

}  // namespace

void set_config_value(RunConfig& c, const std::string& key, const std::string& value) {
  constexpr long long kMaxInt = std::numeric_limits<int>::max();
  if (key == "fs") c.fs = real_value(key, value);
  else if (key == "epoch" || key == "epoch_sec") c.epoch_sec = real_value(key, value);
  else if (key == "window" || key == "window_epochs") c.window_epochs = static_cast<int>(integer_value(key, value, 1, kMaxInt));
  else if (key == "dim" || key == "embed_dim") c.embed_dim = static_cast<std::size_t>(integer_value(key, value, 1, kMaxInt));
  else if (key == "lag") c.lag = static_cast<std::size_t>(integer_value(key, value, 1, kMaxInt));
  else if (key == "vr_max_dim") c.vr_max_dim = static_cast<int>(integer_value(key, value, 0, 1));
  else if (key == "seed") c.seed = static_cast<std::uint64_t>(integer_value(key, value, 0, std::numeric_limits<long long>::max()));
  else if (key == "normalize") c.normalize = bool_value(key, value);
  else if (key == "rr_low") c.rr_low = real_value(key, value);
  else if (key == "rr_high") c.rr_high = real_value(key, value);
  else if (key == "threads") c.threads = static_cast<unsigned>(integer_value(key, value, 0, 4096));
  else throw UsageError("unknown configuration key '" + key + "'");
}

void read_config(std::istream& in, const std::string& source, RunConfig& config) {
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto text = trim(line);
    if (text.empty() || text.front() == '#') continue;
    const auto eq = text.find('=');
    if (eq == std::string_view::npos)
      throw UsageError(source + ":" + std::to_string(number) + ": expected key = value");
    const std::string key(trim(text.substr(0, eq)));
    const std::string value(trim(text.substr(eq + 1)));
    try {
      set_config_value(config, key, value);
    } catch (const UsageError& e) {
      throw UsageError(source + ":" + std::to_string(number) + ": " + e.what());
    }
  }
}

}  // namespace tdahrv::app
