#include "tdahrv/feature_io.hpp"

#include <cmath>
#include <istream>
#include <ostream>

#include "tdahrv/errors.hpp"
#include "tdahrv/text_format.hpp"

namespace tdahrv {

std::string feature_csv_header() {
  std::string h = "recording_id,epoch,label";
  for (const char* block : {"ps_sub_", "ps_vr0_", "ps_vr1_"})
    for (std::size_t k = 1; k <= kPsSize; ++k) h += std::string(",") + block + std::to_string(k);
  return h;
}

void write_features_csv(std::ostream& out, std::span<const FeatureVector> rows) {
  out << feature_csv_header() << '\n';
  for (const auto& r : rows) {
    out << r.recording_id << ',' << r.epoch_index << ',' << r.label;
    for (double v : r.features) out << ',' << format_real(v);
    out << '\n';
  }
}

std::vector<FeatureVector> read_features_csv(std::istream& in, const std::string& source) {
  std::vector<FeatureVector> rows;
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    const auto text = trim(line);
    if (text.empty()) continue;
    if (!header_seen) {
      if (text != feature_csv_header()) throw ParseError(source, line_no, "unexpected feature header");
      header_seen = true;
      continue;
    }
    const auto fields = split(text, ',');
    if (fields.size() != 3 + kFeatureCount)
      throw ParseError(source, line_no,
                       "expected " + std::to_string(3 + kFeatureCount) + " fields, got " +
                           std::to_string(fields.size()));
    FeatureVector r;
    r.recording_id = std::string(trim(fields[0]));
    if (r.recording_id.empty()) throw ParseError(source, line_no, "empty recording id");
    const auto epoch = parse_integer(fields[1]);
    const auto label = parse_integer(fields[2]);
    if (!epoch || *epoch < 0) throw ParseError(source, line_no, "invalid epoch index");
    if (!label || *label < -1 || *label > 2) throw ParseError(source, line_no, "invalid label");
    r.epoch_index = static_cast<int>(*epoch);
    r.label = static_cast<int>(*label);
    for (std::size_t k = 0; k < kFeatureCount; ++k) {
      const auto v = parse_real(fields[3 + k]);
      if (!v || !std::isfinite(*v))
        throw ParseError(source, line_no, "feature " + std::to_string(k + 1) + " is not a finite number");
      r.features[k] = *v;
    }
    rows.push_back(std::move(r));
  }
  if (!header_seen) throw ParseError(source, line_no, "missing feature header");
  return rows;
}

std::vector<double> read_peaks(std::istream& in, const std::string& source) {
  std::vector<double> peaks;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto text = trim(line);
    if (text.empty() || text.front() == '#') continue;
    const auto v = parse_real(text);
    if (!v || !std::isfinite(*v) || *v < 0.0)
      throw ParseError(source, line_no, "invalid R-peak time '" + std::string(text) + "'");
    if (!peaks.empty() && !(*v > peaks.back()))
      throw ParseError(source, line_no, "R-peak times must be strictly ascending");
    peaks.push_back(*v);
  }
  return peaks;
}

std::vector<int> read_labels(std::istream& in, const std::string& source) {
  std::vector<int> labels;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto text = trim(line);
    if (text.empty()) throw ParseError(source, line_no, "empty label line");
    const auto v = parse_integer(text);
    if (!v || *v < -1 || *v > 2)
      throw ParseError(source, line_no, "invalid label '" + std::string(text) + "'");
    labels.push_back(static_cast<int>(*v));
  }
  return labels;
}

}  // namespace tdahrv
