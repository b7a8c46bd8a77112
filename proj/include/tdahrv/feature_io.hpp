#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "tdahrv/features.hpp"

namespace tdahrv {

std::string feature_csv_header();

void write_features_csv(std::ostream& out, std::span<const FeatureVector> rows);

/// Throws ParseError naming `source` and the line on malformed input.
std::vector<FeatureVector> read_features_csv(std::istream& in, const std::string& source);

/// One R-peak time per line, strictly ascending.
std::vector<double> read_peaks(std::istream& in, const std::string& source);

/// One integer label per line (0, 1, 2 or -1).
std::vector<int> read_labels(std::istream& in, const std::string& source);

}  // namespace tdahrv
