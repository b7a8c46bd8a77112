#pragma once

#include <stdexcept>
#include <string>

namespace tdahrv {

// Malformed input files. The message carries "<source>:<line>: ..." when a
// line number is known.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& what)
      : std::runtime_error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_ = 0;
};

}  // namespace tdahrv
