#pragma once

#include <stdexcept>
#include <string>

namespace qcpoly {

/// Failure while reading a text input (circuit file or polynomial listing).
/// The line number is 1-based and already baked into what().
class ParseError : public std::runtime_error {
  public:
    ParseError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

    int line() const { return line_; }

  private:
    int line_;
};

/// A configured cap or budget was exceeded (enumeration size, basis size,
/// pair count, matrix dimension). The message says which knob to raise.
class ResourceLimitError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace qcpoly
