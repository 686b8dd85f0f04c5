#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace reeblab {

/// Base class for every domain error raised by the library: violated
/// preconditions, malformed input, invalid handle events and so on.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed word, presentation, script or JSON text.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace reeblab
