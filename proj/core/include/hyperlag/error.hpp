#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hyperlag {

// Bad arguments or malformed data supplied by the caller.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Text that does not conform to one of the file formats.
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& detail, const std::string& source = {})
      : InputError((source.empty() ? "" : source + ": ") + "line " + std::to_string(line) + ": " + detail),
        line_(line),
        detail_(detail) {}

  std::size_t line() const noexcept { return line_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t line_;
  std::string detail_;
};

// A configured size cap (edge cap, tower level cap) would be exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hyperlag
