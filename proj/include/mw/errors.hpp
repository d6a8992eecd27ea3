#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mw {

// Malformed input bytes; offset() points at the offending byte.
class parse_error : public std::runtime_error {
public:
  parse_error(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (byte " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

private:
  std::size_t offset_;
};

// Input exceeds a configured size cap.
class capacity_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A configured search budget ran out before an answer was reached.
class resource_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace mw
