#pragma once

#include <stdexcept>
#include <string>

namespace kfactor {

/// Precondition or parameter violation (bad n/k, overlapping sets, ...).
class param_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exhaustive routine was asked to run past its configured size guard.
class guard_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Seeded sampler could not satisfy its constraints within the retry budget.
class sampler_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text; `offset` is the byte position of the defect.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (byte offset " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace kfactor
