#ifndef CGEO_ERRORS_HPP
#define CGEO_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cgeo {

/// Malformed expression text. Carries the byte offset of the offending token.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

/// Invalid input to an operation: chart mismatch, division by zero,
/// degenerate Gram matrix, point off the relation variety, ...
class DomainError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A postcondition the engine guarantees failed to hold. Indicates a bug.
class EngineError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace cgeo

#endif
