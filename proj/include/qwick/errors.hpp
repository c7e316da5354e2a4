#ifndef QWICK_ERRORS_HPP
#define QWICK_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qwick {

/// Malformed word or diagram text; `offset()` is a byte offset into the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, const std::string& message);
  [[nodiscard]] std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// A diagram that is not a valid Feynman diagram on its word.
class InvalidDiagram : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Argument outside the mathematical domain of an operation (e.g. S_q(n,k) with k > n).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Diagram enumeration would exceed the configured materialization cap.
class LimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qwick

#endif  // QWICK_ERRORS_HPP
