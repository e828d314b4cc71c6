#pragma once

#include <stdexcept>
#include <string>

namespace fpf {

/// Mismatched lengths, rings, or non-homogeneous input where homogeneity is required.
class structural_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Text that does not follow the polynomial grammar or the problem-file schema.
/// `line` is 1-based when known, 0 otherwise.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// The ideal does not have finite colength; `variable` has no pure power in the initial ideal.
class colength_error : public std::runtime_error {
 public:
  colength_error(const std::string& what, std::string variable)
      : std::runtime_error(what), variable_(std::move(variable)) {}
  const std::string& variable() const noexcept { return variable_; }

 private:
  std::string variable_;
};

/// A constructor contract or a computed identity failed.
class invariant_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The request is outside what the library computes (e.g. density tables in dimension 0).
class unsupported_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fpf
