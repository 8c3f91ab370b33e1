#pragma once

#include <stdexcept>
#include <string>

namespace modesplit {

/// Base of every error raised by the library. `code()` is a short
/// machine-readable identifier that the CLI prints verbatim.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  [[nodiscard]] const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

class InvalidInput : public Error {
 public:
  explicit InvalidInput(const std::string& message) : Error("invalid_input", message) {}
};

class GridMismatch : public Error {
 public:
  explicit GridMismatch(const std::string& message) : Error("grid_mismatch", message) {}
};

class SingularParameter : public Error {
 public:
  explicit SingularParameter(const std::string& message)
      : Error("singular_parameter", message) {}
};

class NumericalFailure : public Error {
 public:
  explicit NumericalFailure(const std::string& message)
      : Error("numerical_failure", message) {}
};

class CflViolation : public Error {
 public:
  explicit CflViolation(const std::string& message) : Error("cfl_violation", message) {}
};

/// Static-stability violation: nu <= 0 somewhere. Carries the offending minimum.
class UnstableBackground : public Error {
 public:
  UnstableBackground(double min_nu, double z_at_min, const std::string& message)
      : Error("unstable_background", message), min_nu_(min_nu), z_at_min_(z_at_min) {}

  [[nodiscard]] double min_nu() const noexcept { return min_nu_; }
  [[nodiscard]] double z_at_min() const noexcept { return z_at_min_; }

 private:
  double min_nu_;
  double z_at_min_;
};

}  // namespace modesplit
