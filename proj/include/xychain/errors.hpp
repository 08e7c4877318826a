#pragma once

#include <stdexcept>
#include <string>

namespace xychain {

// Invalid user-facing configuration (bad grid, bad sizes, empty input).
// The CLI maps this to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// A numerical consistency assertion failed (imaginary residue too large,
// expectation overshoot, RDM not positive within tolerance, cache value
// mismatch).  Exit code 3.
class NumericalIntegrityError : public std::runtime_error {
 public:
  explicit NumericalIntegrityError(const std::string& what)
      : std::runtime_error(what) {}
};

// A Bogoliubov mode energy vanished exactly on the selected momentum grid.
// Callers that own a lambda knob may retry with a perturbed value.
class DegenerateModeError : public std::runtime_error {
 public:
  explicit DegenerateModeError(const std::string& what)
      : std::runtime_error(what) {}
};

// Free-fermion pipeline and exact diagonalization disagree.  Exit code 4.
class OracleMismatchError : public std::runtime_error {
 public:
  explicit OracleMismatchError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace xychain
