#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ghlab {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using Index = Eigen::Index;

/// Seed used when neither the caller nor GHLAB_SEED supplies one.
inline constexpr std::uint64_t kDefaultSeed = 20240229;

/// A precondition on an operation's arguments was violated.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A constructed object failed its invariants (metric axioms, dimensions).
class ValidationError : public InputError {
 public:
  using InputError::InputError;
};

/// Malformed serialized input. `where()` names the offending location.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::string where)
      : std::runtime_error(what + " (at " + where + ")"), where_(std::move(where)) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

/// Work limits for the multistart searches.
struct SearchBudget {
  int starts = 16;
  int iterations = 1500;

  void validate() const {
    if (starts <= 0 || iterations <= 0) throw InputError("search budget must be positive");
  }
};

}  // namespace ghlab
