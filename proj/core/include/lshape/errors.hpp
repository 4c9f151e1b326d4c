#pragma once

#include <stdexcept>
#include <string>

namespace lshape {

/// Argument outside the domain an operation is defined on.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Evaluation at a true singularity of the function (not a removable one).
class SingularityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An iterative method failed to reach its tolerance. Carries the best
/// value it had found so callers can decide whether to keep it.
class NumericError : public std::runtime_error {
 public:
  NumericError(const std::string& what, double best_value)
      : std::runtime_error(what), best_value_(best_value) {}

  [[nodiscard]] double best_value() const noexcept { return best_value_; }

 private:
  double best_value_;
};

/// Two nodes of a family coincide exactly.
class DuplicateNodeError : public std::runtime_error {
 public:
  DuplicateNodeError(int first, int second)
      : std::runtime_error("duplicate nodes at indices " + std::to_string(first) +
                           " and " + std::to_string(second)),
        first_(first),
        second_(second) {}

  [[nodiscard]] int first() const noexcept { return first_; }
  [[nodiscard]] int second() const noexcept { return second_; }

 private:
  int first_;
  int second_;
};

/// Regression could not be carried out (too few points, singular design).
class FitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lshape
