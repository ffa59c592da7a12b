#ifndef LEFDEC_ERRORS_HPP
#define LEFDEC_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lefdec {

/// Base class for every error the engine raises on purpose.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Input data failed a validation invariant. `invariant()` names it.
class ValidationError : public Error {
 public:
  ValidationError(std::string invariant, const std::string& detail)
      : Error(invariant + ": " + detail), invariant_(std::move(invariant)) {}
  const std::string& invariant() const { return invariant_; }

 private:
  std::string invariant_;
};

class NotInvertible : public Error {
 public:
  NotInvertible() : Error("matrix is not invertible") {}
};

class NotAlternating : public Error {
 public:
  NotAlternating() : Error("pairing matrix is not alternating") {}
};

class NotWedgeCompatible : public Error {
 public:
  NotWedgeCompatible()
      : Error("operator does not commute with the antisymmetrizer") {}
};

/// A requested operator space exceeds the configured size budget.
class SizeBudgetExceeded : public Error {
 public:
  SizeBudgetExceeded(std::int64_t dim, std::int64_t budget)
      : Error("operator dimension " + std::to_string(dim) +
              " exceeds budget " + std::to_string(budget)),
        dim_(dim),
        budget_(budget) {}
  std::int64_t dim() const { return dim_; }
  std::int64_t budget() const { return budget_; }

 private:
  std::int64_t dim_;
  std::int64_t budget_;
};

/// The coefficient field is too small to split a minimal polynomial into
/// distinct linear factors. `must_split()` is the offending factor, as a
/// human-readable polynomial in y.
class SplittingFieldRequired : public Error {
 public:
  explicit SplittingFieldRequired(std::string poly)
      : Error("field extension required to split " + poly),
        must_split_(std::move(poly)) {}
  const std::string& must_split() const { return must_split_; }

 private:
  std::string must_split_;
};

/// Random central elements failed to separate the center after the
/// configured number of retries.
class CenterNotSeparated : public Error {
 public:
  explicit CenterNotSeparated(int retries)
      : Error("center not separated after " + std::to_string(retries) +
              " retries") {}
};

class InvalidParams : public Error {
 public:
  explicit InvalidParams(const std::string& what) : Error(what) {}
};

}  // namespace lefdec

#endif
