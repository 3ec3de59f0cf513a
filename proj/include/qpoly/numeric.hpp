#pragma once

// Shared numeric plumbing: the extended-precision real type, the precision
// budget that governs every analytic evaluation, and the error types.

#include <boost/multiprecision/mpfr.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qpoly {

/// Extended-precision real. Precision is fixed at compile time so that values
/// never depend on process-wide MPFR state.
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<100>,
                                           boost::multiprecision::et_off>;

/// Decimal digits carried by Real; the upper limit for any budget.
inline constexpr int kRealDigits = 100;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class DomainErrorKind {
  InvalidArgument,
  QNearOne,
  OrderingViolation,
  Budget,
};

class DomainError : public Error {
 public:
  DomainError(DomainErrorKind kind, const std::string& what) : Error(what), kind_(kind) {}
  DomainErrorKind kind() const noexcept { return kind_; }

 private:
  DomainErrorKind kind_;
};

class NonConvergence : public Error {
 public:
  using Error::Error;
};

class LengthError : public Error {
 public:
  using Error::Error;
};

/// Relative tolerance, working precision and series-term cap.
struct PrecisionBudget {
  double rel_tol = 1e-20;
  int digits = 50;
  std::int64_t max_terms = 100000;

  /// max(digits, 2*ceil(-log10(rel_tol)) + 10).
  int working_digits() const;

  /// Throws DomainError(Budget) if any invariant fails or the working
  /// precision exceeds kRealDigits.
  void validate() const;

  /// Tighter budget used for the building blocks of composite quantities
  /// (differences of polygamma values lose digits to cancellation).
  PrecisionBudget inner() const;
};

/// Evaluation point of the q-functions: q > 0, |q - 1| >= kQGuard, x > 0.
struct QPoint {
  Real q;
  Real x;

  static constexpr double kQGuard = 1e-4;

  static QPoint make(const Real& q, const Real& x);
  void validate() const;
};

/// Real-valued series result with a certified truncation bound.
struct SeriesValue {
  Real value;
  Real tail_bound;
  std::int64_t terms_used = 0;
};

/// Fixed-point-free decimal rendering with `digits` significant digits.
std::string to_string(const Real& v, int digits = 30);

}  // namespace qpoly
