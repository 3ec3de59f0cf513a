#include "qpoly/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qpoly {

int PrecisionBudget::working_digits() const {
  const int needed = 2 * static_cast<int>(std::ceil(-std::log10(rel_tol))) + 10;
  return std::max(digits, needed);
}

void PrecisionBudget::validate() const {
  if (!(rel_tol > 0) || !std::isfinite(rel_tol))
    throw DomainError(DomainErrorKind::Budget, "rel_tol must be positive and finite");
  if (digits < 15) throw DomainError(DomainErrorKind::Budget, "digits must be >= 15");
  if (max_terms < 1) throw DomainError(DomainErrorKind::Budget, "max_terms must be >= 1");
  if (working_digits() > kRealDigits)
    throw DomainError(DomainErrorKind::Budget,
                      "budget needs " + std::to_string(working_digits()) +
                          " working digits; at most " + std::to_string(kRealDigits) + " available");
}

PrecisionBudget PrecisionBudget::inner() const {
  PrecisionBudget tight = *this;
  // Ten extra digits, but never past what Real can hold with headroom.
  tight.rel_tol = std::max(rel_tol * 1e-10, 1e-45);
  tight.digits = std::max(digits, tight.working_digits());
  return tight;
}

QPoint QPoint::make(const Real& q, const Real& x) {
  QPoint p{q, x};
  p.validate();
  return p;
}

void QPoint::validate() const {
  if (!(q > 0)) throw DomainError(DomainErrorKind::InvalidArgument, "q must be positive");
  // The guard is inclusive; the slack keeps decimal inputs such as 0.9999,
  // which round to just inside the boundary, on the accepted side.
  if (abs(q - 1) < Real(kQGuard) * Real(1 - 1e-9))
    throw DomainError(DomainErrorKind::QNearOne, "|q - 1| below guard " + std::to_string(kQGuard));
  if (!(x > 0)) throw DomainError(DomainErrorKind::InvalidArgument, "x must be positive");
}

std::string to_string(const Real& v, int digits) {
  std::ostringstream os;
  os << std::setprecision(digits) << v;
  return os.str();
}

}  // namespace qpoly
