#pragma once

// Finite-difference functionals F_{r,m,n,s}(x;q,c) and G_m(x;q,c), their
// derivative limits, the classical F, and the structure constants that weight
// the subtracted products.

#include "qpoly/exact.hpp"
#include "qpoly/numeric.hpp"

#include <functional>
#include <optional>
#include <string>

namespace qpoly {

/// Integers r >= m >= n >= s >= 0 with r >= 1.
struct IndexQuad {
  int r = 1;
  int m = 1;
  int n = 1;
  int s = 0;

  bool balanced() const { return r + s == m + n; }
  /// Throws DomainError(OrderingViolation) unless r >= m >= n >= s >= 0, r >= 1.
  void validate() const;
  void validate_balanced() const;
  std::string str() const;

  friend bool operator==(const IndexQuad&, const IndexQuad&) = default;
};

/// Finite-difference step; any nonzero c.
struct FDStep {
  Real c;

  static FDStep make(const Real& c);
};

struct StructureConstants {
  Rational alpha;
  std::optional<Rational> beta;  // only for s >= 1
};

/// alpha = (m-1)!(n-1)!/((r-1)!(s-1)!)  (s >= 1), (m-1)!(n-1)!/(r-1)!  (s = 0)
/// beta  = m! n! / (r! s!)                (s >= 1)
StructureConstants structure_constants(const IndexQuad& idx);

/// m-1 for 0<q<1 and m>=2; 1 otherwise.
int d_const(int m, const Real& q);

using RealFn = std::function<Real(const Real&)>;

/// (f(x+c) - f(x)) / c
Real fwd_diff(const RealFn& f, const Real& x, const FDStep& step);

/// (-1)^{m+n} D_{m-1} D_{n-1} - alpha (-1)^{r+s} D_{r-1} D_{s-1}, where
/// D_k = Delta psi_q^{(k)}(x;c). Requires r+s = m+n; s = 0 is allowed.
Real F_q_fd(const IndexQuad& idx, const QPoint& p, const FDStep& step,
            const PrecisionBudget& b = {});

/// m F_{m+1,m,1,0}(x;q,c) - (-1)^{m+1} d_{m,q} ln q * Delta psi_q^{(m-1)}(x;c)
Real G_q_fd(int m, const QPoint& p, const FDStep& step, const PrecisionBudget& b = {});

/// c -> 0+ limit of G_q_fd:
/// m(-1)^{m+1} psi'_q psi_q^{(m)} + (-1)^{m+1} psi_q^{(m+1)} - (-1)^{m+1} d ln q psi_q^{(m)}
Real G_q_deriv(int m, const QPoint& p, const PrecisionBudget& b = {});

/// (-1)^{m+n} psi_q^{(m)} psi_q^{(n)} - alpha (-1)^{r+s} psi_q^{(r)} psi_q^{(s)}, s >= 1.
Real F_q_deriv(const IndexQuad& idx, const QPoint& p, const PrecisionBudget& b = {});

/// Classical (-1)^{m+n} psi^{(m)} psi^{(n)} - t (-1)^{r+s} psi^{(r)} psi^{(s)}
/// with psi^{(0)} = -1. Balance is not required.
Real F_classic(const IndexQuad& idx, const Real& x, const Real& t);

/// Three sides of the difference chain for psi_q at step c:
///   upper  = (1-q)/(1-q^c) * D^2
///   middle = q^x (psi'_q(x) - psi'_q(x+c))
///   lower  = D^2,   D = psi_q(x+c) - psi_q(x).
/// For 0<q<1 and 0<c<1 one has upper > middle > lower; reversed for c>1.
struct DifferenceChain {
  Real upper;
  Real middle;
  Real lower;
};
DifferenceChain difference_chain(const QPoint& p, const FDStep& step, const PrecisionBudget& b = {});

}  // namespace qpoly
