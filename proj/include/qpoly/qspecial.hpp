#pragma once

// q-gamma and q-polygamma functions evaluated from their product and
// Lambert-type series representations, plus the classical polygamma used as
// the q -> 1 reference.

#include "qpoly/numeric.hpp"

namespace qpoly {

/// Gamma_q(x) from the infinite product. For q > 1 the prefactor
/// (q-1)^{1-x} q^{x(x-1)/2} is applied and the product runs over powers of 1/q.
SeriesValue gamma_q(const QPoint& p, const PrecisionBudget& b = {});

/// psi_q(x) = d/dx ln Gamma_q(x).
///   0<q<1: -ln(1-q) + ln q * sum q^{nx}/(1-q^n)
///   q>1:   -ln(q-1) + ln q * (x - 1/2 - sum q^{-nx}/(1-q^{-n}))
SeriesValue psi_q(const QPoint& p, const PrecisionBudget& b = {});

/// m-th derivative of psi_q, m >= 1. Satisfies (-1)^{m+1} psi_q^{(m)}(x) > 0.
SeriesValue psi_q_deriv(const QPoint& p, int m, const PrecisionBudget& b = {});

/// psi_q^{(order)} with the conventions psi_q^{(0)} = psi_q and
/// psi_q^{(-1)}(x) = -x. Only the value is returned.
Real psi_q_order(const QPoint& p, int order, const PrecisionBudget& b = {});

/// Classical polygamma psi^{(m)}(x) (m = 0 is the digamma function).
Real psi_classical_deriv(const Real& x, int m);

}  // namespace qpoly
