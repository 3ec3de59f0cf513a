#include "qpoly/qspecial.hpp"

#include "tail_sum.hpp"

#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/polygamma.hpp>

namespace qpoly {
namespace {

// Base of the geometric series: q itself for 0<q<1, 1/q for q>1.
Real series_base(const Real& q) { return q < 1 ? q : Real(1 / q); }

Real int_pow(const Real& v, int e) {
  Real out = 1;
  for (int i = 0; i < e; ++i) out *= v;
  return out;
}

// offset + scale * sum_{n>=1} n^m base^{nx} / (1 - base^n)
SeriesValue lambert_series(const Real& base, const Real& x, int m, const Real& offset,
                           const Real& scale, const PrecisionBudget& b) {
  const Real bx = pow(base, x);
  Real bnx = 1;  // base^{nx}
  Real bn = 1;   // base^n
  auto term = [&](std::int64_t n) {
    bnx *= bx;
    bn *= base;
    return int_pow(Real(n), m) * bnx / (1 - bn);
  };
  // Successive ratio is ((n+1)/n)^m base^x (1-base^n)/(1-base^{n+1}); the last
  // factor is below one and the first decreases in n.
  auto ratio = [&](std::int64_t n) { return int_pow(Real(n + 1) / n, m) * bx; };
  return detail::sum_geometric_tail(offset, scale, term, ratio, b);
}

}  // namespace

SeriesValue gamma_q(const QPoint& p, const PrecisionBudget& b) {
  p.validate();
  b.validate();
  const Real& q = p.q;
  const Real& x = p.x;
  const Real base = series_base(q);
  const Real lnq = log(q);

  Real log_prefix;
  if (q < 1)
    log_prefix = (1 - x) * log1p(-q);
  else
    log_prefix = (1 - x) * log(q - 1) + x * (x - 1) / 2 * lnq;

  // ln prod_{n>=0} (1 - base^{n+1}) / (1 - base^{n+x})
  const Real bx = pow(base, x);
  const Real gap = abs(base - bx);
  const Real target = log1p(Real(b.rel_tol));
  Real bn = 1;  // base^n
  Real log_sum = 0;
  for (std::int64_t n = 0; n < b.max_terms; ++n) {
    log_sum += log1p(-bn * base) - log1p(-bn * bx);
    bn *= base;
    // Remainder over indices >= n+1: |ln(1-u) - ln(1-v)| <= |u-v| / (1 - max(u,v)).
    const Real largest = bn * (base > bx ? base : bx);
    const Real tail = bn * gap / ((1 - base) * (1 - largest));
    if (tail <= target) {
      const Real value = exp(log_prefix + log_sum);
      return SeriesValue{value, value * expm1(tail), n + 1};
    }
  }
  throw NonConvergence("gamma_q product did not converge within max_terms");
}

SeriesValue psi_q(const QPoint& p, const PrecisionBudget& b) {
  p.validate();
  b.validate();
  const Real lnq = log(p.q);
  const Real base = series_base(p.q);
  if (p.q < 1) return lambert_series(base, p.x, 0, -log1p(-p.q), lnq, b);
  const Real offset = -log(p.q - 1) + lnq * (p.x - Real(0.5));
  return lambert_series(base, p.x, 0, offset, -lnq, b);
}

SeriesValue psi_q_deriv(const QPoint& p, int m, const PrecisionBudget& b) {
  if (m < 1) throw DomainError(DomainErrorKind::InvalidArgument, "psi_q_deriv needs m >= 1");
  p.validate();
  b.validate();
  const Real lnq = log(p.q);
  const Real base = series_base(p.q);
  const Real lpow = int_pow(lnq, m + 1);
  if (p.q < 1) return lambert_series(base, p.x, m, 0, lpow, b);
  const Real offset = m == 1 ? lnq : Real(0);
  const Real scale = (m % 2 == 1) ? lpow : Real(-lpow);
  return lambert_series(base, p.x, m, offset, scale, b);
}

Real psi_q_order(const QPoint& p, int order, const PrecisionBudget& b) {
  if (order < -1) throw DomainError(DomainErrorKind::InvalidArgument, "order must be >= -1");
  if (order == -1) {
    p.validate();
    return -p.x;
  }
  if (order == 0) return psi_q(p, b).value;
  return psi_q_deriv(p, order, b).value;
}

Real psi_classical_deriv(const Real& x, int m) {
  if (!(x > 0)) throw DomainError(DomainErrorKind::InvalidArgument, "x must be positive");
  if (m < 0) throw DomainError(DomainErrorKind::InvalidArgument, "m must be >= 0");
  if (m == 0) return boost::math::digamma(x);
  return boost::math::polygamma(m, x);
}

}  // namespace qpoly
