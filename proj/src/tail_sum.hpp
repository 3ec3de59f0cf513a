#pragma once

#include "qpoly/numeric.hpp"

#include <cstdint>

namespace qpoly::detail {

// Sums value = offset + scale * sum_{n>=1} term(n) for a positive series whose
// successive-term ratios past index n are all bounded by ratio_bound(n) < 1.
// After including term N the remainder is at most term_N * rho / (1 - rho),
// so stopping when |scale| * remainder <= rel_tol * |value| certifies the
// relative error of the returned value.
//
// TermFn yields term(n) for n = 1, 2, ... in order (stateful recurrences allowed).
template <class TermFn, class RatioFn>
SeriesValue sum_geometric_tail(const Real& offset, const Real& scale, TermFn&& next_term,
                               RatioFn&& ratio_bound, const PrecisionBudget& b) {
  const Real tol = Real(b.rel_tol);
  const Real abs_scale = abs(scale);
  Real partial = 0;
  for (std::int64_t n = 1; n <= b.max_terms; ++n) {
    const Real t = next_term(n);
    partial += t;
    const Real rho = ratio_bound(n);
    if (rho >= 1) continue;
    const Real tail = abs_scale * t * rho / (1 - rho);
    const Real value = offset + scale * partial;
    if (tail <= tol * abs(value)) return SeriesValue{value, tail, n};
  }
  throw NonConvergence("series did not reach rel_tol=" + std::to_string(b.rel_tol) + " within " +
                       std::to_string(b.max_terms) + " terms");
}

}  // namespace qpoly::detail
