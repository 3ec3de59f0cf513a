#pragma once

// Analytic inequalities behind the weight comparison: the log-ratio function
// h(z;y,c) = ln((1-y^{zc})/(1-y^z)), its second derivative, the ratio
// inequality it implies, and the monotone weight u (ln u)^2 / (1-u)^2.

#include "qpoly/numeric.hpp"
#include "qpoly/report.hpp"

namespace qpoly {

/// y in (0,1), c > 0 and c != 1.
struct RatioParams {
  Real y;
  Real c;

  static RatioParams make(const Real& y, const Real& c);
  void validate() const;
};

struct HValue {
  Real h;
  Real h_dd;
};

/// h(z) and h''(z) = (ln y)^2 y^z/(1-y^z)^2 - (ln y^c)^2 y^{zc}/(1-y^{zc})^2.
/// h'' <= 0 for c < 1 and >= 0 for c > 1.
HValue h_second_deriv(const Real& z, const RatioParams& pr, const PrecisionBudget& b = {});

/// Ratio inequality for 1 <= j <= n-1 (q > 1; 0<q<1 is mapped to 1/q):
///   (1-q^{-jc})(1-q^{-(n-j)c}) / ((1-q^{-j})(1-q^{-(n-j)}))  >=  c (1-q^{-nc}) / (1-q^{-n})
/// reversed for c > 1, equality for c = 1. Also checks that the left side is
/// nondecreasing in j on 1..n/2 (nonincreasing for c > 1).
LemmaReport verify_ratio_ineq(int n, const Real& q, const Real& c, const PrecisionBudget& b = {});

/// u (ln u)^2 / (1-u)^2, increasing on (0,1).
Real weight_u(const Real& u);

/// Sign dichotomy of h'' over a grid of (y, c, z).
LemmaReport verify_h_convexity(const std::vector<Real>& ys, const std::vector<Real>& cs,
                               const std::vector<Real>& zs, const PrecisionBudget& b = {});

/// Strict increase of weight_u on `points` equally spaced interior points of (0,1).
LemmaReport verify_weight_monotone(int points);

}  // namespace qpoly
