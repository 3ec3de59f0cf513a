#pragma once
// Independent reference computations used only by the tests. Nothing here
// calls into the series code under test.

#include "qpoly/numeric.hpp"

#include <functional>

namespace oracle {

using qpoly::Real;

// zeta(s) by direct summation to N-1 plus an Euler-Maclaurin tail.
inline Real zeta(int s, int N = 2000) {
  Real sum = 0;
  for (int n = 1; n < N; ++n) sum += pow(Real(n), -s);
  const Real n = N;
  sum += pow(n, 1 - s) / (s - 1) + pow(n, -s) / 2 + Real(s) * pow(n, -s - 1) / 12 -
         Real(s) * (s + 1) * (s + 2) * pow(n, -s - 3) / 720 +
         Real(s) * (s + 1) * (s + 2) * (s + 3) * (s + 4) * pow(n, -s - 5) / 30240;
  return sum;
}

// Gamma_q(x), 0 < q < 1, from the raw product with a fixed number of factors.
inline Real gamma_q_product(const Real& q, const Real& x, int factors) {
  Real prod = pow(1 - q, 1 - x);
  Real qn = q;  // q^{n}
  for (int n = 0; n < factors; ++n) {
    prod *= (1 - qn) / (1 - qn * pow(q, x - 1));
    qn *= q;
  }
  return prod;
}

// [n]_q! = prod_{k=1}^n (1-q^k)/(1-q).
inline Real q_factorial(const Real& q, int n) {
  Real out = 1;
  for (int k = 1; k <= n; ++k) out *= (1 - pow(q, k)) / (1 - q);
  return out;
}

// Symmetric difference quotient with one Richardson step.
inline Real derivative(const std::function<Real(const Real&)>& f, const Real& x, const Real& h) {
  auto d = [&](const Real& s) { return (f(x + s) - f(x - s)) / (2 * s); };
  return (4 * d(h / 2) - d(h)) / 3;
}

inline Real rel_err(const Real& got, const Real& want) {
  return want == 0 ? abs(got) : abs(got - want) / abs(want);
}

}  // namespace oracle
