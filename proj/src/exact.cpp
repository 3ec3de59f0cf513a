#include "qpoly/exact.hpp"

namespace qpoly {

Integer factorial(int n) {
  Integer out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

Integer binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer out = 1;
  for (int i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;
  }
  return out;
}

Integer ipow(long base, int e) {
  Integer out = 1;
  Integer b = base;
  for (int i = 0; i < e; ++i) out *= b;
  return out;
}

}  // namespace qpoly
