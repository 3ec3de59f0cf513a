#pragma once

// Exact arithmetic for the power-convolution sequences a, b, c, the
// symmetrized T-terms, forward differences of sequences, and sweeps of the
// inequalities built from them. No floating point is used here; 0^0 = 1 and
// empty sums are 0 throughout.

#include "qpoly/exact.hpp"
#include "qpoly/functionals.hpp"
#include "qpoly/report.hpp"

#include <string>
#include <vector>

namespace qpoly {

/// Values indexed from k = 1 (values[0] holds k = 1).
struct ExactSeq {
  std::vector<Rational> values;
  std::string descriptor;

  std::size_t size() const { return values.size(); }
  const Rational& at(long k) const { return values.at(static_cast<std::size_t>(k - 1)); }
};

/// a(m,n)_k = sum_{j=1}^k j^{m-1} (k-j)^{n-1}
Integer seq_a(int m, int n, long k);

/// b(r,m,n,s)_k = alpha_{r,m,n,s} sum_{j=1}^k (k-j)^{r-1} j^{s-1}; balanced, s >= 1.
Rational seq_b(const IndexQuad& idx, long k);

/// c(t,s)_k = sum_{j=0}^{k-1} j^t (k-j)^s
Integer seq_c(int t, int s, long k);

/// T(j;k) = j^{m-1}(k-j)^{n-1} + (k-j)^{m-1}j^{n-1}
///          - alpha (j^{r-1}(k-j)^{s-1} + (k-j)^{r-1}j^{s-1}),  1 <= j <= k/2.
Rational T_term(const IndexQuad& idx, long j, long k);

/// sum_{j=1}^{floor(k/2)} T(j;k) (1 - [2j = k]/2)
Rational T_symmetric_sum(const IndexQuad& idx, long k);

ExactSeq make_seq_a(int m, int n, long k_max);
ExactSeq make_seq_b(const IndexQuad& idx, long k_max);
ExactSeq make_seq_c(int t, int s, long k_max);

/// Iterated forward difference (Delta x)_k = x_{k+1} - x_k. Throws LengthError
/// unless seq.size() > order.
ExactSeq seq_forward_diff(const ExactSeq& seq, int order);

/// Regime that covers a balanced quad with s >= 1: s = 1 -> ProvenLemma1,
/// s = 2 or (s = 3, n = 4) -> ProvenLemma2, otherwise Empirical.
LemmaRegime conv_regime(const IndexQuad& idx);

/// a(m,n)_k >= b(r,m,n,s)_k over balanced quads with r <= r_max and k <= k_max.
/// Empirical quads are swept only when include_empirical is set; their
/// failures become observations, not violations.
LemmaReport verify_conv_inequality(int r_max, long k_max, bool include_empirical = false);

/// Difference-operator steps behind the convolution inequality, in shifted
/// notation A = a(r+1,T+1), B = b(r+T-s+1, r+1, T+1, s+1):
///   Delta^{s+1} A >= Delta^{s+1} B for k <= k_max;
///   (Delta^i A)_1 >= (Delta^i B)_1 for 1 <= i <= s+1;
///   the reduced inequality with sums over t < s (s >= 1);
///   the binomial recursions for Delta^{i+1} A and Delta^{i+1} B (exact equality);
///   the closed forms used for s = 0, 1, 2.
LemmaReport verify_proof_steps(int s, int T, int r, long k_max);

/// Power-sum bounds:
///   m sum_{j=1}^{n-1} (n-j)^{m-1} >= n^m - (m-1) n^{m-1} - [m=1] (equality for m = 1, 2);
///   (r+1) sum_{i=1}^n i^r >= (n+1)^{r+1} - r (n+1)^r;
///   D(r,t) = 2^r + 2^t - 2 - r! t!/(r+t-1)! 2^{r+t-1} >= 0 (zero at t = 1);
///   ((n+1)^{r+1} - n^{r+1})/(r+1) <= (n^r + (n+1)^r)/2 <= r/(r+1) (n+1)^r + n^r/(r+1).
LemmaReport verify_power_sum_bounds(int m_max, int n_max);

/// D(r,t) exactly.
Rational D_value(int r, int t);

}  // namespace qpoly
