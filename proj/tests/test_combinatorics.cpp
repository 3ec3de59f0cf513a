#include "qpoly/combinatorics.hpp"

#include <doctest.h>

using namespace qpoly;

namespace {

Integer brute_pow(long b, int e) {
  Integer out = 1;
  for (int i = 0; i < e; ++i) out *= b;
  return out;  // 0^0 = 1 falls out of the empty product
}

Rational brute_alpha(const IndexQuad& q) {
  auto fact = [](int n) {
    Integer f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
  };
  return Rational(fact(q.m - 1) * fact(q.n - 1), fact(q.r - 1) * fact(q.s - 1));
}

}  // namespace

TEST_CASE("factorial, binomial, ipow") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(20) == Integer("2432902008176640000"));
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(5, 6) == 0);
  CHECK(ipow(0, 0) == 1);
  CHECK(ipow(0, 3) == 0);
  CHECK(ipow(-2, 5) == -32);
  for (int n = 1; n <= 40; ++n)
    for (int k = 1; k <= n; ++k) CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("sequences against direct sums") {
  for (int m = 1; m <= 5; ++m)
    for (int n = 1; n <= m; ++n)
      for (long k = 1; k <= 30; ++k) {
        Integer a = 0;
        for (long j = 1; j <= k; ++j) a += brute_pow(j, m - 1) * brute_pow(k - j, n - 1);
        CHECK(seq_a(m, n, k) == a);
      }
  for (int t = 0; t <= 4; ++t)
    for (int s = 1; s <= 4; ++s)
      for (long k = 1; k <= 20; ++k) {
        Integer c = 0;
        for (long j = 0; j < k; ++j) c += brute_pow(j, t) * brute_pow(k - j, s);
        CHECK(seq_c(t, s, k) == c);
      }
  const IndexQuad idx{5, 4, 3, 2};
  for (long k = 1; k <= 30; ++k) {
    Rational b = 0;
    for (long j = 1; j <= k; ++j) b += Rational(brute_pow(k - j, idx.r - 1) * brute_pow(j, idx.s - 1));
    CHECK(seq_b(idx, k) == brute_alpha(idx) * b);
  }
}

TEST_CASE("symmetrized T-sum equals a - b") {
  for (int r = 2; r <= 6; ++r)
    for (int m = 2; m <= r; ++m)
      for (int n = 2; n <= m; ++n) {
        const int s = m + n - r;
        if (s < 1 || s > n) continue;
        const IndexQuad idx{r, m, n, s};
        for (long k = 1; k <= 40; ++k) CHECK(T_symmetric_sum(idx, k) == Rational(seq_a(m, n, k)) - seq_b(idx, k));
      }
}

TEST_CASE("sequence containers and forward differences") {
  const ExactSeq a = make_seq_a(3, 2, 10);
  CHECK(a.size() == 10);
  CHECK(a.at(4) == Rational(seq_a(3, 2, 4)));
  const ExactSeq d1 = seq_forward_diff(a, 1);
  CHECK(d1.size() == 9);
  CHECK(d1.at(1) == a.at(2) - a.at(1));
  const ExactSeq d3 = seq_forward_diff(a, 3);
  CHECK(d3.at(2) == a.at(5) - 3 * a.at(4) + 3 * a.at(3) - a.at(2));
  // a(3,2)_k is a quartic in k with leading coefficient 1/12
  const ExactSeq d4 = seq_forward_diff(a, 4);
  for (std::size_t i = 1; i <= d4.size(); ++i) CHECK(d4.at(static_cast<long>(i)) == 2);
  CHECK_THROWS_AS(seq_forward_diff(a, 10), LengthError);
  CHECK(seq_forward_diff(a, 0).values == a.values);
}

TEST_CASE("D(r,t)") {
  for (int r = 1; r <= 10; ++r) CHECK(D_value(r, 1) == 0);
  CHECK(D_value(2, 2) == Rational(4 + 4 - 2) - Rational(2 * 2, 6) * 8);
  for (int r = 2; r <= 10; ++r)
    for (int t = 2; t <= r; ++t) CHECK(D_value(r, t) >= 0);
}

TEST_CASE("regime labels") {
  CHECK(conv_regime({3, 2, 2, 1}) == LemmaRegime::ProvenLemma1);
  CHECK(conv_regime({6, 4, 4, 2}) == LemmaRegime::ProvenLemma2);
  CHECK(conv_regime({5, 4, 4, 3}) == LemmaRegime::ProvenLemma2);
  CHECK(conv_regime({6, 5, 4, 3}) == LemmaRegime::ProvenLemma2);
  CHECK(conv_regime({7, 5, 5, 3}) == LemmaRegime::Empirical);
}

TEST_CASE("convolution inequality sweep, small range") {
  const LemmaReport rep = verify_conv_inequality(6, 80);
  CHECK(rep.pass());
  CHECK(rep.checks > 0);
  CHECK(rep.observation_count == 0);
  CHECK(rep.regime_counts.count("Empirical") == 0);

  const LemmaReport wide = verify_conv_inequality(6, 80, true);
  CHECK(wide.pass());
  CHECK(wide.checks > rep.checks);
  CHECK(wide.regime_counts.count("Empirical") == 1);
}

TEST_CASE("proof steps") {
  CHECK(verify_proof_steps(0, 3, 4, 60).pass());
  CHECK(verify_proof_steps(1, 4, 3, 60).pass());
  const LemmaReport t3 = verify_proof_steps(2, 3, 4, 60);
  CHECK(t3.pass());
  CHECK(t3.equality_count > 0);
  // the reduced step is only claimed for T = 3 when s = 2
  const LemmaReport t5 = verify_proof_steps(2, 5, 5, 60);
  CHECK(t5.pass());
  CHECK(t5.observation_count > 0);
}

TEST_CASE("power-sum bounds") {
  const LemmaReport rep = verify_power_sum_bounds(6, 40);
  CHECK(rep.pass());
  bool saw_m1 = false, saw_m3 = false;
  for (const Witness& w : rep.equalities) {
    if (w.check != "power-sum-equality") continue;
    for (const auto& [name, v] : w.params)
      if (name == "m") {
        saw_m1 = saw_m1 || v == 1;
        saw_m3 = saw_m3 || v == 3;
      }
  }
  CHECK(saw_m1);
  CHECK_FALSE(saw_m3);
}
