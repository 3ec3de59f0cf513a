#include "qpoly/combinatorics.hpp"

#include <algorithm>
#include <functional>

namespace qpoly {
namespace {

// Table of base^e for 0 <= base <= max_base, 0 <= e <= max_exp (0^0 = 1).
class PowerTable {
 public:
  PowerTable(long max_base, int max_exp) : max_exp_(max_exp) {
    table_.resize(static_cast<std::size_t>((max_base + 1) * (max_exp + 1)));
    for (long b = 0; b <= max_base; ++b) {
      Integer v = 1;
      for (int e = 0; e <= max_exp; ++e) {
        table_[index(b, e)] = v;
        v *= b;
      }
    }
  }
  const Integer& operator()(long base, int e) const { return table_[index(base, e)]; }

 private:
  std::size_t index(long b, int e) const { return static_cast<std::size_t>(b * (max_exp_ + 1) + e); }
  int max_exp_;
  std::vector<Integer> table_;
};

// (M-1)!(N-1)!/((R-1)!(S-1)!) without ordering requirements, S >= 1.
Rational alpha_raw(int R, int M, int N, int S) {
  return Rational(factorial(M - 1) * factorial(N - 1), factorial(R - 1) * factorial(S - 1));
}

// sum_{j=lo}^{hi} j^e1 (k-j)^e2 for k = 1..len, as a sequence.
ExactSeq power_conv(int e1, int e2, long lo_offset, long len, const Rational& weight,
                    std::string descriptor) {
  ExactSeq out;
  out.descriptor = std::move(descriptor);
  out.values.reserve(static_cast<std::size_t>(len));
  const PowerTable pw(len, std::max(e1, e2));
  for (long k = 1; k <= len; ++k) {
    Integer sum = 0;
    // lo_offset = 1: j = 1..k;  lo_offset = 0: j = 0..k-1
    const long lo = lo_offset, hi = lo_offset == 1 ? k : k - 1;
    for (long j = lo; j <= hi; ++j) sum += pw(j, e1) * pw(k - j, e2);
    out.values.emplace_back(weight * Rational(sum));
  }
  return out;
}

ExactSeq seq_a_raw(int m, int n, long len) {
  return power_conv(m - 1, n - 1, 1, len, Rational(1),
                    "a(" + std::to_string(m) + "," + std::to_string(n) + ")");
}

// b with arbitrary (R,M,N,S), S >= 1: alpha * sum_{j=1}^k j^{S-1} (k-j)^{R-1}.
ExactSeq seq_b_raw(int R, int M, int N, int S, long len) {
  return power_conv(S - 1, R - 1, 1, len, alpha_raw(R, M, N, S),
                    "b(" + std::to_string(R) + "," + std::to_string(M) + "," + std::to_string(N) +
                        "," + std::to_string(S) + ")");
}

// c(t,s) for s >= 0.
ExactSeq seq_c_raw(int t, int s, long len) {
  return power_conv(t, s, 0, len, Rational(1), "c(" + std::to_string(t) + "," + std::to_string(s) + ")");
}

Witness witness(std::string check, LemmaRegime regime, std::vector<std::pair<std::string, long>> params,
                long k, Rational lhs, Rational rhs) {
  return Witness{std::move(check), regime, std::move(params), k, std::move(lhs), std::move(rhs)};
}

// Records lhs >= rhs (or lhs == rhs when `identity`) into the report.
void record(LemmaReport& rep, Witness w, bool identity = false) {
  rep.tally(w.check, w.regime);
  const Rational& lhs = std::get<Rational>(w.lhs);
  const Rational& rhs = std::get<Rational>(w.rhs);
  const bool ok = identity ? lhs == rhs : lhs >= rhs;
  if (!ok) {
    if (w.regime == LemmaRegime::Empirical)
      rep.add_observation(std::move(w));
    else
      rep.add_violation(std::move(w));
  } else if (!identity && lhs == rhs) {
    rep.add_equality(std::move(w));
  }
}

}  // namespace

Integer seq_a(int m, int n, long k) {
  if (m < 1 || n < 1 || k < 1) throw DomainError(DomainErrorKind::InvalidArgument, "seq_a needs m, n, k >= 1");
  Integer sum = 0;
  for (long j = 1; j <= k; ++j) sum += ipow(j, m - 1) * ipow(k - j, n - 1);
  return sum;
}

Rational seq_b(const IndexQuad& idx, long k) {
  idx.validate_balanced();
  if (idx.s < 1 || k < 1) throw DomainError(DomainErrorKind::InvalidArgument, "seq_b needs s >= 1, k >= 1");
  Integer sum = 0;
  for (long j = 1; j <= k; ++j) sum += ipow(k - j, idx.r - 1) * ipow(j, idx.s - 1);
  return structure_constants(idx).alpha * Rational(sum);
}

Integer seq_c(int t, int s, long k) {
  if (t < 0 || s < 1 || k < 1) throw DomainError(DomainErrorKind::InvalidArgument, "seq_c needs t >= 0, s >= 1, k >= 1");
  Integer sum = 0;
  for (long j = 0; j < k; ++j) sum += ipow(j, t) * ipow(k - j, s);
  return sum;
}

Rational T_term(const IndexQuad& idx, long j, long k) {
  idx.validate_balanced();
  if (idx.s < 1) throw DomainError(DomainErrorKind::InvalidArgument, "T_term needs s >= 1");
  if (j < 1 || 2 * j > k) throw DomainError(DomainErrorKind::InvalidArgument, "T_term needs 1 <= j <= k/2");
  const long i = k - j;
  const Integer lead = ipow(j, idx.m - 1) * ipow(i, idx.n - 1) + ipow(i, idx.m - 1) * ipow(j, idx.n - 1);
  const Integer sub = ipow(j, idx.r - 1) * ipow(i, idx.s - 1) + ipow(i, idx.r - 1) * ipow(j, idx.s - 1);
  return Rational(lead) - structure_constants(idx).alpha * Rational(sub);
}

Rational T_symmetric_sum(const IndexQuad& idx, long k) {
  Rational sum = 0;
  for (long j = 1; 2 * j <= k; ++j) {
    const Rational t = T_term(idx, j, k);
    sum += (2 * j == k) ? Rational(t / 2) : t;
  }
  return sum;
}

ExactSeq make_seq_a(int m, int n, long k_max) {
  if (m < 1 || n < 1 || k_max < 1) throw DomainError(DomainErrorKind::InvalidArgument, "make_seq_a needs m, n, k_max >= 1");
  return seq_a_raw(m, n, k_max);
}

ExactSeq make_seq_b(const IndexQuad& idx, long k_max) {
  idx.validate_balanced();
  if (idx.s < 1 || k_max < 1) throw DomainError(DomainErrorKind::InvalidArgument, "make_seq_b needs s >= 1");
  return seq_b_raw(idx.r, idx.m, idx.n, idx.s, k_max);
}

ExactSeq make_seq_c(int t, int s, long k_max) {
  if (t < 0 || s < 1 || k_max < 1) throw DomainError(DomainErrorKind::InvalidArgument, "make_seq_c needs t >= 0, s >= 1");
  return seq_c_raw(t, s, k_max);
}

ExactSeq seq_forward_diff(const ExactSeq& seq, int order) {
  if (order < 0) throw DomainError(DomainErrorKind::InvalidArgument, "order must be >= 0");
  if (seq.size() <= static_cast<std::size_t>(order))
    throw LengthError("sequence of length " + std::to_string(seq.size()) + " too short for difference order " +
                      std::to_string(order));
  ExactSeq out = seq;
  for (int i = 0; i < order; ++i) {
    for (std::size_t k = 0; k + 1 < out.values.size(); ++k) out.values[k] = out.values[k + 1] - out.values[k];
    out.values.pop_back();
  }
  if (order > 0) out.descriptor = "D^" + std::to_string(order) + " " + seq.descriptor;
  return out;
}

LemmaRegime conv_regime(const IndexQuad& idx) {
  if (idx.s == 1) return LemmaRegime::ProvenLemma1;
  if (idx.s == 2 || (idx.s == 3 && idx.n == 4)) return LemmaRegime::ProvenLemma2;
  return LemmaRegime::Empirical;
}

LemmaReport verify_conv_inequality(int r_max, long k_max, bool include_empirical) {
  if (r_max < 1 || k_max < 1) throw DomainError(DomainErrorKind::InvalidArgument, "r_max, k_max must be >= 1");
  LemmaReport rep;
  rep.lemma = "conv-inequality";
  rep.ranges = {{"r_max", std::to_string(r_max)},
                {"k_max", std::to_string(k_max)},
                {"include_empirical", include_empirical ? "true" : "false"}};
  const PowerTable pw(k_max, r_max);
  for (int r = 1; r <= r_max; ++r)
    for (int m = 1; m <= r; ++m)
      for (int n = 1; n <= m; ++n) {
        const int s = m + n - r;
        if (s < 1 || s > n) continue;
        const IndexQuad idx{r, m, n, s};
        const LemmaRegime regime = conv_regime(idx);
        if (regime == LemmaRegime::Empirical && !include_empirical) continue;
        const Rational alpha = structure_constants(idx).alpha;
        for (long k = 1; k <= k_max; ++k) {
          Integer a = 0, bsum = 0;
          for (long j = 1; j <= k; ++j) {
            a += pw(j, m - 1) * pw(k - j, n - 1);
            bsum += pw(k - j, r - 1) * pw(j, s - 1);
          }
          record(rep, witness("a>=b", regime, {{"r", r}, {"m", m}, {"n", n}, {"s", s}}, k, Rational(a),
                              alpha * Rational(bsum)));
        }
      }
  return rep;
}

LemmaReport verify_proof_steps(int s, int T, int r, long k_max) {
  if (s < 0 || T < s || r < s || r < 1 || k_max < 1)
    throw DomainError(DomainErrorKind::InvalidArgument, "proof steps need s >= 0, T >= s, r >= max(s,1), k_max >= 1");
  LemmaReport rep;
  rep.lemma = "proof-steps";
  rep.ranges = {{"s", std::to_string(s)}, {"T", std::to_string(T)}, {"r", std::to_string(r)},
                {"k_max", std::to_string(k_max)}};

  LemmaRegime regime = LemmaRegime::Empirical;
  if (s == 0) regime = LemmaRegime::ProvenLemma1;
  if (s == 1 || (s == 2 && T == 3)) regime = LemmaRegime::ProvenLemma2;
  const std::vector<std::pair<std::string, long>> base{{"s", s}, {"T", T}, {"r", r}};
  auto with = [&](std::initializer_list<std::pair<std::string, long>> extra) {
    auto p = base;
    p.insert(p.end(), extra.begin(), extra.end());
    return p;
  };

  const long len = k_max + s + 2;
  const ExactSeq A = seq_a_raw(r + 1, T + 1, len);
  const ExactSeq B = seq_b_raw(r + T - s + 1, r + 1, T + 1, s + 1, len);
  const Rational alpha_big = alpha_raw(r + T - s + 1, r + 1, T + 1, s + 1);

  // Delta^{s+1} A >= Delta^{s+1} B
  {
    const ExactSeq dA = seq_forward_diff(A, s + 1), dB = seq_forward_diff(B, s + 1);
    for (long k = 1; k <= k_max; ++k) record(rep, witness("diff-step", regime, base, k, dA.at(k), dB.at(k)));
  }
  // Initial conditions at k = 1.
  for (int i = 1; i <= s + 1; ++i) {
    const Rational lhs = seq_forward_diff(A, i).at(1), rhs = seq_forward_diff(B, i).at(1);
    record(rep, witness("initial-diff", regime, with({{"i", i}}), 1, lhs, rhs));
  }

  // c(u,s) for u < r, shared by the reduced inequality and the b-side recursion.
  std::vector<ExactSeq> cs;
  for (int u = 0; u < r; ++u) cs.push_back(seq_c_raw(u, s, len));

  // Reduced inequality: low-t part of the a-recursion against the c-form of the
  // negative-t part of the b-recursion.
  if (s >= 1) {
    const ExactSeq lhs_seq = [&] {
      ExactSeq acc{std::vector<Rational>(static_cast<std::size_t>(len - s - 1), Rational(0)), "lhs"};
      for (int t = 0; t < s; ++t) {
        const ExactSeq d = seq_forward_diff(seq_a_raw(r + 1, t + 1, len), s + 1);
        const Rational w(binomial(T, t));
        for (std::size_t k = 0; k < acc.size(); ++k) acc.values[k] += w * d.values[k];
      }
      return acc;
    }();
    ExactSeq rhs_seq{std::vector<Rational>(lhs_seq.size(), Rational(0)), "rhs"};
    for (int u = 0; u < r; ++u) {
      const ExactSeq d = seq_forward_diff(cs[static_cast<std::size_t>(u)], s + 1);
      const Rational w = alpha_big * Rational(binomial(r + T - s, u));
      for (std::size_t k = 0; k < rhs_seq.size(); ++k) rhs_seq.values[k] += w * d.values[k];
    }
    for (long k = 1; k <= k_max; ++k)
      record(rep, witness("reduced-step", regime, base, k, lhs_seq.at(k), rhs_seq.at(k)));

    // Closed forms of both sides for s = 1 and s = 2.
    for (long k = 1; k <= k_max; ++k) {
      Rational lhs_closed, rhs_closed;
      if (s == 1) {
        lhs_closed = Rational(ipow(k + 2, r) - ipow(k + 1, r));
        Integer sum = 0;
        for (int t = 0; t < r; ++t) sum += binomial(r + T - 1, t) * ipow(k + 1, t);
        rhs_closed = alpha_big * Rational(sum);
      } else if (s == 2) {
        lhs_closed = Rational(ipow(k + 3, r) - 2 * ipow(k + 2, r) + ipow(k + 1, r) +
                              T * (ipow(k + 2, r) - ipow(k + 1, r)));
        Rational sum = 0;
        for (int t = 0; t < r; ++t)
          sum += Rational(factorial(r) * factorial(T), 2 * factorial(t) * factorial(r + T - 2 - t)) *
                 Rational(ipow(k + 1, t) + ipow(k + 2, t));
        rhs_closed = sum;
      } else {
        break;
      }
      record(rep, witness("closed-lhs", LemmaRegime::Proven, base, k, lhs_closed, lhs_seq.at(k)), true);
      record(rep, witness("closed-rhs", LemmaRegime::Proven, base, k, rhs_closed, rhs_seq.at(k)), true);
    }
  }

  // Binomial recursions (exact identities).
  if (T >= 1) {
    for (int i = 0; i <= s; ++i) {
      const ExactSeq lhsA = seq_forward_diff(A, i + 1);
      const ExactSeq lhsB = seq_forward_diff(B, i + 1);
      std::vector<Rational> rhsA(lhsA.size(), Rational(0)), rhsB(lhsB.size(), Rational(0));
      for (int t = 0; t < T; ++t) {
        const ExactSeq d = seq_forward_diff(seq_a_raw(r + 1, t + 1, len), i);
        const Rational w(binomial(T, t));
        for (std::size_t k = 0; k < rhsA.size(); ++k) rhsA[k] += w * d.values[k];
      }
      for (int t = s; t < T; ++t) {
        const ExactSeq d = seq_forward_diff(seq_b_raw(r + t - s + 1, r + 1, t + 1, s + 1, len), i);
        const Rational w(binomial(T, t));
        for (std::size_t k = 0; k < rhsB.size(); ++k) rhsB[k] += w * d.values[k];
      }
      for (int u = 0; u < r; ++u) {
        const ExactSeq d = seq_forward_diff(cs[static_cast<std::size_t>(u)], i);
        const Rational w = alpha_big * Rational(binomial(r + T - s, u));
        for (std::size_t k = 0; k < rhsB.size(); ++k) rhsB[k] += w * d.values[k];
      }
      for (long k = 1; k <= k_max; ++k) {
        record(rep, witness("binomial-a", LemmaRegime::Proven, with({{"i", i}}), k, lhsA.at(k),
                            rhsA[static_cast<std::size_t>(k - 1)]), true);
        record(rep, witness("binomial-b", LemmaRegime::Proven, with({{"i", i}}), k, lhsB.at(k),
                            rhsB[static_cast<std::size_t>(k - 1)]), true);
      }
    }
  }

  if (s == 0) {
    for (long k = 1; k <= k_max; ++k) {
      Integer sum = 0;
      for (long j = 1; j <= k; ++j) sum += ipow(j, r);
      record(rep, witness("power-sum", regime, base, k, Rational(sum), Rational(ipow(k, r + 1), r + 1)));
    }
  }

  if (s == 2 && T == 3) {
    for (long k = 1; k <= k_max; ++k) {
      const Rational lhs(ipow(k + 3, r) + 4 * ipow(k + 2, r) + ipow(k + 1, r));
      const Rational rhs = Rational(3, r + 1) * Rational(ipow(k + 3, r + 1) - ipow(k + 1, r + 1));
      record(rep, witness("T3-form", regime, base, k, lhs, rhs));
    }
    for (int i = 0; i < r; ++i) {
      const Rational lhs(4 * (r + 1 - i));
      const Rational rhs((5 + i - r) * ipow(2, r - i));
      record(rep, witness("T3-coefficient", regime, with({{"i", i}}), 0, lhs, rhs));
    }
  }
  return rep;
}

Rational D_value(int r, int t) {
  if (r < 1 || t < 1) throw DomainError(DomainErrorKind::InvalidArgument, "D needs r, t >= 1");
  const Rational frac(factorial(r) * factorial(t), factorial(r + t - 1));
  return Rational(ipow(2, r) + ipow(2, t) - 2) - frac * Rational(ipow(2, r + t - 1));
}

LemmaReport verify_power_sum_bounds(int m_max, int n_max) {
  if (m_max < 2 || n_max < 2) throw DomainError(DomainErrorKind::InvalidArgument, "m_max, n_max must be >= 2");
  LemmaReport rep;
  rep.lemma = "power-sums";
  rep.ranges = {{"m_max", std::to_string(m_max)}, {"n_max", std::to_string(n_max)}};
  const LemmaRegime proven = LemmaRegime::Proven;

  for (int m = 1; m <= m_max; ++m)
    for (long n = 1; n <= n_max; ++n) {
      Integer sum = 0;
      for (long j = 1; j < n; ++j) sum += ipow(n - j, m - 1);
      const Rational lhs(m * sum);
      const Rational rhs(ipow(n, m) - (m - 1) * ipow(n, m - 1) - (m == 1 ? 1 : 0));
      // Equality is part of the statement for m = 1, 2.
      record(rep, witness(m <= 2 ? "power-sum-equality" : "power-sum", proven, {{"m", m}, {"n", n}}, n, lhs, rhs),
             m <= 2);
      if (m <= 2 && lhs == rhs)
        rep.add_equality(witness("power-sum-equality", proven, {{"m", m}, {"n", n}}, n, lhs, rhs));
    }

  for (int r = 1; r < m_max; ++r)
    for (long n = 1; n <= n_max; ++n) {
      Integer sum = 0;
      for (long i = 1; i <= n; ++i) sum += ipow(i, r);
      record(rep, witness("shifted-power-sum", proven, {{"r", r}, {"n", n}}, n, Rational((r + 1) * sum),
                          Rational(ipow(n + 1, r + 1) - r * ipow(n + 1, r))));
      const Rational integral(ipow(n + 1, r + 1) - ipow(n, r + 1), r + 1);
      const Rational trapezoid(ipow(n, r) + ipow(n + 1, r), 2);
      const Rational tilted = Rational(r, r + 1) * Rational(ipow(n + 1, r)) + Rational(ipow(n, r), r + 1);
      record(rep, witness("trapezoid-upper", proven, {{"r", r}, {"n", n}}, n, trapezoid, integral));
      record(rep, witness("trapezoid-tilted", proven, {{"r", r}, {"n", n}}, n, tilted, trapezoid));
    }

  for (int r = 1; r <= m_max; ++r)
    for (int t = 1; t <= m_max; ++t) {
      const Rational d = D_value(r, t);
      if (t == 1)
        record(rep, witness("D-identity", proven, {{"r", r}, {"t", t}}, 0, d, Rational(0)), true);
      if (t == 1 && d == 0) rep.add_equality(witness("D-identity", proven, {{"r", r}, {"t", t}}, 0, d, Rational(0)));
      if (t > 1) record(rep, witness("D-nonnegative", proven, {{"r", r}, {"t", t}}, 0, d, Rational(0)));
    }
  return rep;
}

}  // namespace qpoly
