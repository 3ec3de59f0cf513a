#include "qpoly/analysis_props.hpp"

namespace qpoly {
namespace {

void record(LemmaReport& rep, Witness w, bool ok) {
  rep.tally(w.check, w.regime);
  if (!ok) rep.add_violation(std::move(w));
}

Witness real_witness(std::string check, std::vector<std::pair<std::string, long>> params, long k,
                     const Real& lhs, const Real& rhs) {
  return Witness{std::move(check), LemmaRegime::Proven, std::move(params), k, lhs, rhs};
}

}  // namespace

RatioParams RatioParams::make(const Real& y, const Real& c) {
  RatioParams p{y, c};
  p.validate();
  return p;
}

void RatioParams::validate() const {
  if (!(y > 0 && y < 1)) throw DomainError(DomainErrorKind::InvalidArgument, "y must lie in (0,1)");
  if (!(c > 0) || c == 1) throw DomainError(DomainErrorKind::InvalidArgument, "c must be positive and != 1");
}

HValue h_second_deriv(const Real& z, const RatioParams& pr, const PrecisionBudget& b) {
  b.validate();
  pr.validate();
  if (!(z > 0)) throw DomainError(DomainErrorKind::InvalidArgument, "z must be positive");
  const Real ln_y = log(pr.y);
  const Real yz = pow(pr.y, z);
  const Real yzc = pow(pr.y, z * pr.c);
  const Real ln_yc = pr.c * ln_y;
  HValue out;
  out.h = log((1 - yzc) / (1 - yz));
  out.h_dd = ln_y * ln_y * yz / ((1 - yz) * (1 - yz)) - ln_yc * ln_yc * yzc / ((1 - yzc) * (1 - yzc));
  return out;
}

LemmaReport verify_ratio_ineq(int n, const Real& q, const Real& c, const PrecisionBudget& b) {
  b.validate();
  if (n < 2) throw DomainError(DomainErrorKind::InvalidArgument, "n must be >= 2");
  if (!(q > 0) || q == 1) throw DomainError(DomainErrorKind::InvalidArgument, "q must be positive and != 1");
  if (!(c > 0)) throw DomainError(DomainErrorKind::InvalidArgument, "c must be positive");

  LemmaReport rep;
  rep.lemma = "ratio";
  rep.ranges = {{"n", std::to_string(n)}, {"q", to_string(q, 20)}, {"c", to_string(c, 20)}};
  const Real y = q > 1 ? Real(1 / q) : q;

  auto w = [&](long j) { return (1 - pow(y, Real(j) * c)) / (1 - pow(y, Real(j))); };
  // Closed form of lim_{t->0+} exp(h(t) + h(n-t)).
  const Real limit = c * (1 - pow(y, Real(n) * c)) / (1 - pow(y, Real(n)));

  std::vector<Real> lhs(static_cast<std::size_t>(n));
  for (long j = 1; j < n; ++j) {
    lhs[static_cast<std::size_t>(j)] = w(j) * w(n - j);
    const Real& l = lhs[static_cast<std::size_t>(j)];
    if (c < 1)
      record(rep, real_witness("ratio>=limit", {{"n", n}, {"j", j}}, j, l, limit), l >= limit);
    else if (c > 1)
      record(rep, real_witness("ratio<=limit", {{"n", n}, {"j", j}}, j, l, limit), l <= limit);
    else {
      Witness tie = real_witness("ratio==limit", {{"n", n}, {"j", j}}, j, l, limit);
      if (l == limit) rep.add_equality(tie);
      record(rep, std::move(tie), l == limit);
    }
  }
  for (long j = 1; j < n; ++j) {
    const Real& a = lhs[static_cast<std::size_t>(j)];
    const Real& mirror = lhs[static_cast<std::size_t>(n - j)];
    record(rep, real_witness("mirror-symmetry", {{"n", n}, {"j", j}}, j, a, mirror), a == mirror);
  }
  for (long j = 1; j + 1 <= n / 2; ++j) {
    const Real& a = lhs[static_cast<std::size_t>(j)];
    const Real& next = lhs[static_cast<std::size_t>(j + 1)];
    if (c < 1)
      record(rep, real_witness("weights-nondecreasing", {{"n", n}, {"j", j}}, j, next, a), next >= a);
    else if (c > 1)
      record(rep, real_witness("weights-nonincreasing", {{"n", n}, {"j", j}}, j, a, next), a >= next);
  }
  return rep;
}

Real weight_u(const Real& u) {
  if (!(u > 0 && u < 1)) throw DomainError(DomainErrorKind::InvalidArgument, "u must lie in (0,1)");
  const Real lu = log(u);
  return u * lu * lu / ((1 - u) * (1 - u));
}

LemmaReport verify_h_convexity(const std::vector<Real>& ys, const std::vector<Real>& cs,
                               const std::vector<Real>& zs, const PrecisionBudget& b) {
  LemmaReport rep;
  rep.lemma = "h-convexity";
  rep.ranges = {{"grid", std::to_string(ys.size()) + "x" + std::to_string(cs.size()) + "x" +
                             std::to_string(zs.size())}};
  long idx = 0;
  for (const Real& y : ys)
    for (const Real& c : cs)
      for (const Real& z : zs) {
        const HValue hv = h_second_deriv(z, RatioParams::make(y, c), b);
        const bool ok = c < 1 ? hv.h_dd <= 0 : hv.h_dd >= 0;
        record(rep, real_witness(c < 1 ? "h''<=0" : "h''>=0", {{"point", idx}}, idx, hv.h_dd, Real(0)), ok);
        ++idx;
      }
  return rep;
}

LemmaReport verify_weight_monotone(int points) {
  if (points < 2) throw DomainError(DomainErrorKind::InvalidArgument, "points must be >= 2");
  LemmaReport rep;
  rep.lemma = "weights";
  rep.ranges = {{"points", std::to_string(points)}};
  Real prev = weight_u(Real(1) / (points + 1));
  for (long i = 2; i <= points; ++i) {
    const Real cur = weight_u(Real(i) / (points + 1));
    record(rep, real_witness("weight-increasing", {{"i", i}}, i, cur, prev), cur > prev);
    prev = cur;
  }
  return rep;
}

}  // namespace qpoly
