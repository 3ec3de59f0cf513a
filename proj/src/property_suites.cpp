#include "qpoly/property_suites.hpp"

#include "qpoly/functionals.hpp"
#include "qpoly/qspecial.hpp"

namespace qpoly {
namespace {

void record(LemmaReport& rep, std::string check, long point, const Real& lhs, const Real& rhs, bool ok) {
  rep.tally(check, LemmaRegime::Proven);
  if (!ok) rep.add_violation(Witness{std::move(check), LemmaRegime::Proven, {{"point", point}}, point, lhs, rhs});
}

}  // namespace

std::vector<Real> linspace(const Real& lo, const Real& hi, int n) {
  if (n < 1) return {};
  if (n == 1) return {lo};
  std::vector<Real> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out.push_back(lo + (hi - lo) * i / (n - 1));
  return out;
}

LemmaReport reflection_suite(const std::vector<Real>& qs, const std::vector<Real>& xs, double tol,
                             const PrecisionBudget& b) {
  LemmaReport rep;
  rep.lemma = "reflection";
  rep.ranges = {{"points", std::to_string(qs.size() * xs.size())}, {"tol", std::to_string(tol)}};
  long point = 0;
  for (const Real& q : qs)
    for (const Real& x : xs) {
      const Real direct = psi_q(QPoint::make(q, x), b).value;
      const Real reflected = (x - Real(1.5)) * log(q) + psi_q(QPoint::make(1 / q, x), b).value;
      const Real rel = abs(direct - reflected) / abs(direct);
      record(rep, "reflection-residual", point++, rel, Real(tol), rel <= Real(tol));
    }
  return rep;
}

LemmaReport sign_ladder_suite(const std::vector<Real>& qs, const std::vector<Real>& xs, int m_max,
                              const PrecisionBudget& b) {
  LemmaReport rep;
  rep.lemma = "sign-ladder";
  rep.ranges = {{"points", std::to_string(qs.size() * xs.size())}, {"m_max", std::to_string(m_max)}};
  long point = 0;
  for (const Real& q : qs)
    for (const Real& x : xs) {
      for (int m = 1; m <= m_max; ++m) {
        const Real v = psi_q_deriv(QPoint::make(q, x), m, b).value;
        const Real signed_v = (m % 2 == 1) ? v : Real(-v);
        record(rep, "alternating-sign", point, signed_v, Real(0), signed_v > 0);
      }
      ++point;
    }
  return rep;
}

LemmaReport chain_suite(const std::vector<Real>& qs, const std::vector<Real>& cs,
                        const std::vector<Real>& xs, const PrecisionBudget& b) {
  LemmaReport rep;
  rep.lemma = "difference-chain";
  rep.ranges = {{"points", std::to_string(qs.size() * cs.size() * xs.size())}};
  long point = 0;
  for (const Real& q : qs)
    for (const Real& c : cs)
      for (const Real& x : xs) {
        const DifferenceChain ch = difference_chain(QPoint::make(q, x), FDStep::make(c), b);
        if (c < 1) {
          record(rep, "upper>middle", point, ch.upper, ch.middle, ch.upper > ch.middle);
          record(rep, "middle>lower", point, ch.middle, ch.lower, ch.middle > ch.lower);
        } else {
          record(rep, "upper<middle", point, ch.upper, ch.middle, ch.upper < ch.middle);
          record(rep, "middle<lower", point, ch.middle, ch.lower, ch.middle < ch.lower);
        }
        ++point;
      }
  return rep;
}

}  // namespace qpoly
