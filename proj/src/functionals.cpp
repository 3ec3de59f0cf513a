#include "qpoly/functionals.hpp"

#include "qpoly/qspecial.hpp"

#include <map>

namespace qpoly {
namespace {

Real to_real(const Rational& v) {
  return Real(Real(numerator(v)) / Real(denominator(v)));
}

Real sign_pow(int e) { return (e % 2 == 0) ? Real(1) : Real(-1); }

QPoint shifted(const QPoint& p, const Real& c) {
  return QPoint::make(p.q, p.x + c);
}

// Delta psi_q^{(order)}(x;c), memoized per order for one functional evaluation.
class DiffCache {
 public:
  DiffCache(const QPoint& p, const FDStep& step, const PrecisionBudget& b)
      : p_(p), step_(step), b_(b) {}

  const Real& operator()(int order) {
    auto it = cache_.find(order);
    if (it != cache_.end()) return it->second;
    const RealFn f = [&](const Real& x) { return psi_q_order(QPoint{p_.q, x}, order, b_); };
    shifted(p_, step_.c);  // domain check for x + c
    return cache_.emplace(order, fwd_diff(f, p_.x, step_)).first->second;
  }

 private:
  QPoint p_;
  FDStep step_;
  PrecisionBudget b_;
  std::map<int, Real> cache_;
};

}  // namespace

void IndexQuad::validate() const {
  if (!(r >= m && m >= n && n >= s && s >= 0 && r >= 1))
    throw DomainError(DomainErrorKind::OrderingViolation,
                      "index quad " + str() + " violates r >= m >= n >= s >= 0, r >= 1");
}

void IndexQuad::validate_balanced() const {
  validate();
  if (!balanced())
    throw DomainError(DomainErrorKind::OrderingViolation, "index quad " + str() + " needs r+s = m+n");
}

std::string IndexQuad::str() const {
  return "(" + std::to_string(r) + "," + std::to_string(m) + "," + std::to_string(n) + "," +
         std::to_string(s) + ")";
}

FDStep FDStep::make(const Real& c) {
  if (c == 0) throw DomainError(DomainErrorKind::InvalidArgument, "step c must be nonzero");
  return FDStep{c};
}

StructureConstants structure_constants(const IndexQuad& idx) {
  idx.validate();
  const Integer top = factorial(idx.m - 1) * factorial(idx.n - 1);
  if (idx.s == 0) return {Rational(top, factorial(idx.r - 1)), std::nullopt};
  StructureConstants k;
  k.alpha = Rational(top, factorial(idx.r - 1) * factorial(idx.s - 1));
  k.beta = Rational(factorial(idx.m) * factorial(idx.n), factorial(idx.r) * factorial(idx.s));
  return k;
}

int d_const(int m, const Real& q) {
  if (m < 1) throw DomainError(DomainErrorKind::InvalidArgument, "d_const needs m >= 1");
  if (!(q > 0) || q == 1) throw DomainError(DomainErrorKind::InvalidArgument, "d_const needs q > 0, q != 1");
  return (q < 1 && m >= 2) ? m - 1 : 1;
}

Real fwd_diff(const RealFn& f, const Real& x, const FDStep& step) {
  if (step.c == 0) throw DomainError(DomainErrorKind::InvalidArgument, "step c must be nonzero");
  return (f(x + step.c) - f(x)) / step.c;
}

Real F_q_fd(const IndexQuad& idx, const QPoint& p, const FDStep& step, const PrecisionBudget& b) {
  idx.validate_balanced();
  p.validate();
  b.validate();
  DiffCache diff(p, step, b.inner());
  const Real alpha = to_real(structure_constants(idx).alpha);
  const Real lead = sign_pow(idx.m + idx.n) * diff(idx.m - 1) * diff(idx.n - 1);
  return lead - alpha * sign_pow(idx.r + idx.s) * diff(idx.r - 1) * diff(idx.s - 1);
}

Real G_q_fd(int m, const QPoint& p, const FDStep& step, const PrecisionBudget& b) {
  if (m < 1) throw DomainError(DomainErrorKind::InvalidArgument, "G needs m >= 1");
  const Real f = F_q_fd(IndexQuad{m + 1, m, 1, 0}, p, step, b);
  const RealFn psi = [&](const Real& x) { return psi_q_order(QPoint{p.q, x}, m - 1, b.inner()); };
  shifted(p, step.c);
  const Real diff = fwd_diff(psi, p.x, step);
  return m * f - sign_pow(m + 1) * d_const(m, p.q) * log(p.q) * diff;
}

Real G_q_deriv(int m, const QPoint& p, const PrecisionBudget& b) {
  if (m < 1) throw DomainError(DomainErrorKind::InvalidArgument, "G needs m >= 1");
  const PrecisionBudget inner = b.inner();
  b.validate();
  const Real d1 = psi_q_deriv(p, 1, inner).value;
  const Real dm = m == 1 ? d1 : psi_q_deriv(p, m, inner).value;
  const Real dm1 = psi_q_deriv(p, m + 1, inner).value;
  const Real sg = sign_pow(m + 1);
  return sg * (m * d1 * dm + dm1 - d_const(m, p.q) * log(p.q) * dm);
}

Real F_q_deriv(const IndexQuad& idx, const QPoint& p, const PrecisionBudget& b) {
  idx.validate_balanced();
  if (idx.s < 1) throw DomainError(DomainErrorKind::InvalidArgument, "F_q_deriv needs s >= 1");
  b.validate();
  const PrecisionBudget inner = b.inner();
  std::map<int, Real> cache;
  auto d = [&](int k) -> const Real& {
    auto it = cache.find(k);
    if (it == cache.end()) it = cache.emplace(k, psi_q_deriv(p, k, inner).value).first;
    return it->second;
  };
  const Real alpha = to_real(structure_constants(idx).alpha);
  return sign_pow(idx.m + idx.n) * d(idx.m) * d(idx.n) -
         alpha * sign_pow(idx.r + idx.s) * d(idx.r) * d(idx.s);
}

Real F_classic(const IndexQuad& idx, const Real& x, const Real& t) {
  idx.validate();
  auto d = [&](int k) { return k == 0 ? Real(-1) : psi_classical_deriv(x, k); };
  if (!(x > 0)) throw DomainError(DomainErrorKind::InvalidArgument, "x must be positive");
  return sign_pow(idx.m + idx.n) * d(idx.m) * d(idx.n) -
         t * sign_pow(idx.r + idx.s) * d(idx.r) * d(idx.s);
}

DifferenceChain difference_chain(const QPoint& p, const FDStep& step, const PrecisionBudget& b) {
  p.validate();
  b.validate();
  const PrecisionBudget inner = b.inner();
  const QPoint ahead = shifted(p, step.c);
  const Real dpsi = psi_q(ahead, inner).value - psi_q(p, inner).value;
  const Real d2 = dpsi * dpsi;
  DifferenceChain out;
  out.upper = (1 - p.q) / (1 - pow(p.q, step.c)) * d2;
  out.middle = pow(p.q, p.x) * (psi_q_deriv(p, 1, inner).value - psi_q_deriv(ahead, 1, inner).value);
  out.lower = d2;
  return out;
}

}  // namespace qpoly
