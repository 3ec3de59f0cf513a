#include "qpoly/series_cm.hpp"

#include <cmath>
#include <sstream>

namespace qpoly {
namespace {

Real to_real(const Rational& v) { return Real(Real(numerator(v)) / Real(denominator(v))); }

Real int_pow(long base, int e) {
  Real out = 1;
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

// w_j = (1 - y^{jc}) / (1 - y^j) for j = 1..count, y in (0,1). Index 0 unused.
std::vector<Real> weights(const Real& y, const Real& c, int count) {
  std::vector<Real> w(count + 1);
  const Real yc = pow(y, c);
  Real yj = 1, yjc = 1;
  for (int j = 1; j <= count; ++j) {
    yj *= y;
    yjc *= yc;
    w[j] = (1 - yjc) / (1 - yj);
  }
  return w;
}

Real h_from_weights(int m, int n, const Real& c, const std::vector<Real>& w) {
  Real conv = 0;
  for (int j = 1; j < n; ++j) conv += int_pow(n - j, m - 1) * w[j] * w[n - j];
  const Real linear = int_pow(n, m) - (m - 1) * int_pow(n, m - 1) - (m == 1 ? 1 : 0);
  // At n = 1 the convolution is empty and this reduces to c (m-2) w_1 (zero for m = 1).
  return m * conv - c * w[n] * linear;
}

Real f_inner_from_weights(const IndexQuad& idx, const Real& alpha, int k, const std::vector<Real>& v) {
  Real sum = 0;
  for (int j = 1; j < k; ++j) {
    const Real diff = int_pow(j, idx.m - 1) * int_pow(k - j, idx.n - 1) -
                      alpha * int_pow(j, idx.r - 1) * int_pow(k - j, idx.s - 1);
    sum += v[j] * v[k - j] * diff;
  }
  return sum;
}

void check_positive_c(const Real& c) {
  if (!(c > 0)) throw DomainError(DomainErrorKind::InvalidArgument, "c must be positive");
}

}  // namespace

Real H_coeff(int m, int n, const Real& q, const Real& c, const PrecisionBudget& b) {
  b.validate();
  if (!(q > 1)) throw DomainError(DomainErrorKind::InvalidArgument, "H_coeff needs q > 1");
  if (m < 1 || n < 1) throw DomainError(DomainErrorKind::InvalidArgument, "H_coeff needs m, n >= 1");
  check_positive_c(c);
  return h_from_weights(m, n, c, weights(1 / q, c, n));
}

Real F_inner_coeff(const IndexQuad& idx, int k, const Real& q, const Real& c, const PrecisionBudget& b) {
  b.validate();
  idx.validate_balanced();
  if (idx.s < 1) throw DomainError(DomainErrorKind::InvalidArgument, "F_inner_coeff needs s >= 1");
  if (!(q > 0 && q < 1)) throw DomainError(DomainErrorKind::InvalidArgument, "F_inner_coeff needs 0 < q < 1");
  if (k < 2) throw DomainError(DomainErrorKind::InvalidArgument, "F_inner_coeff needs k >= 2");
  check_positive_c(c);
  const Real alpha = to_real(structure_constants(idx).alpha);
  return f_inner_from_weights(idx, alpha, k, weights(q, c, k));
}

void CoeffTarget::validate() const {
  QPoint::make(q, Real(1));
  check_positive_c(c);
  if (kind == TargetKind::G_of_m) {
    if (m < 1) throw DomainError(DomainErrorKind::InvalidArgument, "G target needs m >= 1");
  } else {
    quad.validate_balanced();
    if (quad.s < 1) throw DomainError(DomainErrorKind::InvalidArgument, "F target needs s >= 1");
  }
}

std::string CoeffTarget::descriptor() const {
  std::ostringstream os;
  if (kind == TargetKind::G_of_m)
    os << "G_" << m;
  else
    os << "F" << quad.str();
  os << "(q=" << to_string(q, 12) << ",c=" << to_string(c, 12) << ")";
  return os.str();
}

std::string to_string(CertStatus s) {
  switch (s) {
    case CertStatus::Certified: return "Certified";
    case CertStatus::Violated: return "Violated";
    case CertStatus::Inconclusive: return "Inconclusive";
  }
  return "?";
}

std::string to_string(Regime r) {
  switch (r) {
    case Regime::Theorem1: return "Theorem1";
    case Regime::Theorem1Reversed: return "Theorem1Reversed";
    case Regime::Theorem2: return "Theorem2";
    case Regime::Unproven: return "UnprovenRegime";
  }
  return "?";
}

Regime classify(const CoeffTarget& t) {
  if (t.kind == TargetKind::G_of_m) {
    if (t.c < 1) return Regime::Theorem1;
    if (t.c > 1 && t.m <= 2) return Regime::Theorem1Reversed;
    return Regime::Unproven;
  }
  if (!(t.c < 1)) return Regime::Unproven;
  const IndexQuad& i = t.quad;
  if (i.s == 1 && t.q < 1) return Regime::Theorem2;
  if (i.s == 2) return Regime::Theorem2;
  if (i.s == 3 && i.n == 4) return Regime::Theorem2;
  return Regime::Unproven;
}

CertReport certify_cm_series(const CoeffTarget& target, int k_max, const PrecisionBudget& b,
                             double abs_slack) {
  target.validate();
  b.validate();
  if (k_max < 2) throw DomainError(DomainErrorKind::InvalidArgument, "k_max must be >= 2");

  CertReport rep;
  rep.target = target.descriptor();
  rep.regime = classify(target);
  rep.sign = rep.regime == Regime::Theorem1Reversed ? -1 : 1;
  rep.k_hi = k_max;

  // Series base y in (0,1): G is expanded on the q>1 side, F on the 0<q<1 side.
  const Real y = target.q < 1 ? target.q : Real(1 / target.q);
  const std::vector<Real> w = weights(y, target.c, k_max);

  auto push = [&](long k, Real coeff, bool structural_zero) {
    CoeffRow row{k, coeff, rep.sign * coeff};
    if (!structural_zero && !rep.first_violation && row.margin < -Real(abs_slack))
      rep.first_violation = Violation{k, row.margin, std::nullopt};
    rep.rows.push_back(std::move(row));
  };

  bool have_min = false;
  if (target.kind == TargetKind::G_of_m) {
    rep.k_lo = 1;
    for (int n = 1; n <= k_max; ++n)
      push(n, h_from_weights(target.m, n, target.c, w), n == 1 && target.m <= 2);
  } else {
    const IndexQuad& idx = target.quad;
    const Real alpha = to_real(structure_constants(idx).alpha);
    // For q>1 and s=1 the order-0 difference carries an extra ln q, which adds
    // -alpha c k^{r-1} w_k to every coefficient (including k = 1).
    const bool shifted = target.q > 1 && idx.s == 1;
    rep.k_lo = shifted ? 1 : 2;
    for (int k = static_cast<int>(rep.k_lo); k <= k_max; ++k) {
      Real coeff = f_inner_from_weights(idx, alpha, k, w);
      if (shifted) coeff -= alpha * target.c * int_pow(k, idx.r - 1) * w[k];
      push(k, coeff, false);
    }
  }

  for (const CoeffRow& row : rep.rows) {
    const bool structural_zero = target.kind == TargetKind::G_of_m && row.k == 1 && target.m <= 2;
    if (structural_zero) continue;
    if (!have_min || row.margin < rep.min_margin) {
      rep.min_margin = row.margin;
      have_min = true;
    }
  }

  if (rep.regime == Regime::Unproven)
    rep.status = CertStatus::Inconclusive;
  else
    rep.status = rep.first_violation ? CertStatus::Violated : CertStatus::Certified;
  return rep;
}

CertReport check_cm_grid(const RealFn& f, const Real& x_lo, const Real& x_hi, int grid_points,
                         const Real& h, int k_max, double slack, const std::string& target) {
  if (grid_points < 1) throw DomainError(DomainErrorKind::InvalidArgument, "grid_points must be >= 1");
  if (!(h > 0)) throw DomainError(DomainErrorKind::InvalidArgument, "h must be positive");
  if (k_max < 0) throw DomainError(DomainErrorKind::InvalidArgument, "k_max must be >= 0");
  if (x_hi < x_lo) throw DomainError(DomainErrorKind::InvalidArgument, "x_hi must be >= x_lo");

  CertReport rep;
  rep.target = target;
  rep.regime = Regime::Unproven;
  rep.k_lo = 0;
  rep.k_hi = k_max;

  const Real spacing = grid_points > 1 ? Real((x_hi - x_lo) / (grid_points - 1)) : Real(0);
  // When grid spacing is a whole multiple of h every stencil point sits on the
  // lattice x_lo + l h, so function values can be shared between grid points.
  const Real ratio = spacing / h;
  const Real stride_r = round(ratio);
  const bool lattice = grid_points == 1 || (stride_r >= 1 && abs(ratio - stride_r) < Real(1e-9));
  const long stride = lattice && grid_points > 1 ? stride_r.convert_to<long>() : 0;
  std::vector<std::optional<Real>> cache;
  if (lattice) cache.resize(static_cast<std::size_t>(stride * (grid_points - 1) + k_max + 1));
  auto value_at = [&](int i, int j) -> Real {
    if (!lattice) return f(x_lo + i * spacing + j * h);
    const std::size_t l = static_cast<std::size_t>(stride * i + j);
    if (!cache[l]) cache[l] = f(x_lo + Real(l) * h);
    return *cache[l];
  };

  bool have_min = false;
  const Real floor = Real(1e-30);
  for (int i = 0; i < grid_points; ++i) {
    std::vector<Real> d(k_max + 1);
    Real scale = floor;
    for (int j = 0; j <= k_max; ++j) {
      d[j] = value_at(i, j);
      if (abs(d[j]) > scale) scale = abs(d[j]);
    }
    const Real x = x_lo + i * spacing;
    for (int k = 0; k <= k_max; ++k) {
      if (k > 0)
        for (int j = 0; j + k <= k_max; ++j) d[j] = d[j + 1] - d[j];
      const Real margin = (k % 2 == 0 ? d[0] : Real(-d[0])) / scale;
      if (!have_min || margin < rep.min_margin) {
        rep.min_margin = margin;
        have_min = true;
      }
      if (!rep.first_violation && margin < -Real(slack)) rep.first_violation = Violation{k, margin, x};
    }
  }
  rep.status = rep.first_violation ? CertStatus::Violated : CertStatus::Certified;
  return rep;
}

}  // namespace qpoly
