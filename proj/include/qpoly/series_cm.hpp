#pragma once

// Complete-monotonicity certification. The series route expands G (q>1 side)
// and F (0<q<1 side) in powers of the series base and checks that every
// coefficient up to k_max has the required sign. The grid route checks the
// sign pattern of iterated forward differences of an arbitrary function.

#include "qpoly/functionals.hpp"
#include "qpoly/numeric.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qpoly {

/// Coefficient of q^{-nx} in c^2 (ln q)^{-(m+1)} G_m(x;q,c), q > 1:
///   sum_{j=1}^{n-1} m (n-j)^{m-1} w_j w_{n-j} - c w_n (n^m - (m-1) n^{m-1} - [m=1])
/// with w_j = (1-q^{-jc})/(1-q^{-j}). For n = 1 this is the standalone q^{-x}
/// term c (1-[m=1]) (m-2) w_1.
Real H_coeff(int m, int n, const Real& q, const Real& c, const PrecisionBudget& b = {});

/// Coefficient of q^{kx} in c^2 (-ln q)^{-(m+n)} F_{r,m,n,s}(x;q,c), 0<q<1, s>=1:
///   sum_{j=1}^{k-1} v_j v_{k-j} (j^{m-1}(k-j)^{n-1} - alpha j^{r-1}(k-j)^{s-1})
/// with v_j = (1-q^{jc})/(1-q^j).
Real F_inner_coeff(const IndexQuad& idx, int k, const Real& q, const Real& c,
                   const PrecisionBudget& b = {});

enum class TargetKind { G_of_m, F_of_quad };

struct CoeffTarget {
  TargetKind kind = TargetKind::G_of_m;
  int m = 1;         // G_of_m
  IndexQuad quad{};  // F_of_quad
  Real q = 2;
  Real c = Real(0.5);

  void validate() const;
  std::string descriptor() const;
};

enum class CertStatus { Certified, Violated, Inconclusive };
std::string to_string(CertStatus s);

/// Which statement, if any, covers a certification target.
enum class Regime { Theorem1, Theorem1Reversed, Theorem2, Unproven };
std::string to_string(Regime r);

struct Violation {
  long index = 0;
  Real value;
  std::optional<Real> x;  // grid checks record the abscissa
};

/// One row of a coefficient sweep (k, raw coefficient, signed margin).
struct CoeffRow {
  long k = 0;
  Real coefficient;
  Real margin;
};

struct CertReport {
  std::string target;  // human-readable descriptor
  Regime regime = Regime::Unproven;
  int sign = 1;        // -1 when the negated function is being certified
  long k_lo = 0;
  long k_hi = 0;
  Real min_margin;
  std::optional<Violation> first_violation;
  CertStatus status = CertStatus::Inconclusive;
  std::vector<CoeffRow> rows;  // empty for grid checks
};

inline constexpr double kDefaultAbsSlack = 1e-30;

/// Regime that covers a target: a proven sign pattern, its reversal, or none.
Regime classify(const CoeffTarget& t);

/// Sweeps every series coefficient with index up to k_max. Targets outside the
/// proven regimes are swept the same way but reported as Inconclusive.
/// Coefficients that vanish identically (n = 1 for G with m in {1,2}) are
/// listed but excluded from min_margin. A negative abs_slack demands margins
/// of at least |abs_slack|.
CertReport certify_cm_series(const CoeffTarget& target, int k_max, const PrecisionBudget& b = {},
                             double abs_slack = kDefaultAbsSlack);

/// Checks (-1)^k Delta_h^k f(x) >= -slack * scale for every grid point and
/// 0 <= k <= k_max, where scale = max(|f| on the stencil, 1e-30). min_margin is
/// reported in units of scale.
CertReport check_cm_grid(const RealFn& f, const Real& x_lo, const Real& x_hi, int grid_points,
                         const Real& h, int k_max, double slack = 1e-9,
                         const std::string& target = "f");

}  // namespace qpoly
