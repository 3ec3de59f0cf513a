#pragma once

// Grid checks of analytic identities and inequalities, packaged as reports
// for the CLI `props` command and the acceptance suite.

#include "qpoly/numeric.hpp"
#include "qpoly/report.hpp"

#include <vector>

namespace qpoly {

/// |psi_q(x) - (x - 3/2) ln q - psi_{1/q}(x)| <= tol * |psi_q(x)| for q > 1.
LemmaReport reflection_suite(const std::vector<Real>& qs, const std::vector<Real>& xs, double tol,
                             const PrecisionBudget& b = {});

/// (-1)^{m+1} psi_q^{(m)}(x) > 0 for 1 <= m <= m_max.
LemmaReport sign_ladder_suite(const std::vector<Real>& qs, const std::vector<Real>& xs, int m_max,
                              const PrecisionBudget& b = {});

/// upper > middle > lower for c < 1 and the reverse for c > 1, 0 < q < 1.
LemmaReport chain_suite(const std::vector<Real>& qs, const std::vector<Real>& cs,
                        const std::vector<Real>& xs, const PrecisionBudget& b = {});

/// n equally spaced points from lo to hi inclusive.
std::vector<Real> linspace(const Real& lo, const Real& hi, int n);

}  // namespace qpoly
