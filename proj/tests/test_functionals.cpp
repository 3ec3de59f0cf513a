#include "oracles.hpp"
#include "qpoly/functionals.hpp"
#include "qpoly/qspecial.hpp"

#include <doctest.h>

#include <boost/math/constants/constants.hpp>

using namespace qpoly;
using oracle::rel_err;

namespace {

Real delta(const QPoint& p, const Real& c, int k) {
  return (psi_q_order(QPoint::make(p.q, p.x + c), k) - psi_q_order(p, k)) / c;
}

Real to_real(const Rational& r) {
  return Real(numerator(r).str()) / Real(denominator(r).str());
}

}  // namespace

TEST_CASE("structure constants") {
  auto sc = structure_constants({3, 2, 2, 1});
  CHECK(sc.alpha == Rational(1, 2));
  REQUIRE(sc.beta);
  CHECK(*sc.beta == Rational(2, 3));

  sc = structure_constants({4, 3, 3, 2});
  CHECK(sc.alpha == Rational(2, 3));
  CHECK(*sc.beta == Rational(3, 4));

  sc = structure_constants({6, 5, 4, 3});
  CHECK(sc.alpha == Rational(24 * 6, 120 * 2));

  for (int m = 1; m <= 6; ++m) {
    sc = structure_constants({m + 1, m, 1, 0});
    CHECK(sc.alpha == Rational(1, m));
    CHECK_FALSE(sc.beta);
  }
  // alpha <= 1 and beta >= alpha on every balanced quad
  for (int r = 1; r <= 8; ++r)
    for (int m = 1; m <= r; ++m)
      for (int n = 1; n <= m; ++n) {
        const int s = m + n - r;
        if (s < 1 || s > n) continue;
        sc = structure_constants({r, m, n, s});
        CHECK(sc.alpha <= 1);
        CHECK(*sc.beta >= sc.alpha);
      }
}

TEST_CASE("d constant") {
  CHECK(d_const(1, Real(0.5)) == 1);
  CHECK(d_const(4, Real(0.5)) == 3);
  CHECK(d_const(4, Real(2)) == 1);
}

TEST_CASE("index quad validation") {
  CHECK_THROWS_AS((IndexQuad{2, 3, 1, 0}.validate()), DomainError);
  CHECK_THROWS_AS((IndexQuad{0, 0, 0, 0}.validate()), DomainError);
  CHECK_THROWS_AS((IndexQuad{4, 3, 2, 2}.validate_balanced()), DomainError);
  CHECK_NOTHROW((IndexQuad{4, 3, 3, 2}.validate_balanced()));
  CHECK(IndexQuad{4, 3, 3, 2}.str() == "(4,3,3,2)");
  const QPoint p = QPoint::make(Real(0.5), Real(1));
  CHECK_THROWS_AS(F_q_fd({4, 3, 2, 2}, p, FDStep::make(Real(0.5))), DomainError);
  CHECK_THROWS_AS(FDStep::make(Real(0)), DomainError);
  CHECK_THROWS_AS(G_q_fd(0, p, FDStep::make(Real(0.5))), DomainError);
  CHECK_THROWS_AS(F_q_deriv({2, 1, 1, 0}, p), DomainError);
}

TEST_CASE("F_q_fd assembled from its definition") {
  for (double qd : {0.4, 3.0}) {
    const QPoint p = QPoint::make(Real(qd), Real(0.8));
    const Real c = Real(0.3);
    const FDStep step = FDStep::make(c);

    // (4,3,3,2): D_2 D_2 - alpha D_3 D_1
    Real want = delta(p, c, 2) * delta(p, c, 2) - Real(2) / 3 * delta(p, c, 3) * delta(p, c, 1);
    CHECK(rel_err(F_q_fd({4, 3, 3, 2}, p, step), want) < 1e-17);

    // (3,2,1,0): -D_1 D_0 - alpha (-1)^3 D_2 D_{-1}, D_{-1} = -1
    want = -delta(p, c, 1) * delta(p, c, 0) - Real(1) / 2 * delta(p, c, 2);
    CHECK(rel_err(F_q_fd({3, 2, 1, 0}, p, step), want) < 1e-17);

    // G_1 = F_{2,1,1,0} - d ln q D_0
    const Real g1 = delta(p, c, 0) * delta(p, c, 0) + delta(p, c, 1) - log(p.q) * delta(p, c, 0);
    CHECK(rel_err(G_q_fd(1, p, step), g1) < 1e-17);
  }
}

TEST_CASE("c -> 0 limits agree with the derivative forms") {
  const Real c = Real(1e-12);
  for (double qd : {0.5, 2.0}) {
    for (double xd : {0.3, 2.0}) {
      const QPoint p = QPoint::make(Real(qd), Real(xd));
      for (int m = 1; m <= 5; ++m)
        CHECK(rel_err(G_q_fd(m, p, FDStep::make(c)), G_q_deriv(m, p)) < 1e-9);
      for (IndexQuad idx : {IndexQuad{3, 2, 2, 1}, IndexQuad{4, 3, 3, 2}, IndexQuad{6, 5, 4, 3}})
        CHECK(rel_err(F_q_fd(idx, p, FDStep::make(c)), F_q_deriv(idx, p)) < 1e-9);
    }
  }
}

TEST_CASE("G_q_deriv sits on the correct side of (psi')^2 + psi''") {
  // G_1 derivative form is (psi')^2 + psi'' - ln q psi'; psi' > 0, so the
  // sign of ln q decides the direction.
  for (double qd : {0.5, 2.0}) {
    const QPoint p = QPoint::make(Real(qd), Real(1));
    const Real p1 = psi_q_deriv(p, 1).value, p2 = psi_q_deriv(p, 2).value;
    const Real g = G_q_deriv(1, p);
    CHECK(abs(g - (p1 * p1 + p2 - log(p.q) * p1)) < 1e-18);
    if (qd < 1)
      CHECK(g >= p1 * p1 + p2);
    else
      CHECK(g <= p1 * p1 + p2);
  }
}

TEST_CASE("classical F") {
  using boost::math::constants::pi;
  // (psi')^2 + psi'' at x = 1 is pi^4/36 - 2 zeta(3)
  const Real want = pow(pi<Real>(), 4) / 36 - 2 * oracle::zeta(3);
  CHECK(rel_err(F_classic({2, 1, 1, 0}, Real(1), Real(1)), want) < 1e-25);
  // t multiplies the subtracted product only
  const Real a = F_classic({4, 3, 3, 2}, Real(1.5), Real(0));
  const Real b = F_classic({4, 3, 3, 2}, Real(1.5), Real(1));
  const Real prod = psi_classical_deriv(Real(1.5), 4) * psi_classical_deriv(Real(1.5), 2);
  CHECK(rel_err(a - b, prod) < 1e-25);
}

TEST_CASE("q -> 1 limit of F_q_deriv") {
  for (IndexQuad idx : {IndexQuad{3, 2, 2, 1}, IndexQuad{4, 3, 3, 2}}) {
    const Real alpha = to_real(structure_constants(idx).alpha);
    const Real x = 2;
    const Real classic = F_classic(idx, x, alpha);
    const Real near = F_q_deriv(idx, QPoint::make(Real(0.999), x));
    const Real far = F_q_deriv(idx, QPoint::make(Real(0.99), x));
    CHECK(rel_err(near, classic) < 5e-2);
    CHECK(abs(near - classic) < abs(far - classic));
  }
}

TEST_CASE("proven functionals are positive on sample points") {
  for (double qd : {0.3, 0.7}) {
    for (double cd : {0.25, 0.75}) {
      for (double xd : {0.1, 1.0, 4.0}) {
        const QPoint p = QPoint::make(Real(qd), Real(xd));
        const FDStep step = FDStep::make(Real(cd));
        for (int m = 1; m <= 4; ++m) CHECK(G_q_fd(m, p, step) > 0);
        CHECK(F_q_fd({3, 2, 2, 1}, p, step) > 0);
        CHECK(F_q_fd({5, 4, 4, 3}, p, step) > 0);
      }
    }
  }
  // reversed step on the first two orders
  for (double cd : {1.5, 3.0}) {
    const QPoint p = QPoint::make(Real(0.5), Real(1));
    CHECK(G_q_fd(1, p, FDStep::make(Real(cd))) < 0);
    CHECK(G_q_fd(2, p, FDStep::make(Real(cd))) < 0);
  }
}

TEST_CASE("difference chain") {
  for (double qd : {0.3, 0.7}) {
    for (double xd : {0.1, 2.0}) {
      const QPoint p = QPoint::make(Real(qd), Real(xd));
      for (double cd : {0.25, 0.75}) {
        const DifferenceChain ch = difference_chain(p, FDStep::make(Real(cd)));
        CHECK(ch.upper > ch.middle);
        CHECK(ch.middle > ch.lower);
      }
      for (double cd : {1.5, 3.0}) {
        const DifferenceChain ch = difference_chain(p, FDStep::make(Real(cd)));
        CHECK(ch.upper < ch.middle);
        CHECK(ch.middle < ch.lower);
      }
      const DifferenceChain tie = difference_chain(p, FDStep::make(Real(1)));
      CHECK(rel_err(tie.upper, tie.lower) < 1e-30);
      CHECK(rel_err(tie.middle, tie.lower) < 1e-18);
    }
  }
}

TEST_CASE("fwd_diff") {
  const RealFn sq = [](const Real& x) { return x * x; };
  CHECK(fwd_diff(sq, Real(2), FDStep::make(Real(0.5))) == Real(4.5));
  CHECK(fwd_diff(sq, Real(2), FDStep::make(Real(-1))) == Real(3));
}
