#include "oracles.hpp"
#include "qpoly/analysis_props.hpp"
#include "qpoly/property_suites.hpp"

#include <doctest.h>

using namespace qpoly;
using oracle::rel_err;

TEST_CASE("h'' against a second difference of h") {
  for (double yd : {0.2, 0.7}) {
    for (double cd : {0.3, 2.5}) {
      const RatioParams pr = RatioParams::make(Real(yd), Real(cd));
      for (double zd : {0.4, 1.0, 3.0}) {
        const Real z = zd, e = Real(1e-10);
        auto h = [&](const Real& t) { return h_second_deriv(t, pr).h; };
        const Real dd = (h(z + e) - 2 * h(z) + h(z - e)) / (e * e);
        const HValue v = h_second_deriv(z, pr);
        CHECK(v.h == log((1 - pow(pr.y, z * pr.c)) / (1 - pow(pr.y, z))));
        CHECK(rel_err(v.h_dd, dd) < 1e-12);
        if (cd < 1)
          CHECK(v.h_dd <= 0);
        else
          CHECK(v.h_dd >= 0);
      }
    }
  }
}

TEST_CASE("ratio parameters") {
  CHECK_THROWS_AS(RatioParams::make(Real(1), Real(0.5)), DomainError);
  CHECK_THROWS_AS(RatioParams::make(Real(0.5), Real(1)), DomainError);
  CHECK_THROWS_AS(RatioParams::make(Real(0.5), Real(-1)), DomainError);
}

TEST_CASE("ratio inequality and its reversal") {
  for (double qd : {1.5, 2.0, 10.0}) {
    for (double cd : {0.25, 0.75, 1.5, 3.0}) {
      const LemmaReport rep = verify_ratio_ineq(12, Real(qd), Real(cd));
      CHECK(rep.pass());
      CHECK(rep.checks > 0);
    }
  }
  // q < 1 is mapped to 1/q
  CHECK(verify_ratio_ineq(9, Real(0.5), Real(0.4)).pass());
  // c = 1 is the tie case
  const LemmaReport tie = verify_ratio_ineq(8, Real(2), Real(1));
  CHECK(tie.pass());
  CHECK(tie.equality_count > 0);
}

TEST_CASE("ratio inequality by hand for n = 2") {
  // j = 1: w_1^2 >= c w_2 with w_j = (1-q^{-jc})/(1-q^{-j})
  const Real q = 3, c = Real(0.5);
  auto w = [&](int j) { return (1 - pow(q, -j * c)) / (1 - pow(q, -j)); };
  CHECK(w(1) * w(1) > c * w(2));
  CHECK(verify_ratio_ineq(2, q, c).pass());
}

TEST_CASE("weight function") {
  CHECK(rel_err(weight_u(Real(0.5)), Real(0.5) * pow(log(Real(0.5)), 2) / Real(0.25)) < 1e-30);
  Real prev = 0;
  for (int i = 1; i < 200; ++i) {
    const Real u = Real(i) / 200;
    const Real v = weight_u(u);
    CHECK(v > prev);
    prev = v;
  }
  CHECK(weight_u(Real("0.999999")) < 1);
  CHECK(verify_weight_monotone(1000).pass());
  CHECK_THROWS_AS(weight_u(Real(1)), DomainError);
}

TEST_CASE("h-convexity sweep") {
  const LemmaReport rep = verify_h_convexity({Real(0.1), Real(0.9)}, {Real(0.5), Real(2)},
                                             {Real(0.1), Real(1), Real(10)});
  CHECK(rep.pass());
  CHECK(rep.checks == 12);
}

TEST_CASE("property suites") {
  CHECK(reflection_suite({Real(1.5), Real(10)}, linspace(Real(0.1), Real(10), 7), 1e-18).pass());
  CHECK(sign_ladder_suite({Real(0.5), Real(3)}, {Real(0.2), Real(4)}, 5).pass());
  CHECK(chain_suite({Real(0.3)}, {Real(0.25), Real(3)}, {Real(0.1), Real(2)}).pass());
  const auto xs = linspace(Real(0.1), Real(5), 20);
  CHECK(xs.size() == 20);
  CHECK(xs.front() == Real(0.1));
  CHECK(xs.back() == Real(5));
}
