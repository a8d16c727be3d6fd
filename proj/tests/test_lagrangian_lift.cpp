#include "doctest.h"
#include "generators.hpp"
#include "qalg/errors.hpp"
#include "qalg/lagrangian_lift.hpp"

using namespace qalg;
using qalg::testing::Rng;
using qalg::testing::random_rational;
using qalg::testing::uniform;

namespace {

PowerSeries1 series(std::initializer_list<std::pair<int, Rational>> terms, int order) {
  PowerSeries1 r(order);
  for (const auto& [k, c] : terms) r = r + PowerSeries1::monomial(c, k, order);
  return r;
}

SparsePoly var(const std::string& name) { return SparsePoly::variable(relation_vars(), name); }
SparsePoly cst(const Rational& c) { return SparsePoly::constant(relation_vars(), c); }

PowerSeries1 substitute(const SparsePoly& p, const ParamCurve& c) {
  return p.evaluate(std::vector<PowerSeries1>{c.x, c.u}, PowerSeries1::constant(1, c.order()));
}

ParamCurve cusp_curve(int n) { return {series({{3, 1}}, n), series({{7, 1}, {8, 1}}, n)}; }

ParamCurve random_curve(Rng& rng, int n) {
  PowerSeries1 x(n), u(n);
  for (int k = 1; k <= n; ++k) {
    if (uniform(rng, 0, 2) == 0) x = x + PowerSeries1::monomial(random_rational(rng), k, n);
    if (uniform(rng, 0, 2) == 0) u = u + PowerSeries1::monomial(random_rational(rng), k, n);
  }
  return {x, u};
}

}  // namespace

TEST_CASE("lift_curve on the cusp-like curve") {
  LiftResult r = lift_curve(cusp_curve(11));
  CHECK(r.f == series({{10, Rational(3, 10)}, {11, Rational(3, 11)}}, 11));
  CHECK(r.f.to_string() == "3/10*s^10 + 3/11*s^11");
  CHECK_FALSE(r.member);
  CHECK(r.obstructed_degree == 11);
  CHECK_FALSE(r.certificate.has_value());
  // at N = 10 the truncated primitive is still 3/10 x u
  LiftResult r10 = lift_curve(cusp_curve(10));
  CHECK(r10.member);
  CHECK(substitute(*r10.certificate, cusp_curve(10)) == r10.f);
}

TEST_CASE("lift_curve on the diagonal and degenerate curves") {
  ParamCurve diag(series({{1, 1}}, 6), series({{1, 1}}, 6));
  LiftResult r = lift_curve(diag);
  CHECK(r.f == series({{2, Rational(1, 2)}}, 6));
  REQUIRE(r.member);
  CHECK(substitute(*r.certificate, diag) == r.f);
  CHECK(r.certificate->degree() == 2);

  ParamCurve flat(PowerSeries1(6), series({{1, 2}, {3, 1}}, 6));
  LiftResult z = lift_curve(flat);
  CHECK(z.f.is_zero());
  CHECK(z.member);
  CHECK(z.certificate->is_zero());

  CHECK_THROWS_AS(ParamCurve(series({{0, 1}}, 3), PowerSeries1(3)), DomainError);
}

TEST_CASE("check_relation examples") {
  ParamCurve c = cusp_curve(11);
  PowerSeries1 f = lift_curve(c).f;
  RelationResult r = check_relation(c, f, cst(11) * var("x") * var("u") - cst(Rational(110, 3)) * var("f"),
                                    var("s") * var("s") * var("s") * var("s") * var("s") * var("s") * var("s") *
                                        var("s") * var("s") * var("s") * var("s"));
  CHECK(r.holds);
  CHECK(r.residual.is_zero());

  ParamCurve diag(series({{1, 1}}, 6), series({{1, 1}}, 6));
  RelationResult d = check_relation(diag, lift_curve(diag).f, cst(2) * var("f") - var("x") * var("u"), cst(0));
  CHECK(d.holds);

  RelationResult wrong = check_relation(diag, lift_curve(diag).f, var("f"), var("x") * var("u"));
  CHECK_FALSE(wrong.holds);
  CHECK(wrong.residual == series({{2, Rational(-1, 2)}}, 6));

  ParamCurve small = cusp_curve(5);
  SparsePoly s11 = cst(1);
  for (int k = 0; k < 11; ++k) s11 = s11 * var("s");
  CHECK_THROWS_AS(check_relation(small, lift_curve(small).f, var("x"), s11), PrecisionError);
}

TEST_CASE("lift properties on random curves") {
  Rng rng(41);
  for (int n = 0; n < 60; ++n) {
    int order = uniform(rng, 2, 9);
    ParamCurve c = random_curve(rng, order);
    LiftResult r = lift_curve(c);
    CHECK(r.f[0] == 0);
    // f' = u x' through order N-1
    CHECK(r.f.derivative() == c.u * c.x.derivative());
    if (r.member) {
      CHECK(substitute(*r.certificate, c) == r.f);
      // membership survives lowering the truncation
      for (int k = 1; k < order; ++k) {
        ParamCurve low(c.x.truncated(k), c.u.truncated(k));
        CHECK(lift_curve(low).member);
      }
    } else {
      int k = *r.obstructed_degree;
      CHECK(k <= order);
      ParamCurve below(c.x.truncated(k - 1), c.u.truncated(k - 1));
      CHECK(lift_curve(below).member);
    }
  }
}
