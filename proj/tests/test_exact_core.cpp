#include "doctest.h"
#include "generators.hpp"
#include "qalg/errors.hpp"
#include "qalg/kscalar.hpp"
#include "qalg/power_series.hpp"
#include "qalg/sparse_poly.hpp"

using namespace qalg;
using qalg::testing::Rng;

TEST_CASE("rational parsing and printing") {
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("-10/5")) == "-2");
  CHECK(to_string(parse_rational("0/7")) == "0");
  CHECK_THROWS_AS(parse_rational("1/0"), FormatError);
  CHECK_THROWS_AS(parse_rational("1/-2"), FormatError);
  CHECK_THROWS_AS(parse_rational("abc"), FormatError);
  CHECK(falling(-1, 3) == -6);
  CHECK(binomial(5, 2) == 10);
}

TEST_CASE("rational field axioms on random triples") {
  Rng rng(11);
  for (int n = 0; n < 200; ++n) {
    Rational a = testing::random_rational(rng, 50), b = testing::random_rational(rng, 50),
             c = testing::random_rational(rng, 50);
    CHECK(Rational((a + b) + c) == Rational(a + (b + c)));
    CHECK(Rational((a * b) * c) == Rational(a * (b * c)));
    CHECK(Rational(a * (b + c)) == Rational(a * b + a * c));
    CHECK(Rational(a + b) == Rational(b + a));
    if (!is_zero(a)) CHECK(Rational(a * (1 / a)) == 1);
    Rational q = a / Rational(7);
    CHECK(q.get_den() > 0);
    CHECK(gcd(q.get_num(), q.get_den()) == 1);
  }
}

TEST_CASE("poly_arith examples") {
  std::vector<std::string> vars{"x", "u"};
  auto x = SparsePoly::variable(vars, "x");
  auto u = SparsePoly::variable(vars, "u");
  CHECK(((x + u) * (x - u)).to_string() == "x^2 - u^2");
  CHECK((x * x * u).derivative("x").to_string() == "2*x*u");
  CHECK((x + (-x)).is_zero());
  CHECK((x + (-x)).terms().empty());
  SparsePoly other = SparsePoly::variable({"y"}, "y");
  CHECK_THROWS_AS(x + other, MismatchError);
  CHECK_THROWS_AS(x * other, MismatchError);
  CHECK_THROWS_AS(x.derivative("z"), MismatchError);
}

TEST_CASE("graded-lex printing is stable") {
  std::vector<std::string> vars{"x", "u"};
  auto x = SparsePoly::variable(vars, "x");
  auto u = SparsePoly::variable(vars, "u");
  auto one = SparsePoly::constant(vars, 1);
  CHECK((one + u + x * u + x).to_string() == "x*u + x + u + 1");
  CHECK((Rational(-3, 2) * x * x + u).to_string() == "-3/2*x^2 + u");
}

TEST_CASE("kscalar_invert examples") {
  const int N = kDefaultScalarTrunc;
  SUBCASE("hbar -> hbar^-1") {
    KScalar inv = kscalar_invert(KScalar::monomial(1, 1, N));
    CHECK(inv.terms().size() == 1);
    CHECK(inv.coeff(-1) == 1);
    CHECK(inv.valuation() == -1);
  }
  SUBCASE("1 - hbar -> geometric series") {
    KScalar a(1, N);
    a.add_term(1, -1);
    KScalar inv = kscalar_invert(a);
    CHECK(inv.trunc() >= N);
    for (int j = 0; j <= N; ++j) CHECK(inv.coeff(j) == 1);
  }
  SUBCASE("2 hbar^-1 + 1") {
    KScalar a = KScalar::monomial(2, -1, N);
    a.add_term(0, 1);
    KScalar inv = kscalar_invert(a);
    CHECK(inv.valuation() == 1);
    CHECK(inv.coeff(1) == Rational(1, 2));
    CHECK(inv.coeff(2) == Rational(-1, 4));
    // multiply back: the product is 1 through (at least) the working order
    KScalar one = a * inv;
    CHECK(one.trunc() >= N);
    CHECK(one == KScalar(1, one.trunc()));
    CHECK(one.terms().size() == 1);
  }
  CHECK_THROWS_AS(kscalar_invert(KScalar(N)), DomainError);
}

TEST_CASE("kscalar_invert property: a * inv(a) = 1") {
  Rng rng(7);
  for (int n = 0; n < 100; ++n) {
    KScalar a = testing::random_kscalar(rng);
    if (a.is_zero()) continue;
    KScalar inv = kscalar_invert(a);
    CHECK(inv.valuation() == -a.valuation());
    KScalar prod = a * inv;
    CHECK(prod.trunc() == a.trunc() - a.valuation());
    CHECK(prod.terms().size() == 1);
    CHECK(prod.coeff(0) == 1);
  }
}

TEST_CASE("kscalar precision tracking") {
  KScalar b = KScalar::monomial(3, 2, 12);
  CHECK(b.shifted(-1).trunc() == 11);
  CHECK(b.shifted(-1).coeff(1) == 3);
  CHECK(b.t_bracket().coeff(3) == 6);  // [t, 3h^2] = h^2 * 6h
  CHECK(b.euler().coeff(2) == 6);
  KScalar sum = KScalar(1, 12) + KScalar(1, 5);
  CHECK(sum.trunc() == 5);
}

TEST_CASE("series_integrate examples") {
  PowerSeries1 f({0, 0, 0, 0, 0, 0, 0, 0, 0, 3, 3}, 10);
  PowerSeries1 F = series_integrate(f);
  CHECK(F.to_string() == "3/10*s^10 + 3/11*s^11");
  CHECK(series_integrate(PowerSeries1(5)).is_zero());
  CHECK(series_integrate(PowerSeries1::constant(1, 5)).to_string() == "s");
  CHECK(series_integrate(PowerSeries1::constant(1, 5))[0] == 0);
}

TEST_CASE("series_integrate then derivative is the identity") {
  Rng rng(3);
  for (int n = 0; n < 50; ++n) {
    std::vector<Rational> c(9);
    for (auto& x : c) x = testing::random_rational(rng);
    PowerSeries1 f(c, 8);
    PowerSeries1 F = series_integrate(f);
    CHECK(F[0] == 0);
    CHECK(F.derivative() == f);
  }
}

TEST_CASE("power series arithmetic truncates to the common order") {
  PowerSeries1 a({1, 1}, 1);
  PowerSeries1 b({1, 2, 3}, 2);
  CHECK((a * b).order() == 1);
  CHECK((a * b).to_string() == "1 + 3*s");
  CHECK_THROWS_AS(PowerSeries1::constant(1, 0).derivative(), PrecisionError);
}
