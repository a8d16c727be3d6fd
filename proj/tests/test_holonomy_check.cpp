#include "doctest.h"
#include "generators.hpp"
#include "qalg/errors.hpp"
#include "qalg/holonomy_check.hpp"

using namespace qalg;
using qalg::testing::Rng;
using qalg::testing::random_kscalar;
using qalg::testing::uniform;

namespace {

KScalar k(const Rational& c, int j = 0) { return KScalar::monomial(c, j); }
OHElement xm(int i, const KScalar& c = KScalar::monomial(1, 0)) { return OHElement::monomial(c, i); }

// e_x - x^m hbar^-1 e, the image of the reduction map
OHElement image(const OHElement& e, int m) { return e.d_x() - e.times_x(m).shifted(-1); }

OHElement random_oh(Rng& rng, int max_deg) {
  OHElement g;
  int terms = uniform(rng, 1, 4);
  for (int n = 0; n < terms; ++n) g.add(uniform(rng, 0, max_deg), random_kscalar(rng, kDefaultScalarTrunc, 0, 3));
  return g;
}

}  // namespace

TEST_CASE("reduce_mod examples") {
  for (int m = 1; m <= 3; ++m) {
    ReduceResult r = reduce_mod(xm(m), m);
    CHECK(r.e == OHElement::constant(k(-1, 1)));
    CHECK(r.r.is_zero());
    OHElement low = xm(m - 1, k(2)) + xm(0, k(1, 1));
    ReduceResult l = reduce_mod(low, m);
    CHECK(l.e.is_zero());
    CHECK(l.r == low);
  }
  CHECK(reduce_mod(xm(2), 2).e.to_string() == "-h");
  CHECK_THROWS_AS(reduce_mod(xm(1), 0), DomainError);
}

TEST_CASE("reduce_mod round trip") {
  Rng rng(51);
  for (int n = 0; n < 100; ++n) {
    int m = uniform(rng, 1, 3);
    OHElement g = random_oh(rng, 7);
    ReduceResult r = reduce_mod(g, m);
    CHECK(image(r.e, m) + r.r == g);
    CHECK(r.r.degree() < m);
    if (!r.e.is_zero()) CHECK(r.e.degree() <= g.degree() - m);
    OHElement e = random_oh(rng, 4);
    CHECK(reduce_mod(image(e, m), m).r.is_zero());
  }
}

TEST_CASE("gauge_equiv") {
  CHECK(gauge_equiv(xm(2) + xm(1), xm(1), 2));
  CHECK_FALSE(gauge_equiv(xm(0), OHElement(), 2));
  CHECK(gauge_equiv(xm(1, k(3)), xm(1, k(3)), 2));
  Rng rng(52);
  for (int n = 0; n < 30; ++n) {
    int m = uniform(rng, 1, 3);
    OHElement a = random_oh(rng, 3);
    OHElement b = a + image(random_oh(rng, 3), m);
    OHElement c = b + image(random_oh(rng, 3), m);
    CHECK(gauge_equiv(a, a, m));
    CHECK(gauge_equiv(a, b, m) == gauge_equiv(b, a, m));
    CHECK(gauge_equiv(a, b, m));
    CHECK(gauge_equiv(b, c, m));
    CHECK(gauge_equiv(a, c, m));
  }
}

TEST_CASE("t structure for non-homogeneous a") {
  TStructureResult r = t_structure_exists(MaPresentation(2, xm(0) + xm(1)));
  CHECK_FALSE(r.exists);
  REQUIRE(r.conflict.has_value());
  CHECK(*r.conflict == std::make_pair(0, 1));
  CHECK(r.candidates.at(0) == k(0));
  CHECK(r.candidates.at(1) == k(1));
}

TEST_CASE("t structure for homogeneous a") {
  TStructureResult r = t_structure_exists(MaPresentation(2, xm(1, k(5))));
  CHECK(r.exists);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->e == k(1));
  CHECK(r.witness->d == k(Rational(2, 3), 1));
  CHECK(verify_t_action(MaPresentation(2, xm(1, k(5))), *r.witness).passed());

  TStructureWitness perturbed = *r.witness;
  perturbed.d = perturbed.d + k(1, 1);
  perturbed.c = perturbed.c + OHElement::constant(k(1, 1));
  Report bad = verify_t_action(MaPresentation(2, xm(1, k(5))), perturbed);
  CHECK_FALSE(bad.passed());
  CHECK(bad.first_failure()->name == "ac + b_x - x^m b d_t - [t,a] = 0");
  CHECK(bad.find("c_x + x^m = 0")->passed);

  TStructureResult z = t_structure_exists(MaPresentation(2, OHElement()));
  CHECK(z.exists);
  CHECK(z.witness->d.is_zero());
  CHECK(z.witness->b.is_zero());
  CHECK(z.witness->c == xm(3, k(Rational(-1, 3))));
}

TEST_CASE("t structure matches homogeneity on monomial pairs") {
  const std::vector<KScalar> values{k(1), k(1, 1), k(1) + k(1, 1)};
  for (int m = 1; m <= 3; ++m) {
    for (int i = 0; i < m; ++i) {
      for (const auto& ai : values) {
        MaPresentation single(m, xm(i, ai));
        TStructureResult r = t_structure_exists(single);
        CHECK(r.exists);
        CHECK(r.verification.passed());
        for (int j = i + 1; j < m; ++j) {
          for (const auto& aj : values) {
            TStructureResult pair = t_structure_exists(MaPresentation(m, xm(i, ai) + xm(j, aj)));
            CHECK_FALSE(pair.exists);
            CHECK(pair.conflict.has_value());
          }
        }
      }
    }
  }
}

TEST_CASE("reduced form of a") {
  MaPresentation p(2, xm(2) + xm(1));
  CHECK(p.a == xm(1));
}
