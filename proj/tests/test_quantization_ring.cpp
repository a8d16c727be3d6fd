#include "doctest.h"
#include "generators.hpp"
#include "qalg/errors.hpp"
#include "qalg/quantization_ring.hpp"

using namespace qalg;
using qalg::testing::Rng;
using qalg::testing::SymbolShape;
using qalg::testing::random_rational;
using qalg::testing::random_symbol;
using qalg::testing::uniform;

namespace {

const MicroSymbol X = MicroSymbol::x(1);
const MicroSymbol T = MicroSymbol::t(1);
const MicroSymbol XI = MicroSymbol::xi(1);
const MicroSymbol U = MicroSymbol::u(1);
const MicroSymbol ONE = MicroSymbol::constant(1, 1);

QElement random_q(Rng& rng, int max_t = 2, int support = 3) {
  SymbolShape shape;
  shape.max_t = max_t;
  shape.terms = 3;
  QElement q(1);
  int count = uniform(rng, 1, support);
  for (int n = 0; n < count; ++n) q.add(Rational(uniform(rng, -4, 4), uniform(rng, 1, 2)), random_symbol(rng, shape));
  return q;
}

}  // namespace

TEST_CASE("qmul examples") {
  Rational lambda(3, 2);
  CHECK(qmul(QElement::term(ONE, lambda), QElement::term(T)) == QElement::term(T + lambda * ONE, lambda));
  CHECK(qmul(QElement::term(X), QElement::term(XI)) == QElement::term(symbol_product(X, XI)));
  CHECK(qmul(QElement::term(ONE, 1), QElement::term(ONE, -1)) == QElement::one(1));
  CHECK_THROWS_AS(qmul(QElement::one(1), QElement::one(2)), MismatchError);
}

TEST_CASE("text form") {
  QElement p = QElement::term(X, 1) + QElement::term(U, -2);
  CHECK(p.to_string() == "xi*tau^-1*e(-2) + x*e(1)");
  CHECK(QElement::term(T + ONE, Rational(1, 2)).to_string() == "(t + 1)*e(1/2)");
  CHECK(QElement(1).to_string() == "0");
  CHECK((p - p).is_zero());
}

TEST_CASE("h_centralizer_level examples") {
  CHECK(h_centralizer_level(QElement::term(X, 5)) == 0);
  CHECK(h_centralizer_level(QElement::term(T)) == 1);
  CHECK(h_centralizer_level(QElement::term(symbol_product(T, T), 1) + QElement::term(X)) == 2);
}

TEST_CASE("split_w_tensor_r examples") {
  auto s = split_w_tensor_r(QElement::term(X, 1) + QElement::term(U, -2));
  REQUIRE(s.size() == 2);
  CHECK(s[0].first == -2);
  CHECK(s[0].second == U);
  CHECK(s[1].first == 1);
  CHECK(s[1].second == X);
  auto prod = split_w_tensor_r(qmul(QElement::term(X, 1), QElement::term(U, 1)));
  REQUIRE(prod.size() == 1);
  CHECK(prod[0].first == 2);
  CHECK(prod[0].second == symbol_product(X, U));
  auto unit = split_w_tensor_r(QElement::one(1));
  REQUIRE(unit.size() == 1);
  CHECK(unit[0].first == 0);
  CHECK(unit[0].second == ONE);
  CHECK_THROWS_AS(split_w_tensor_r(QElement::term(T)), DomainError);
}

TEST_CASE("qmul is associative and unital") {
  Rng rng(21);
  for (int n = 0; n < 40; ++n) {
    QElement p = random_q(rng), q = random_q(rng), r = random_q(rng);
    CHECK(qmul(qmul(p, q), r) == qmul(p, qmul(q, r)));
    CHECK(qmul(QElement::one(1), p) == p);
    CHECK(qmul(p, QElement::one(1)) == p);
  }
}

TEST_CASE("conjugation by e^lambda translates") {
  Rng rng(22);
  for (int n = 0; n < 40; ++n) {
    Rational lambda = random_rational(rng);
    SymbolShape shape;
    MicroSymbol a = random_symbol(rng, shape);
    QElement conj = qmul(QElement::term(ONE, lambda), qmul(QElement::term(a), QElement::term(ONE, -lambda)));
    CHECK(conj == QElement::term(translate_t(a, lambda)));
  }
}

TEST_CASE("splitting is multiplicative") {
  Rng rng(23);
  for (int n = 0; n < 40; ++n) {
    QElement p = random_q(rng, 0), q = random_q(rng, 0);
    CHECK(split_w_tensor_r(qmul(p, q)) == convolve_w_tensor_r(split_w_tensor_r(p), split_w_tensor_r(q)));
  }
}

TEST_CASE("e^lambda does not commute with t") {
  for (int l = -3; l <= 3; ++l) {
    QElement e = QElement::term(ONE, l), t = QElement::term(T);
    QElement c = qmul(e, t) - qmul(t, e);
    CHECK(c == QElement::term(Rational(l) * ONE, l));
    CHECK(c.is_zero() == (l == 0));
  }
}
