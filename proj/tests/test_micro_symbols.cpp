#include "doctest.h"
#include "generators.hpp"
#include "qalg/errors.hpp"
#include "qalg/micro_symbol.hpp"

using namespace qalg;
using qalg::testing::Rng;

namespace {

const MicroSymbol X = MicroSymbol::x(1);
const MicroSymbol T = MicroSymbol::t(1);
const MicroSymbol XI = MicroSymbol::xi(1);
const MicroSymbol TAU = MicroSymbol::tau(1);
const MicroSymbol H = MicroSymbol::hbar(1);
const MicroSymbol U = MicroSymbol::u(1);
const MicroSymbol ONE = MicroSymbol::constant(1, 1);

MicroSymbol mono(int x, int t, int xi, int tau, Rational c = 1) { return MicroSymbol::monomial(1, {x}, t, {xi}, tau, c); }

}  // namespace

TEST_CASE("compose examples") {
  CHECK(compose(XI, X).to_string() == "x*xi + 1");
  CHECK(compose(X, XI).to_string() == "x*xi");
  // [hbar, t] = -hbar^2, cross-checked against [hbar^-1, t] = 1
  CHECK(commutator(H, T) == -mono(0, 0, 0, -2));
  CHECK(commutator(TAU, T) == ONE);
  CHECK_THROWS_AS(compose(X, MicroSymbol::x(2)), MismatchError);
}

TEST_CASE("compose against a hand-expanded Leibniz sum") {
  // xi^2 o x^2 = x^2 xi^2 + 2 * 2x * xi + (1/2) * 2 * 2
  CHECK(compose(mono(0, 0, 2, 0), mono(2, 0, 0, 0)) == mono(2, 0, 2, 0) + mono(1, 0, 1, 0, 4) + mono(0, 0, 0, 0, 2));
  // tau^-1 o t^2 = t^2 tau^-1 + (-tau^-2)(2t) + (1/2)(2 tau^-3)(2)
  CHECK(compose(H, mono(0, 2, 0, 0)) == mono(0, 2, 0, -1) - mono(0, 1, 0, -2, 2) + mono(0, 0, 0, -3, 2));
}

TEST_CASE("adjoint examples") {
  CHECK(adjoint(XI) == -XI);
  CHECK(adjoint(H) == -H);
  CHECK(adjoint(compose(X, XI)).to_string() == "-x*xi - 1");
  CHECK(adjoint(compose(X, XI)) == compose(adjoint(XI), adjoint(X)));
  CHECK(adjoint(U) == U);
  CHECK(adjoint(X) == X);
  CHECK(adjoint(T) == T);
}

TEST_CASE("order and sigma") {
  MicroSymbol a = mono(0, 0, 2, -1) + X;
  CHECK(a.order() == 1);
  CHECK(sigma(a, 1) == mono(0, 0, 2, -1));
  CHECK(sigma(commutator(XI, X), 0) == ONE);
  CHECK_FALSE(MicroSymbol(1).order().has_value());
  CHECK_THROWS_AS(principal_symbol(MicroSymbol(1)), DomainError);
  CHECK_THROWS_AS(sigma(a.truncated(PrecisionWindow::at(-2)), -3), PrecisionError);
}

TEST_CASE("poisson examples") {
  CHECK(poisson(XI, X) == ONE);
  CHECK(poisson(mono(0, 0, 2, 0), X) == 2 * XI);
  CHECK(poisson(mono(0, 0, 2, 0), X) == sigma(commutator(mono(0, 0, 2, 0), X), 1));
  CHECK(poisson(TAU, T) == ONE);
  CHECK_THROWS_AS(poisson(XI + ONE, X), DomainError);
}

TEST_CASE("translate_t examples") {
  Rational lam(3, 2);
  CHECK(translate_t(mono(0, 2, 0, 0), lam) == mono(0, 2, 0, 0) + mono(0, 1, 0, 0, 3) + mono(0, 0, 0, 0, Rational(9, 4)));
  MicroSymbol fixed = mono(1, 0, 1, -1);
  CHECK(translate_t(fixed, lam) == fixed);
  CHECK(translate_t(T, 1) - T == commutator(TAU, T));
}

TEST_CASE("translate_t equals the exponential of ad(tau)") {
  Rng rng(5);
  for (int n = 0; n < 30; ++n) {
    MicroSymbol a = testing::random_symbol(rng, {});
    Rational lam = testing::random_rational(rng);
    MicroSymbol sum(1), term = a;
    for (int k = 0; !term.is_zero(); ++k) {
      sum = sum + Rational(pow(lam, k) / factorial(k)) * term;
      term = commutator(TAU, term);
    }
    CHECK(sum == translate_t(a, lam));
  }
}

TEST_CASE("centralizer_level examples") {
  CHECK(centralizer_level(mono(2, 0, 1, 0)) == 0);
  CHECK(centralizer_level(T) == 1);
  CHECK(centralizer_level(mono(0, 3, 1, 0)) == 3);
}

TEST_CASE("centralizer_level matches iterated ad(hbar)") {
  Rng rng(9);
  for (int n = 0; n < 30; ++n) {
    MicroSymbol a = testing::random_symbol(rng, {});
    int level = 0;
    MicroSymbol it = ad_hbar(a);
    while (!it.is_zero()) {
      ++level;
      it = ad_hbar(it);
    }
    CHECK(centralizer_level(a) == (a.is_zero() ? 0 : level));
  }
}

TEST_CASE("invert_unit examples") {
  CHECK(invert_unit(H) == TAU);
  CHECK(invert_unit(H).window().is_exact());

  MicroSymbol a = ONE - mono(1, 0, 0, -1);
  MicroSymbol inv = invert_unit(a);
  // Neumann series 1 + tau^-1 x + tau^-2 x^2 + ... to the window
  for (int k = 0; k <= -kDefaultWindow; ++k) CHECK(inv.coeff(mono(k, 0, 0, -k).terms().begin()->first) == 1);
  CHECK(inv.size() == static_cast<std::size_t>(1 - kDefaultWindow));
  CHECK(equal_mod_window(compose(a, inv), ONE));
  CHECK(equal_mod_window(compose(inv, a), ONE));

  CHECK_THROWS_AS(invert_unit(X), DomainError);
  CHECK_THROWS_AS(invert_unit(MicroSymbol(1)), DomainError);
}

TEST_CASE("invert_unit on non-commuting units") {
  Rng rng(21);
  for (int n = 0; n < 20; ++n) {
    MicroSymbol r = testing::random_symbol(rng, {.terms = 3, .max_x = 2, .max_t = 1, .max_xi = 1, .min_tau = -4, .max_tau = -2});
    MicroSymbol a = Rational(3) * TAU + r;
    if (!is_formal_unit(a)) continue;
    MicroSymbol inv = invert_unit(a, -8);
    CHECK(equal_mod_window(compose(a, inv), ONE));
    CHECK(equal_mod_window(compose(inv, a), ONE));
  }
}

TEST_CASE("is_gauge examples") {
  CHECK(is_gauge(ONE));
  MicroSymbol b(1, PrecisionWindow::at(kDefaultWindow));
  // exp(hbar u) with hbar u = xi tau^-2
  for (int k = 0; k <= -kDefaultWindow; ++k) b = b + mono(0, 0, k, -2 * k, Rational(1) / factorial(k));
  CHECK(is_gauge(b));
  CHECK_FALSE(is_gauge(ONE + mono(1, 0, 0, -1)));
  CHECK_FALSE(is_gauge(X));
}

TEST_CASE("is_deformation_parameter examples") {
  CHECK(is_deformation_parameter(H));
  CHECK_FALSE(is_deformation_parameter(H + mono(0, 0, 0, -2)));
  CHECK_FALSE(is_deformation_parameter(TAU));
  CHECK_FALSE(is_deformation_parameter(mono(1, 0, 0, -1)));
  CHECK(is_deformation_parameter(H + mono(0, 0, 0, -3)));
}

TEST_CASE("associativity of compose modulo window") {
  Rng rng(1);
  PrecisionWindow w = PrecisionWindow::at(-8);
  for (int n = 0; n < 30; ++n) {
    auto a = testing::random_symbol(rng, {}, w);
    auto b = testing::random_symbol(rng, {}, w);
    auto c = testing::random_symbol(rng, {}, w);
    CHECK(equal_mod_window(compose(compose(a, b), c), compose(a, compose(b, c))));
  }
}

TEST_CASE("associativity in two dimensions, exact") {
  Rng rng(2);
  testing::SymbolShape shape{.dim = 2, .terms = 3, .max_x = 2, .max_t = 2, .max_xi = 2};
  for (int n = 0; n < 15; ++n) {
    auto a = testing::random_symbol(rng, shape);
    auto b = testing::random_symbol(rng, shape);
    auto c = testing::random_symbol(rng, shape);
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
  }
}

TEST_CASE("windows follow max(L_a + k_b, L_b + k_a)") {
  auto a = mono(0, 0, 1, 0).truncated(PrecisionWindow::at(-4));   // order 1
  auto b = mono(0, 0, 0, -2).truncated(PrecisionWindow::at(-6));  // order -2
  auto ab = compose(a, b);
  CHECK(ab.window() == PrecisionWindow::at(std::max(-4 - 2, -6 + 1)));
  CHECK(compose(X, XI).window().is_exact());
}

TEST_CASE("ad(hbar^-1) is d/dt") {
  Rng rng(4);
  for (int n = 0; n < 30; ++n) {
    auto a = testing::random_symbol(rng, {});
    CHECK(commutator(TAU, a) == d_t(a));
  }
}

TEST_CASE("translation group law and compatibility with adjoint") {
  Rng rng(6);
  for (int n = 0; n < 30; ++n) {
    auto a = testing::random_symbol(rng, {});
    Rational l = testing::random_rational(rng), m = testing::random_rational(rng);
    CHECK(translate_t(translate_t(a, l), m) == translate_t(a, l + m));
    CHECK(translate_t(adjoint(a), l) == adjoint(translate_t(a, l)));
    auto b = testing::random_symbol(rng, {});
    CHECK(translate_t(compose(a, b), l) == compose(translate_t(a, l), translate_t(b, l)));
  }
}

TEST_CASE("level-0 symbols form a subalgebra closed under adjoint") {
  Rng rng(8);
  testing::SymbolShape shape{.max_t = 0};
  for (int n = 0; n < 30; ++n) {
    auto a = testing::random_symbol(rng, shape);
    auto b = testing::random_symbol(rng, shape);
    CHECK(centralizer_level(compose(a, b)) == 0);
    CHECK(centralizer_level(adjoint(a)) == 0);
    CHECK(commutator(H, a).is_zero());
  }
}

TEST_CASE("adjoint is an involutive anti-homomorphism") {
  Rng rng(12);
  PrecisionWindow w = PrecisionWindow::at(-8);
  for (int n = 0; n < 40; ++n) {
    auto a = testing::random_symbol(rng, {}, w);
    auto b = testing::random_symbol(rng, {}, w);
    CHECK(equal_mod_window(adjoint(compose(a, b)), compose(adjoint(b), adjoint(a))));
    CHECK(adjoint(adjoint(a)) == a);
  }
  testing::SymbolShape two{.dim = 2, .terms = 3, .max_t = 2};
  for (int n = 0; n < 10; ++n) {
    auto a = testing::random_symbol(rng, two);
    auto b = testing::random_symbol(rng, two);
    CHECK(adjoint(compose(a, b)) == compose(adjoint(b), adjoint(a)));
  }
}

TEST_CASE("principal symbol of a commutator is the Poisson bracket") {
  Rng rng(13);
  for (int n = 0; n < 30; ++n) {
    int k = testing::uniform(rng, -2, 2), kp = testing::uniform(rng, -2, 2);
    auto a = testing::random_homogeneous(rng, 1, k);
    auto b = testing::random_homogeneous(rng, 1, kp);
    CHECK(sigma(commutator(a, b), k + kp - 1) == poisson(a, b));
  }
}

TEST_CASE("order of a product") {
  Rng rng(14);
  for (int n = 0; n < 30; ++n) {
    auto a = testing::random_symbol(rng, {});
    auto b = testing::random_symbol(rng, {});
    auto ab = compose(a, b);
    auto lead = symbol_product(principal_symbol(a), principal_symbol(b));
    if (lead.is_zero()) {
      CHECK((ab.is_zero() || *ab.order() < *a.order() + *b.order()));
    } else {
      CHECK(ab.order() == *a.order() + *b.order());
      CHECK(sigma(ab, *a.order() + *b.order()) == lead);
    }
  }
}
