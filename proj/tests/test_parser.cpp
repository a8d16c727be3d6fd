#include "doctest.h"
#include "generators.hpp"
#include "qalg/micro_symbol.hpp"
#include "qalg/parser.hpp"
#include "qalg/quantization_ring.hpp"
#include "qalg/w_star.hpp"

using namespace qalg;
using qalg::testing::Rng;

namespace {

const MicroSymbol X = MicroSymbol::x(1);
const MicroSymbol XI = MicroSymbol::xi(1);
const MicroSymbol H = MicroSymbol::hbar(1);

int error_column(const std::string& src) {
  try {
    parse_symbol(src, 1);
  } catch (const ParseError& e) {
    return e.column();
  }
  return -1;
}

}  // namespace

TEST_CASE("parser examples") {
  CHECK(parse_symbol("xi*x - x*xi", 1) == MicroSymbol::constant(1, 1));
  CHECK(parse_symbol("adj(h)", 1) == -H);
  CHECK_THROWS_AS(parse_symbol("x^-1", 1), ParseError);
  CHECK_THROWS_WITH_AS(parse_symbol("x^-1", 1), doctest::Contains("illegal negative exponent"), ParseError);
}

TEST_CASE("aliases and functions") {
  CHECK(parse_symbol("h", 1) == parse_symbol("tau^-1", 1));
  CHECK(parse_symbol("u", 1) == compose(XI, H));
  CHECK(parse_symbol("comm(xi, x)", 1) == MicroSymbol::constant(1, 1));
  CHECK(parse_symbol("sigma(xi^2 + x*xi + 1, 1)", 1) == compose(X, XI));
  CHECK(parse_symbol("translate(t^2, 1/2)", 1).to_string() == "t^2 + t + 1/4");
  CHECK(parse_symbol("x1*xi2", 2) == compose(MicroSymbol::x(2, 0), MicroSymbol::xi(2, 1)));
  CHECK(parse_symbol("3/4*x - -x", 1) == Rational(7, 4) * X);
  CHECK(parse_symbol("(x + 1)^2", 1).to_string() == "x^2 + 2*x + 1");
  CHECK(parse_symbol("x/2", 1) == Rational(1, 2) * X);
}

TEST_CASE("quantization ring mode") {
  QElement q = parse_qelement("x*e(1) + e(-1/2)", 1);
  CHECK(q.to_string() == "1*e(-1/2) + x*e(1)");
  CHECK(parse_qelement(q.to_string(), 1) == q);
  CHECK(parse_qelement("e(1)*t", 1) == qmul(QElement::term(MicroSymbol::constant(1, 1), 1),
                                             QElement::term(MicroSymbol::t(1))));
  CHECK_THROWS_AS(parse_symbol("e(1)", 1), FormatError);
}

TEST_CASE("parse errors with positions") {
  CHECK(error_column("x +") == 4);
  CHECK(error_column("x + y") == 5);
  CHECK(error_column("foo(x)") == 1);
  CHECK(error_column("x^-1") == 2);
  CHECK(error_column("(x") == 3);
  CHECK_THROWS_WITH_AS(parse_symbol("y", 1), doctest::Contains("unknown identifier"), ParseError);
  CHECK_THROWS_WITH_AS(parse_symbol("foo(x)", 1), doctest::Contains("unknown function"), ParseError);
  CHECK_THROWS_AS(parse_symbol("comm(x)", 1), ParseError);
  try {
    parse_symbol("x +\n  * 2", 1);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 3);
  }
}

TEST_CASE("polynomial and hbar-module modes") {
  SparsePoly p = parse_poly("11*x*u - 110/3*f", {"x", "u", "f", "s"});
  CHECK(p.to_string() == "11*x*u - 110/3*f");
  CHECK_THROWS_AS(parse_poly("s^-1", {"s"}), ParseError);
  OHElement g = parse_oh("x^2*h + 1/2*x");
  CHECK(g.to_string() == "h*x^2 + 1/2*x");
}

TEST_CASE("parse(print(s)) = s on random normalized symbols") {
  Rng rng(0xa11ce);
  for (int n = 0; n < 200; ++n) {
    qalg::testing::SymbolShape shape;
    shape.dim = 1 + n % 2;
    shape.terms = 5;
    MicroSymbol s = qalg::testing::random_symbol(rng, shape);
    CHECK(parse_symbol(s.to_string(), shape.dim) == s);
    CHECK(parse_symbol(display_string(s), shape.dim) == s);
  }
}
