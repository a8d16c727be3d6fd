#include "qalg/parser.hpp"

#include <cctype>

#include "qalg/w_star.hpp"

namespace qalg {

ParseError::ParseError(int line, int column, const std::string& message)
    : FormatError(std::to_string(line) + ":" + std::to_string(column) + ": " + message), line_(line), column_(column) {}

namespace {

struct Token {
  enum class Kind { Int, Ident, Op, End };
  Kind kind = Kind::End;
  std::string text;
  int line = 1;
  int column = 1;
};

std::vector<Token> lex(const std::string& src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    Token tok;
    tok.line = line;
    tok.column = col;
    std::size_t j = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      tok.kind = Token::Kind::Int;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      tok.kind = Token::Kind::Ident;
    } else if (std::string("+-*/^(),").find(c) != std::string::npos) {
      j = i + 1;
      tok.kind = Token::Kind::Op;
    } else {
      throw ParseError(line, col, std::string("unexpected character '") + c + "'");
    }
    tok.text = src.substr(i, j - i);
    out.push_back(tok);
    advance(j - i);
  }
  Token end;
  end.line = line;
  end.column = col;
  out.push_back(end);
  return out;
}

bool is_function(const std::string& name, ParseOptions::Mode mode) {
  if (mode == ParseOptions::Mode::Poly) return false;
  if (name == "e") return mode == ParseOptions::Mode::QRing;
  return name == "adj" || name == "comm" || name == "sigma" || name == "translate" || name == "exp";
}

std::size_t arity(const std::string& name) {
  if (name == "comm" || name == "sigma" || name == "translate") return 2;
  return 1;
}

class Parser {
 public:
  Parser(const std::string& src, const ParseOptions& opt) : toks_(lex(src)), opt_(opt) {}

  ExprPtr parse() {
    ExprPtr e = expr();
    if (peek().kind != Token::Kind::End) fail(peek(), "unexpected '" + peek().text + "'");
    return e;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  Token next() { return toks_[pos_++]; }
  bool at_op(char c) const { return peek().kind == Token::Kind::Op && peek().text[0] == c; }
  [[noreturn]] void fail(const Token& t, const std::string& msg) const { throw ParseError(t.line, t.column, msg); }
  void expect(char c) {
    if (!at_op(c)) {
      fail(peek(), std::string("expected '") + c + "'" +
                       (peek().kind == Token::Kind::End ? " at end of input" : ", found '" + peek().text + "'"));
    }
    next();
  }

  static std::shared_ptr<Expr> node(Expr::Kind k, const Token& at) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->line = at.line;
    e->column = at.column;
    return e;
  }

  ExprPtr expr() {
    ExprPtr lhs = term();
    while (at_op('+') || at_op('-')) {
      Token op = next();
      auto e = node(op.text == "+" ? Expr::Kind::Add : Expr::Kind::Sub, op);
      e->args = {lhs, term()};
      lhs = e;
    }
    return lhs;
  }

  ExprPtr term() {
    ExprPtr lhs = unary();
    while (at_op('*') || at_op('/')) {
      Token op = next();
      auto e = node(Expr::Kind::Mul, op);
      if (op.text == "*") {
        e->args = {lhs, unary()};
      } else {
        if (peek().kind != Token::Kind::Int) fail(peek(), "division is only by integer literals");
        Token d = next();
        mpz_class den(d.text, 10);
        if (den == 0) fail(d, "division by zero");
        auto n = node(Expr::Kind::Number, d);
        n->number = Rational(1, den);
        n->number.canonicalize();
        e->args = {lhs, n};
      }
      lhs = e;
    }
    return lhs;
  }

  ExprPtr unary() {
    if (at_op('-')) {
      Token op = next();
      auto e = node(Expr::Kind::Neg, op);
      e->args = {unary()};
      return e;
    }
    return power();
  }

  ExprPtr power() {
    ExprPtr base = primary();
    if (!at_op('^')) return base;
    Token op = next();
    bool negative = false;
    if (at_op('-')) {
      next();
      negative = true;
    }
    if (peek().kind != Token::Kind::Int) fail(peek(), "exponent must be an integer");
    Token k = next();
    if (k.text.size() > 6) fail(k, "exponent too large");
    int exp = std::stoi(k.text);
    if (negative && exp != 0 && !laurent(*base)) {
      std::string what = base->kind == Expr::Kind::Atom ? "'" + atom_text(*base) + "'" : "a non-atomic base";
      fail(op, "illegal negative exponent on " + what);
    }
    auto e = node(Expr::Kind::Pow, op);
    e->exponent = negative ? -exp : exp;
    e->args = {base};
    return e;
  }

  bool laurent(const Expr& base) const {
    if (base.kind != Expr::Kind::Atom) return false;
    if (opt_.mode == ParseOptions::Mode::Poly) return opt_.laurent_vars.count(base.name) > 0;
    return base.name == "tau" || base.name == "h";
  }

  std::string atom_text(const Expr& a) const {
    if (opt_.mode == ParseOptions::Mode::Poly || a.name == "t" || a.name == "tau" || a.name == "h" || opt_.dims == 1) {
      return a.name;
    }
    return a.name + std::to_string(a.index + 1);
  }

  ExprPtr primary() {
    const Token& t = peek();
    if (t.kind == Token::Kind::Int) {
      Token tok = next();
      auto e = node(Expr::Kind::Number, tok);
      e->number = Rational(mpz_class(tok.text, 10));
      return e;
    }
    if (at_op('(')) {
      next();
      ExprPtr e = expr();
      expect(')');
      return e;
    }
    if (t.kind == Token::Kind::Ident) {
      Token tok = next();
      if (at_op('(')) {
        if (!is_function(tok.text, opt_.mode)) fail(tok, "unknown function '" + tok.text + "'");
        next();
        auto e = node(Expr::Kind::Call, tok);
        e->name = tok.text;
        e->args.push_back(expr());
        while (at_op(',')) {
          next();
          e->args.push_back(expr());
        }
        expect(')');
        if (e->args.size() != arity(tok.text)) {
          fail(tok, tok.text + " takes " + std::to_string(arity(tok.text)) + " argument" +
                        (arity(tok.text) == 1 ? "" : "s"));
        }
        return e;
      }
      return atom(tok);
    }
    if (t.kind == Token::Kind::End) fail(t, "unexpected end of input");
    fail(t, "unexpected '" + t.text + "'");
  }

  ExprPtr atom(const Token& tok) {
    auto e = node(Expr::Kind::Atom, tok);
    if (opt_.mode == ParseOptions::Mode::Poly) {
      for (const auto& v : opt_.poly_vars) {
        if (v == tok.text) {
          e->name = v;
          return e;
        }
      }
      fail(tok, "unknown identifier '" + tok.text + "'");
    }
    const std::string& s = tok.text;
    std::size_t digits = s.size();
    while (digits > 0 && std::isdigit(static_cast<unsigned char>(s[digits - 1]))) --digits;
    std::string base = s.substr(0, digits), suffix = s.substr(digits);
    if (base == "t" || base == "tau" || base == "h") {
      if (!suffix.empty()) fail(tok, "unknown identifier '" + s + "'");
      e->name = base;
      return e;
    }
    if (base == "x" || base == "xi" || base == "u") {
      int idx = 0;
      if (suffix.empty()) {
        if (opt_.dims != 1) fail(tok, "'" + s + "' needs an index 1.." + std::to_string(opt_.dims));
      } else {
        if (suffix.size() > 4 || suffix[0] == '0') fail(tok, "unknown identifier '" + s + "'");
        idx = std::stoi(suffix) - 1;
        if (idx < 0 || idx >= opt_.dims) {
          fail(tok, "index of '" + s + "' out of range 1.." + std::to_string(opt_.dims));
        }
      }
      e->name = base;
      e->index = idx;
      return e;
    }
    fail(tok, "unknown identifier '" + s + "'");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  ParseOptions opt_;
};

[[noreturn]] void fail_at(const Expr& e, const std::string& msg) { throw ParseError(e.line, e.column, msg); }

class SymbolEvaluator {
 public:
  SymbolEvaluator(int dims, PrecisionWindow window) : dims_(dims), window_(window) {}

  QElement eval(const Expr& e) const {
    switch (e.kind) {
      case Expr::Kind::Number:
        return lift(MicroSymbol::constant(dims_, e.number));
      case Expr::Kind::Atom:
        return lift(atom(e, 1));
      case Expr::Kind::Add:
        return eval(*e.args[0]) + eval(*e.args[1]);
      case Expr::Kind::Sub:
        return eval(*e.args[0]) - eval(*e.args[1]);
      case Expr::Kind::Neg:
        return QElement(dims_) - eval(*e.args[0]);
      case Expr::Kind::Mul:
        return qmul(eval(*e.args[0]), eval(*e.args[1]));
      case Expr::Kind::Pow: {
        const Expr& base = *e.args[0];
        if (base.kind == Expr::Kind::Atom && (base.name == "tau" || base.name == "h")) return lift(atom(base, e.exponent));
        QElement b = eval(base);
        QElement r = lift(MicroSymbol::constant(dims_, 1));
        for (int k = 0; k < e.exponent; ++k) r = qmul(r, b);
        return r;
      }
      case Expr::Kind::Call:
        return call(e);
    }
    fail_at(e, "unsupported expression");
  }

 private:
  QElement lift(const MicroSymbol& a) const { return QElement::term(a.truncated(window_)); }

  MicroSymbol atom(const Expr& e, int power) const {
    if (e.name == "t") return compose_power(MicroSymbol::t(dims_), power);
    if (e.name == "tau") return MicroSymbol::tau(dims_, power);
    if (e.name == "h") return MicroSymbol::hbar(dims_, power);
    MicroSymbol g = e.name == "x" ? MicroSymbol::x(dims_, e.index)
                    : e.name == "xi" ? MicroSymbol::xi(dims_, e.index)
                                     : MicroSymbol::u(dims_, e.index);
    return compose_power(g, power);
  }

  MicroSymbol plain(const Expr& e) const {
    QElement q = eval(e);
    for (const auto& [l, a] : q.components())
      if (l != 0) fail_at(e, "argument must not contain e(...) factors");
    return q.component(0);
  }

  Rational constant(const Expr& e) const {
    MicroSymbol a = plain(e);
    if (a.is_zero()) return 0;
    if (a.size() != 1 || a.terms().begin()->first != a.make_key()) fail_at(e, "expected a rational constant");
    return a.terms().begin()->second;
  }

  QElement call(const Expr& e) const {
    const std::string& f = e.name;
    if (f == "e") return QElement::term(MicroSymbol::constant(dims_, 1).truncated(window_), constant(*e.args[0]));
    if (f == "comm") {
      QElement a = eval(*e.args[0]), b = eval(*e.args[1]);
      return qmul(a, b) - qmul(b, a);
    }
    if (f == "translate") {
      QElement a = eval(*e.args[0]);
      Rational l = constant(*e.args[1]);
      QElement r(dims_);
      for (const auto& [mu, c] : a.components()) r.add(mu, translate_t(c, l));
      return r;
    }
    MicroSymbol a = plain(*e.args[0]);
    if (f == "adj") return QElement::term(adjoint(a));
    if (f == "sigma") {
      Rational k = constant(*e.args[1]);
      if (k.get_den() != 1 || !k.get_num().fits_sint_p()) fail_at(*e.args[1], "sigma degree must be an integer");
      return QElement::term(sigma(a, static_cast<int>(k.get_num().get_si())));
    }
    if (f == "exp") {
      if (a.is_zero()) return lift(MicroSymbol::constant(dims_, 1));
      if (a.window().is_exact()) fail_at(e, "exp needs a precision window (--prec)");
      if (*a.order() >= 0) fail_at(e, "exp needs an argument of negative order");
      MicroSymbol sum = MicroSymbol::constant(dims_, 1).truncated(a.window());
      MicroSymbol power = sum;
      for (int k = 1; !power.is_zero(); ++k) {
        power = (Rational(1, k) * compose(power, a)).truncated(a.window());
        sum = sum + power;
      }
      return QElement::term(sum);
    }
    fail_at(e, "unknown function '" + f + "'");
  }

  int dims_;
  PrecisionWindow window_;
};

}  // namespace

ExprPtr parse_expression(const std::string& source, const ParseOptions& options) {
  if (options.dims < 1) throw DomainError("number of variables must be positive");
  return Parser(source, options).parse();
}

QElement eval_qelement(const Expr& e, int dims, PrecisionWindow window) {
  return SymbolEvaluator(dims, window).eval(e);
}

MicroSymbol eval_symbol(const Expr& e, int dims, PrecisionWindow window) {
  QElement q = eval_qelement(e, dims, window);
  if (q.components().size() > 1 || (q.components().size() == 1 && q.components().begin()->first != 0)) {
    fail_at(e, "expression has e(...) factors");
  }
  MicroSymbol a = q.component(0);
  return a.is_zero() ? MicroSymbol(dims, window) : a;
}

SparsePoly eval_poly(const Expr& e, const std::vector<std::string>& vars) {
  switch (e.kind) {
    case Expr::Kind::Number:
      return SparsePoly::constant(vars, e.number);
    case Expr::Kind::Atom:
      return SparsePoly::variable(vars, e.name);
    case Expr::Kind::Add:
      return eval_poly(*e.args[0], vars) + eval_poly(*e.args[1], vars);
    case Expr::Kind::Sub:
      return eval_poly(*e.args[0], vars) - eval_poly(*e.args[1], vars);
    case Expr::Kind::Neg:
      return -eval_poly(*e.args[0], vars);
    case Expr::Kind::Mul:
      return eval_poly(*e.args[0], vars) * eval_poly(*e.args[1], vars);
    case Expr::Kind::Pow: {
      if (e.exponent < 0) fail_at(e, "negative exponent in a polynomial");
      SparsePoly b = eval_poly(*e.args[0], vars);
      SparsePoly r = SparsePoly::constant(vars, 1);
      for (int k = 0; k < e.exponent; ++k) r = r * b;
      return r;
    }
    case Expr::Kind::Call:
      break;
  }
  fail_at(e, "functions are not allowed here");
}

OHElement eval_oh(const Expr& e, int trunc) {
  switch (e.kind) {
    case Expr::Kind::Number:
      return OHElement::constant(KScalar(e.number, trunc));
    case Expr::Kind::Atom:
      if (e.name == "x") return OHElement::monomial(KScalar(1, trunc), 1);
      return OHElement::constant(KScalar::monomial(1, 1, trunc));
    case Expr::Kind::Add:
      return eval_oh(*e.args[0], trunc) + eval_oh(*e.args[1], trunc);
    case Expr::Kind::Sub:
      return eval_oh(*e.args[0], trunc) - eval_oh(*e.args[1], trunc);
    case Expr::Kind::Neg:
      return OHElement() - eval_oh(*e.args[0], trunc);
    case Expr::Kind::Mul:
      return eval_oh(*e.args[0], trunc) * eval_oh(*e.args[1], trunc);
    case Expr::Kind::Pow: {
      const Expr& base = *e.args[0];
      if (base.kind == Expr::Kind::Atom && base.name == "h") {
        return OHElement::constant(KScalar::monomial(1, e.exponent, trunc));
      }
      OHElement b = eval_oh(base, trunc);
      OHElement r = OHElement::constant(KScalar(1, trunc));
      for (int k = 0; k < e.exponent; ++k) r = r * b;
      return r;
    }
    case Expr::Kind::Call:
      break;
  }
  fail_at(e, "functions are not allowed here");
}

MicroSymbol parse_symbol(const std::string& source, int dims, PrecisionWindow window) {
  return eval_symbol(*parse_expression(source, ParseOptions::symbol(dims)), dims, window);
}

QElement parse_qelement(const std::string& source, int dims, PrecisionWindow window) {
  return eval_qelement(*parse_expression(source, ParseOptions::qring(dims)), dims, window);
}

SparsePoly parse_poly(const std::string& source, const std::vector<std::string>& vars) {
  return eval_poly(*parse_expression(source, ParseOptions::poly(vars)), vars);
}

OHElement parse_oh(const std::string& source, int trunc) {
  return eval_oh(*parse_expression(source, ParseOptions::poly({"x", "h"}, {"h"})), trunc);
}

std::string display_string(const MicroSymbol& a) { return DisplaySymbol::from_native(a).to_string(); }

}  // namespace qalg
