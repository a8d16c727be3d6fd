#pragma once

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qalg/errors.hpp"
#include "qalg/holonomy_check.hpp"
#include "qalg/micro_symbol.hpp"
#include "qalg/quantization_ring.hpp"
#include "qalg/sparse_poly.hpp"

namespace qalg {

class ParseError : public FormatError {
 public:
  ParseError(int line, int column, const std::string& message);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

struct Expr {
  enum class Kind { Number, Atom, Add, Sub, Mul, Neg, Pow, Call };

  Kind kind = Kind::Number;
  Rational number;
  /// Atom base name (x, t, xi, tau, h, u or a polynomial variable) or function name.
  std::string name;
  /// 0-based coordinate index for indexed atoms.
  int index = 0;
  /// Exponent for Pow nodes.
  int exponent = 1;
  std::vector<std::shared_ptr<const Expr>> args;
  int line = 1;
  int column = 1;
};

using ExprPtr = std::shared_ptr<const Expr>;

struct ParseOptions {
  enum class Mode { Symbol, QRing, Poly };

  Mode mode = Mode::Symbol;
  int dims = 1;
  /// Poly mode: variable names, and those that may carry negative exponents.
  std::vector<std::string> poly_vars;
  std::set<std::string> laurent_vars;

  static ParseOptions symbol(int dims) { return {Mode::Symbol, dims, {}, {}}; }
  static ParseOptions qring(int dims) { return {Mode::QRing, dims, {}, {}}; }
  static ParseOptions poly(std::vector<std::string> vars, std::set<std::string> laurent = {}) {
    return {Mode::Poly, 1, std::move(vars), std::move(laurent)};
  }
};

/// Grammar: sums of products of powers; rationals written p/q; functions
/// adj(a), comm(a, b), sigma(a, k), translate(a, lambda), exp(a) and, in
/// quantization-ring mode, e(lambda). Throws ParseError.
ExprPtr parse_expression(const std::string& source, const ParseOptions& options);

MicroSymbol eval_symbol(const Expr& e, int dims, PrecisionWindow window = PrecisionWindow::exact());
QElement eval_qelement(const Expr& e, int dims, PrecisionWindow window = PrecisionWindow::exact());
SparsePoly eval_poly(const Expr& e, const std::vector<std::string>& vars);
/// Polynomial in x with Laurent coefficients in h.
OHElement eval_oh(const Expr& e, int trunc = kDefaultScalarTrunc);

MicroSymbol parse_symbol(const std::string& source, int dims, PrecisionWindow window = PrecisionWindow::exact());
QElement parse_qelement(const std::string& source, int dims, PrecisionWindow window = PrecisionWindow::exact());
SparsePoly parse_poly(const std::string& source, const std::vector<std::string>& vars);
OHElement parse_oh(const std::string& source, int trunc = kDefaultScalarTrunc);

/// Rendering in x, t, u, h.
std::string display_string(const MicroSymbol& a);

}  // namespace qalg
