#pragma once

#include <string>
#include <vector>

#include "qalg/micro_symbol.hpp"

namespace qalg {

/// A symbol written in the deformation-quantization variables (x, t, u, hbar)
/// with u = xi tau^-1 and hbar = tau^-1. Keys are [x_1..x_n, t, u_1..u_n, h];
/// the hbar exponent is signed and the homogeneity degree is minus it.
class DisplaySymbol {
 public:
  using Terms = std::map<MultiIndex, Rational, GrlexDescending>;

  explicit DisplaySymbol(int dim = 1, PrecisionWindow window = PrecisionWindow::exact());

  static DisplaySymbol from_native(const MicroSymbol& a);
  MicroSymbol to_native() const;

  int dim() const { return dim_; }
  PrecisionWindow window() const { return window_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int hbar_exp(const MultiIndex& k) const { return k[static_cast<std::size_t>(2 * dim_ + 1)]; }
  int degree(const MultiIndex& k) const { return -hbar_exp(k); }
  bool is_t_free() const;
  std::optional<int> filtration_bound() const;

  void add_term(const MultiIndex& key, const Rational& c);

  friend bool operator==(const DisplaySymbol& a, const DisplaySymbol& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }

  /// Rendering in x, t, u, h, e.g. "x*u + h".
  std::string to_string() const;

 private:
  int dim_;
  PrecisionWindow window_;
  Terms terms_;
};

/// Leibniz star product sum_J hbar^|J|/J! d_u^J a d_x^J b on t-free symbols.
DisplaySymbol star(const DisplaySymbol& a, const DisplaySymbol& b);
/// Same product on native symbols; throws DomainError on t-dependent input.
MicroSymbol star(const MicroSymbol& a, const MicroSymbol& b);

/// psi(a) = [t, a], the derivation in S a = a S + psi(a) realized by S -> t.
MicroSymbol skew_commute(const MicroSymbol& a);

/// t^m + b_{m-1} t^{m-1} + ... + b_0 with t-free coefficients of order <= 0.
class TMonic {
 public:
  TMonic(int degree, std::vector<MicroSymbol> coeffs);
  /// Reads a symbol that is monic of positive degree in t. Throws DomainError.
  static TMonic from_symbol(const MicroSymbol& a);

  int degree() const { return degree_; }
  const std::vector<MicroSymbol>& coeffs() const { return coeffs_; }
  const MicroSymbol& symbol() const { return symbol_; }

 private:
  int degree_;
  std::vector<MicroSymbol> coeffs_;
  MicroSymbol symbol_;
};

struct MonicDivision {
  MicroSymbol quotient;
  MicroSymbol remainder;
};

/// c = quotient o a + remainder with t-degree(remainder) < a.degree() and
/// t-degree(quotient) <= t-degree(c) - a.degree().
MonicDivision divide_monic(const MicroSymbol& c, const TMonic& a);

/// Coefficient of t^k as a t-free symbol.
MicroSymbol t_coefficient(const MicroSymbol& a, int k);

}  // namespace qalg
