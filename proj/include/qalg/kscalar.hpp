#pragma once

#include <map>
#include <string>

#include "qalg/rational.hpp"

namespace qalg {

inline constexpr int kDefaultScalarTrunc = 12;

/// Truncated formal Laurent series in hbar over the rationals.
///
/// A value is known modulo hbar^{trunc+1}: only exponents j <= trunc are
/// stored. Precision is tracked absolutely, so multiplying by a series of
/// valuation v shifts the known range by v, and inversion of a series of
/// valuation v is known through trunc - 2v.
class KScalar {
 public:
  using Terms = std::map<int, Rational>;

  explicit KScalar(int trunc = kDefaultScalarTrunc) : trunc_(trunc) {}
  KScalar(const Rational& c, int trunc = kDefaultScalarTrunc);

  /// c * hbar^j.
  static KScalar monomial(const Rational& c, int j, int trunc = kDefaultScalarTrunc);

  int trunc() const { return trunc_; }
  const Terms& terms() const { return terms_; }
  Rational coeff(int j) const;
  bool is_zero() const { return terms_.empty(); }
  /// Lowest stored exponent, or trunc+1 for zero.
  int valuation() const;

  void add_term(int j, const Rational& c);

  KScalar operator-() const;
  friend KScalar operator+(const KScalar& a, const KScalar& b);
  friend KScalar operator-(const KScalar& a, const KScalar& b);
  friend KScalar operator*(const KScalar& a, const KScalar& b);
  friend KScalar operator*(const Rational& c, const KScalar& a);
  friend bool operator==(const KScalar& a, const KScalar& b);

  /// Multiplication by hbar^k (exact, shifts the truncation order too).
  KScalar shifted(int k) const;
  /// d/d(hbar).
  KScalar derivative() const;
  /// hbar * d/d(hbar).
  KScalar euler() const;
  /// [t, a] = hbar^2 d/d(hbar) a: the commutator with t of an hbar-only symbol.
  KScalar t_bracket() const { return derivative().shifted(2); }
  KScalar with_trunc(int trunc) const;

  /// Pure constant (no hbar dependence within the known range).
  bool is_constant() const;

  std::string to_string(const std::string& var = "h") const;

 private:
  Terms terms_;
  int trunc_;
};

/// Inverse in the field of truncated Laurent series. Throws DomainError on 0.
KScalar kscalar_invert(const KScalar& a);

}  // namespace qalg
