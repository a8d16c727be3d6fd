#pragma once

#include <string>
#include <vector>

#include "qalg/rational.hpp"

namespace qalg {

/// Truncated power series c_0 + c_1 s + ... + c_N s^N in one formal variable,
/// known modulo s^{N+1}.
class PowerSeries1 {
 public:
  explicit PowerSeries1(int order = 0) : coeffs_(static_cast<std::size_t>(order + 1)) {}
  PowerSeries1(std::vector<Rational> coeffs, int order);

  static PowerSeries1 constant(const Rational& c, int order);
  static PowerSeries1 monomial(const Rational& c, int degree, int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& operator[](int k) const { return coeffs_[static_cast<std::size_t>(k)]; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const;
  /// Index of the first nonzero coefficient, or order()+1 for zero.
  int valuation() const;

  friend PowerSeries1 operator+(const PowerSeries1& a, const PowerSeries1& b);
  friend PowerSeries1 operator-(const PowerSeries1& a, const PowerSeries1& b);
  friend PowerSeries1 operator*(const PowerSeries1& a, const PowerSeries1& b);
  friend PowerSeries1 operator*(const PowerSeries1& a, const Rational& c);
  friend bool operator==(const PowerSeries1&, const PowerSeries1&) = default;

  /// d/ds; the result is known one order less.
  PowerSeries1 derivative() const;
  /// Primitive vanishing at 0; the result is known one order more.
  PowerSeries1 integrate() const;
  PowerSeries1 truncated(int order) const;

  /// Ascending powers, e.g. "3/10*s^10 + 3/11*s^11".
  std::string to_string(const std::string& var = "s") const;

 private:
  std::vector<Rational> coeffs_;
};

inline PowerSeries1 series_integrate(const PowerSeries1& f) { return f.integrate(); }

}  // namespace qalg
