#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "qalg/kscalar.hpp"
#include "qalg/report.hpp"

namespace qalg {

/// Polynomial in x with truncated Laurent-hbar coefficients: an element of
/// the hbar-part of O^hbar, realized as the t- and d_x-free symbols.
class OHElement {
 public:
  using Coeffs = std::map<int, KScalar>;

  OHElement() = default;
  static OHElement monomial(const KScalar& c, int i);
  static OHElement constant(const KScalar& c) { return monomial(c, 0); }

  const Coeffs& coeffs() const { return coeffs_; }
  /// Zero (at the given truncation) when x^i is absent.
  KScalar coeff(int i, int trunc = kDefaultScalarTrunc) const;
  /// -1 for zero.
  int degree() const;
  bool is_zero() const { return coeffs_.empty(); }
  /// Smallest coefficient truncation; kDefaultScalarTrunc for zero.
  int trunc() const;

  void add(int i, const KScalar& c);

  friend OHElement operator+(const OHElement& a, const OHElement& b);
  friend OHElement operator-(const OHElement& a, const OHElement& b);
  friend OHElement operator*(const OHElement& a, const OHElement& b);
  friend OHElement operator*(const KScalar& c, const OHElement& a);
  /// Equal within the known precision of every coefficient.
  friend bool operator==(const OHElement& a, const OHElement& b) { return (a - b).is_zero(); }

  OHElement d_x() const;
  OHElement times_x(int k) const;
  /// Multiplication by hbar^k.
  OHElement shifted(int k) const;
  /// [t, f] = hbar^2 d/d(hbar) f.
  OHElement t_bracket() const;

  /// e.g. "5*x" or "x^2 + h*x^2 + h".
  std::string to_string() const;

 private:
  Coeffs coeffs_;
};

struct ReduceResult {
  OHElement e;
  OHElement r;
};

/// g = e_x - x^m hbar^-1 e + r with deg_x r < m and deg_x e <= deg_x g - m.
ReduceResult reduce_mod(const OHElement& g, int m);
bool gauge_equiv(const OHElement& a, const OHElement& b, int m);

/// M_a: generators v1, v2 with d_x v1 = 0 and (d_x - x^m d_t) v2 = a v1.
struct MaPresentation {
  int m = 1;
  OHElement a;

  MaPresentation(int m_, OHElement a_);
};

/// t v1 = 0, t v2 = b v1 + c v2.
struct TStructureWitness {
  KScalar e;
  KScalar d;
  OHElement b;
  OHElement c;
};

/// Clauses "[T,x] = 0", "[T,d_t] = -1", "[T,d_x] v1 = 0",
/// "c_x + x^m = 0" and "ac + b_x - x^m b d_t - [t,a] = 0".
Report verify_t_action(const MaPresentation& p, const TStructureWitness& w);

struct TStructureResult {
  bool exists = false;
  std::optional<TStructureWitness> witness;
  Report verification;
  /// First pair of x-exponents whose candidates conflict.
  std::optional<std::pair<int, int>> conflict;
  std::map<int, KScalar> candidates;
};

/// Decides whether M_a carries an endomorphism t with [t,x] = [t,d_x] = 0 and
/// [t,d_t] = -1, building and verifying a witness on success. Throws
/// PrecisionError when the truncation cannot separate the candidates.
TStructureResult t_structure_exists(const MaPresentation& p);

}  // namespace qalg
