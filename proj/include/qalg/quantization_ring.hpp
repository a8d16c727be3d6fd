#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qalg/micro_symbol.hpp"

namespace qalg {

/// Finite sum of a_lambda e^{lambda hbar^-1} with symbol coefficients.
class QElement {
 public:
  using Components = std::map<Rational, MicroSymbol>;

  explicit QElement(int dim = 1) : dim_(dim) {}
  /// a * e^{lambda hbar^-1}.
  static QElement term(const MicroSymbol& a, const Rational& lambda = 0);
  static QElement one(int dim) { return term(MicroSymbol::constant(dim, 1)); }

  int dim() const { return dim_; }
  const Components& components() const { return components_; }
  bool is_zero() const { return components_.empty(); }
  /// Zero symbol when lambda is not in the support.
  MicroSymbol component(const Rational& lambda) const;

  void add(const Rational& lambda, const MicroSymbol& a);

  friend QElement operator+(const QElement& p, const QElement& q);
  friend QElement operator-(const QElement& p, const QElement& q);
  friend bool operator==(const QElement& p, const QElement& q) {
    return p.dim_ == q.dim_ && p.components_ == q.components_;
  }

  /// "a1*e(l1) + a2*e(l2)" with ascending exponents; multi-term components
  /// are parenthesized.
  std::string to_string(const std::function<std::string(const MicroSymbol&)>& render) const;
  std::string to_string() const;

 private:
  int dim_;
  Components components_;
};

QElement qmul(const QElement& p, const QElement& q);
int h_centralizer_level(const QElement& p);
/// (lambda, t-free component) pairs sorted by lambda. Throws DomainError when
/// some component depends on t.
std::vector<std::pair<Rational, MicroSymbol>> split_w_tensor_r(const QElement& p);
/// Product in W (x) R: star on components, exponents add.
std::vector<std::pair<Rational, MicroSymbol>> convolve_w_tensor_r(
    const std::vector<std::pair<Rational, MicroSymbol>>& p, const std::vector<std::pair<Rational, MicroSymbol>>& q);

}  // namespace qalg
