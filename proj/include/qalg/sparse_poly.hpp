#pragma once

#include <compare>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "qalg/rational.hpp"

namespace qalg {

/// Fixed-length vector of exponents. Entries are non-negative for ordinary
/// variables; the microlocal layer also stores a signed tau exponent here.
struct MultiIndex {
  std::vector<int> exps;

  MultiIndex() = default;
  explicit MultiIndex(std::size_t n) : exps(n, 0) {}
  MultiIndex(std::initializer_list<int> e) : exps(e) {}
  explicit MultiIndex(std::vector<int> e) : exps(std::move(e)) {}

  std::size_t size() const { return exps.size(); }
  int& operator[](std::size_t i) { return exps[i]; }
  int operator[](std::size_t i) const { return exps[i]; }
  int total() const { return std::accumulate(exps.begin(), exps.end(), 0); }

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  friend auto operator<=>(const MultiIndex& a, const MultiIndex& b) { return a.exps <=> b.exps; }
};

/// Graded-lex order, larger monomials first.
struct GrlexDescending {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const {
    int da = a.total(), db = b.total();
    if (da != db) return da > db;
    return a.exps > b.exps;
  }
};

/// J! for a multi-index.
Rational factorial(const MultiIndex& j);

/// Commutative polynomial over Rational in a declared ordered variable list.
class SparsePoly {
 public:
  using Terms = std::map<MultiIndex, Rational, GrlexDescending>;

  SparsePoly() = default;
  explicit SparsePoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  static SparsePoly constant(std::vector<std::string> vars, const Rational& c);
  static SparsePoly variable(std::vector<std::string> vars, const std::string& name);

  const std::vector<std::string>& vars() const { return vars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const MultiIndex& m) const;
  int degree() const;

  /// Adds c * monomial, dropping the entry if it cancels.
  void add_term(const MultiIndex& m, const Rational& c);

  SparsePoly operator-() const;
  friend SparsePoly operator+(const SparsePoly& p, const SparsePoly& q);
  friend SparsePoly operator-(const SparsePoly& p, const SparsePoly& q);
  friend SparsePoly operator*(const SparsePoly& p, const SparsePoly& q);
  friend SparsePoly operator*(const Rational& c, const SparsePoly& p);
  friend bool operator==(const SparsePoly&, const SparsePoly&);

  SparsePoly derivative(const std::string& var) const;
  std::size_t index_of(const std::string& var) const;

  /// Evaluates with each variable replaced by the matching value. Value must
  /// form a commutative ring with construction from Rational.
  template <class Value>
  Value evaluate(const std::vector<Value>& values, const Value& one) const;

  std::string to_string() const;

 private:
  void require_same_vars(const SparsePoly& other) const;

  std::vector<std::string> vars_;
  Terms terms_;
};

template <class Value>
Value SparsePoly::evaluate(const std::vector<Value>& values, const Value& one) const {
  Value acc = one * Rational(0);
  for (const auto& [m, c] : terms_) {
    Value term = one * c;
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (int k = 0; k < m[i]; ++k) term = term * values[i];
    }
    acc = acc + term;
  }
  return acc;
}

}  // namespace qalg
