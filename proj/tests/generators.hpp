#pragma once

// Seeded random generators shared by the property tests.

#include <random>
#include <vector>

#include "qalg/kscalar.hpp"
#include "qalg/micro_symbol.hpp"

namespace qalg::testing {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline Rational random_rational(Rng& rng, int span = 5) {
  int num = uniform(rng, -span, span);
  int den = uniform(rng, 1, 3);
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational random_nonzero_rational(Rng& rng, int span = 5) {
  Rational r;
  do {
    r = random_rational(rng, span);
  } while (is_zero(r));
  return r;
}

struct SymbolShape {
  int dim = 1;
  int terms = 4;
  int max_x = 2;
  int max_t = 3;
  int max_xi = 3;
  int min_tau = -3;
  int max_tau = 1;
};

inline MicroSymbol random_symbol(Rng& rng, const SymbolShape& shape,
                                 PrecisionWindow window = PrecisionWindow::exact()) {
  MicroSymbol s(shape.dim, window);
  int count = uniform(rng, 1, shape.terms);
  for (int n = 0; n < count; ++n) {
    std::vector<int> x(static_cast<std::size_t>(shape.dim)), xi(static_cast<std::size_t>(shape.dim));
    for (auto& e : x) e = uniform(rng, 0, shape.max_x);
    int xi_budget = uniform(rng, 0, shape.max_xi);
    for (auto& e : xi) {
      e = uniform(rng, 0, xi_budget);
      xi_budget -= e;
    }
    int t = uniform(rng, 0, shape.max_t);
    int tau = uniform(rng, shape.min_tau, shape.max_tau);
    s = s + MicroSymbol::monomial(shape.dim, x, t, xi, tau, random_nonzero_rational(rng)).truncated(window);
  }
  return s;
}

/// Homogeneous symbol of the given degree.
inline MicroSymbol random_homogeneous(Rng& rng, int dim, int degree, int terms = 3, int max_t = 2) {
  MicroSymbol s(dim);
  for (int n = 0; n < terms; ++n) {
    std::vector<int> x(static_cast<std::size_t>(dim)), xi(static_cast<std::size_t>(dim));
    for (auto& e : x) e = uniform(rng, 0, 2);
    int xi_total = 0;
    for (auto& e : xi) {
      e = uniform(rng, 0, 2);
      xi_total += e;
    }
    int t = uniform(rng, 0, max_t);
    s = s + MicroSymbol::monomial(dim, x, t, xi, degree - xi_total, random_nonzero_rational(rng));
  }
  return s;
}

inline KScalar random_kscalar(Rng& rng, int trunc = kDefaultScalarTrunc, int lo = -2, int hi = 3) {
  KScalar k(trunc);
  int count = uniform(rng, 1, 3);
  for (int n = 0; n < count; ++n) k.add_term(uniform(rng, lo, hi), random_rational(rng));
  return k;
}

}  // namespace qalg::testing
