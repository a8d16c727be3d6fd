#pragma once

#include <vector>

#include "qalg/micro_symbol.hpp"
#include "qalg/report.hpp"

namespace qalg {

/// a + eps b with eps^2 = 0, central, and eps* = -eps.
struct DualExtElement {
  MicroSymbol a;
  MicroSymbol b;

  DualExtElement(MicroSymbol a_, MicroSymbol b_) : a(std::move(a_)), b(std::move(b_)) {}
  explicit DualExtElement(int dim) : a(dim), b(dim) {}

  friend DualExtElement operator+(const DualExtElement& p, const DualExtElement& q) { return {p.a + q.a, p.b + q.b}; }
  friend DualExtElement operator*(const DualExtElement& p, const DualExtElement& q);
  friend bool operator==(const DualExtElement& p, const DualExtElement& q) { return p.a == q.a && p.b == q.b; }
};

DualExtElement adjoint(const DualExtElement& p);
bool equal_mod_window(const DualExtElement& p, const DualExtElement& q);

/// Derivation of W fixed by its values on x_i, u_i and hbar. The default
/// hbar image is zero, i.e. a k-linear derivation.
struct DerivationSpec {
  int dim = 1;
  std::vector<MicroSymbol> w_x;
  std::vector<MicroSymbol> w_u;
  MicroSymbol w_hbar{1};

  static DerivationSpec zero(int dim);
  /// v(x) = 0, v(u) = u, v(hbar) = hbar.
  static DerivationSpec canonical(int dim);
  /// Restriction of ad(hbar^-1 d) to the generators.
  static DerivationSpec inner(const MicroSymbol& d);
  void validate() const;
};

/// Extends the images to a t-free symbol by the Leibniz rule on normal-ordered
/// words hbar^p x^alpha u^beta.
MicroSymbol apply_derivation(const DerivationSpec& w, const MicroSymbol& a);

/// [t tau, a].
MicroSymbol canonical_v(const MicroSymbol& a);
/// ad(hbar^-1 d)(a) = hbar^-1 [d, a].
MicroSymbol ad_over_hbar(const MicroSymbol& d, const MicroSymbol& a);

/// Clauses: "relations", "leibniz", "hbar", "adjoint".
Report check_eps_morphism(const DerivationSpec& w);

/// d with ad(hbar^-1 d) = w on the generators, integration constants zero.
/// Throws DomainError when w is not k-linear or not integrable.
MicroSymbol find_inner_generator(const DerivationSpec& w);

struct PsiPrimeResult {
  Report report;
  MicroSymbol d;
};

/// Clauses: "gauge", "self-adjoint", "conjugation". Throws DomainError when b
/// is not a formal unit of order 0.
PsiPrimeResult check_psi_prime(const Rational& mu, const MicroSymbol& b);

}  // namespace qalg
