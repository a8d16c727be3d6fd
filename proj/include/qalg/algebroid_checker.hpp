#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qalg/rational.hpp"
#include "qalg/report.hpp"

namespace qalg {

using Vec = std::vector<Rational>;
using Matrix = std::vector<Vec>;

/// Finite-dimensional associative algebra over Q given by structure
/// constants e_i e_j = sum_k c_ijk e_k.
class FiniteAlgebra {
 public:
  FiniteAlgebra() = default;
  FiniteAlgebra(int dim, Vec unit);

  int dim() const { return dim_; }
  const Vec& unit() const { return unit_; }
  void set_constant(int i, int j, int k, const Rational& c);

  Vec mul(const Vec& a, const Vec& b) const;
  Vec basis(int i) const;
  Vec zero() const { return Vec(static_cast<std::size_t>(dim_)); }
  /// Two-sided inverse; empty when a is not invertible.
  std::optional<Vec> inverse(const Vec& a) const;
  /// Throws DomainError unless associative and unital on basis triples.
  void validate() const;

 private:
  int dim_ = 0;
  Vec unit_;
  std::vector<std::vector<Vec>> table_;
};

struct Morphism {
  std::string name;
  int src = 0;
  int dst = 0;
  /// Phi(G): dim(dst) x dim(src).
  Matrix phi;
};

/// Finite groupoid with an algebra-valued functor Phi and lifts of
/// endomorphisms to units.
class AlgebroidInstance {
 public:
  /// Throws FormatError on malformed tables and DomainError when the
  /// groupoid, algebra or functoriality axioms fail.
  static AlgebroidInstance from_json(const std::string& text);

  const std::vector<std::string>& objects() const { return objects_; }
  const std::vector<FiniteAlgebra>& algebras() const { return algebras_; }
  const std::vector<Morphism>& morphisms() const { return morphisms_; }
  const FiniteAlgebra& algebra(int object) const { return algebras_[static_cast<std::size_t>(object)]; }
  const Morphism& morphism(int g) const { return morphisms_[static_cast<std::size_t>(g)]; }

  int identity(int object) const { return identities_[static_cast<std::size_t>(object)]; }
  /// g o h (h first).
  int compose(int g, int h) const;
  int inverse(int g) const;
  /// Morphisms src -> dst, in declaration order.
  std::vector<int> hom(int src, int dst) const;
  std::vector<int> endomorphisms(int object) const { return hom(object, object); }
  Vec apply(int g, const Vec& a) const;
  const Vec& lift(int endo) const { return lifts_.at(endo); }

  // Mutators used to build variants of an instance.
  void set_lift(int endo, Vec v) { lifts_[endo] = std::move(v); }
  void set_phi(int g, Matrix m) { morphisms_[static_cast<std::size_t>(g)].phi = std::move(m); }
  int find_morphism(const std::string& name) const;
  /// Re-runs the load-time checks.
  void validate() const;

 private:
  std::vector<std::string> objects_;
  std::vector<FiniteAlgebra> algebras_;
  std::vector<Morphism> morphisms_;
  std::vector<int> identities_;
  std::map<std::pair<int, int>, int> compose_;
  std::map<int, Vec> lifts_;
};

/// Clauses "lift-homomorphism", "inner-action" (Phi(phi) = Ad(lift(phi))) and
/// "conjugation" (lift(G phi' G^-1) = Phi(G)(lift(phi'))).
Report check_data(const AlgebroidInstance& inst);

/// Quotient hom-set Phi(p) x^{End(p)} Hom(p', p), written in the coordinates
/// a of the class [a, reference].
struct QuotientHom {
  int src = 0;
  int dst = 0;
  int reference = 0;
  int dim = 0;
};

struct QuotientResult {
  std::vector<QuotientHom> homs;
  /// Clauses "first-representative", "second-representative", "addition",
  /// "associativity" and "endomorphism-algebra".
  Report report;
  /// (hom index of the left factor, hom index of the right factor) -> class
  /// of e_i o e_j, indexed [i][j].
  std::map<std::pair<int, int>, std::vector<std::vector<Vec>>> composition;
};

QuotientResult build_quotient(const AlgebroidInstance& inst);

}  // namespace qalg
