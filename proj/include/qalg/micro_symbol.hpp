#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qalg/rational.hpp"
#include "qalg/sparse_poly.hpp"

namespace qalg {

inline constexpr int kDefaultWindow = -12;

/// Lower bound L on the homogeneity degree |xi| + tau-exponent of the terms a
/// symbol is known to carry, or exact (no truncation at all).
class PrecisionWindow {
 public:
  PrecisionWindow() = default;
  static PrecisionWindow exact() { return {}; }
  static PrecisionWindow at(int lowest) { return PrecisionWindow(lowest); }

  bool is_exact() const { return !lowest_.has_value(); }
  int lowest() const { return *lowest_; }
  /// True when a term of the given degree survives truncation.
  bool keeps(int degree) const { return !lowest_ || degree >= *lowest_; }

  /// The coarser of two windows (the larger bound).
  static PrecisionWindow coarser(PrecisionWindow a, PrecisionWindow b);

  friend bool operator==(const PrecisionWindow&, const PrecisionWindow&) = default;

 private:
  explicit PrecisionWindow(int lowest) : lowest_(lowest) {}
  std::optional<int> lowest_;
};

/// Total symbol a(x, t; xi, tau) of a microdifferential operator on the chart
/// tau != 0, with hbar = tau^-1 and u = xi tau^-1.
///
/// Monomial keys are laid out as [x_1..x_n, t, xi_1..xi_n, tau]; every entry
/// is non-negative except the tau exponent.
class MicroSymbol {
 public:
  using Terms = std::map<MultiIndex, Rational, GrlexDescending>;

  explicit MicroSymbol(int dim = 1, PrecisionWindow window = PrecisionWindow::exact());

  static MicroSymbol constant(int dim, const Rational& c);
  static MicroSymbol monomial(int dim, const std::vector<int>& x, int t, const std::vector<int>& xi, int tau,
                              const Rational& c = 1);
  static MicroSymbol x(int dim, int i = 0);
  static MicroSymbol t(int dim);
  static MicroSymbol xi(int dim, int i = 0);
  static MicroSymbol tau(int dim, int power = 1);
  /// hbar = tau^-1.
  static MicroSymbol hbar(int dim, int power = 1) { return tau(dim, -power); }
  /// u_i = xi_i tau^-1.
  static MicroSymbol u(int dim, int i = 0);

  int dim() const { return dim_; }
  const Terms& terms() const { return terms_; }
  PrecisionWindow window() const { return window_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coeff(const MultiIndex& key) const;

  /// Adds c times the monomial, dropping it when below the window.
  void add_term(const MultiIndex& key, const Rational& c);

  // Key accessors.
  int x_exp(const MultiIndex& k, int i) const { return k[static_cast<std::size_t>(i)]; }
  int t_exp(const MultiIndex& k) const { return k[static_cast<std::size_t>(dim_)]; }
  int xi_exp(const MultiIndex& k, int i) const { return k[static_cast<std::size_t>(dim_ + 1 + i)]; }
  int tau_exp(const MultiIndex& k) const { return k[static_cast<std::size_t>(2 * dim_ + 1)]; }
  /// Homogeneity degree |xi| + tau-exponent.
  int degree(const MultiIndex& k) const;
  MultiIndex make_key() const { return MultiIndex(static_cast<std::size_t>(2 * dim_ + 2)); }

  /// Highest homogeneity degree; empty for the zero symbol.
  std::optional<int> order() const;
  /// Filtration level guaranteed by the data: max(order, window - 1); empty
  /// means the symbol is exactly zero.
  std::optional<int> filtration_bound() const;
  int t_degree() const;
  bool is_t_free() const { return t_degree() == 0; }
  bool has_tau_only() const;

  MicroSymbol truncated(PrecisionWindow w) const;
  MicroSymbol with_window(PrecisionWindow w) const { return truncated(w); }

  MicroSymbol operator-() const;
  friend MicroSymbol operator+(const MicroSymbol& a, const MicroSymbol& b);
  friend MicroSymbol operator-(const MicroSymbol& a, const MicroSymbol& b);
  friend MicroSymbol operator*(const Rational& c, const MicroSymbol& a);
  /// Exact equality of term maps (windows ignored).
  friend bool operator==(const MicroSymbol& a, const MicroSymbol& b) { return a.dim_ == b.dim_ && a.terms_ == b.terms_; }

  /// Native rendering, e.g. "x*xi + 1".
  std::string to_string() const;

 private:
  int dim_;
  PrecisionWindow window_;
  Terms terms_;
};

void require_same_dim(const MicroSymbol& a, const MicroSymbol& b);

/// a == b after truncating both to the coarser window.
bool equal_mod_window(const MicroSymbol& a, const MicroSymbol& b);

/// Leibniz product: sum over J, k of 1/(J! k!) d_xi^J d_tau^k a * d_x^J d_t^k b.
MicroSymbol compose(const MicroSymbol& a, const MicroSymbol& b);
MicroSymbol commutator(const MicroSymbol& a, const MicroSymbol& b);
/// Pointwise (commutative) product of symbols.
MicroSymbol symbol_product(const MicroSymbol& a, const MicroSymbol& b);
/// compose(a, ..., a), k >= 0 factors.
MicroSymbol compose_power(const MicroSymbol& a, int k);

/// Formal adjoint for the coordinate form dx ^ dt.
MicroSymbol adjoint(const MicroSymbol& a);

/// Homogeneous degree-k part. Throws PrecisionError when k is below the window.
MicroSymbol sigma(const MicroSymbol& a, int k);
/// Principal symbol. Throws DomainError on zero.
MicroSymbol principal_symbol(const MicroSymbol& a);
bool is_homogeneous(const MicroSymbol& a);

MicroSymbol d_x(const MicroSymbol& a, int i);
MicroSymbol d_xi(const MicroSymbol& a, int i);
MicroSymbol d_t(const MicroSymbol& a);
MicroSymbol d_tau(const MicroSymbol& a);

/// Poisson bracket of homogeneous symbols. Throws DomainError otherwise.
MicroSymbol poisson(const MicroSymbol& f, const MicroSymbol& g);

/// Substitution t -> t + lambda.
MicroSymbol translate_t(const MicroSymbol& a, const Rational& lambda);

/// ad(hbar)(a) = [tau^-1, a].
MicroSymbol ad_hbar(const MicroSymbol& a);
/// Least i with ad(hbar)^{i+1}(a) = 0; equals the t-degree.
int centralizer_level(const MicroSymbol& a);

/// True when a = c tau^j (1 + r) with c != 0 and order(r) < 0.
bool is_formal_unit(const MicroSymbol& a);
/// Two-sided inverse of a formal unit. For exact input the result carries
/// `target` (default kDefaultWindow); for windowed input the window is
/// L - 2j, the finest one justified by the data. Throws DomainError.
MicroSymbol invert_unit(const MicroSymbol& a, std::optional<int> target = std::nullopt);

/// b* b = 1 and sigma_0(b) = 1.
bool is_gauge(const MicroSymbol& b);
/// Formal unit of order -1 with principal symbol tau^-1 and h* = -h.
bool is_deformation_parameter(const MicroSymbol& h);

}  // namespace qalg
