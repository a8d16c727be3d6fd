#include "qalg/derivations_ext.hpp"

#include <algorithm>
#include <random>

#include "qalg/errors.hpp"
#include "qalg/w_star.hpp"

namespace qalg {

DualExtElement operator*(const DualExtElement& p, const DualExtElement& q) {
  return {compose(p.a, q.a), compose(p.a, q.b) + compose(p.b, q.a)};
}

DualExtElement adjoint(const DualExtElement& p) { return {adjoint(p.a), -adjoint(p.b)}; }

bool equal_mod_window(const DualExtElement& p, const DualExtElement& q) {
  return equal_mod_window(p.a, q.a) && equal_mod_window(p.b, q.b);
}

DerivationSpec DerivationSpec::zero(int dim) {
  DerivationSpec w;
  w.dim = dim;
  w.w_x.assign(static_cast<std::size_t>(dim), MicroSymbol(dim));
  w.w_u.assign(static_cast<std::size_t>(dim), MicroSymbol(dim));
  w.w_hbar = MicroSymbol(dim);
  return w;
}

DerivationSpec DerivationSpec::canonical(int dim) {
  DerivationSpec w = zero(dim);
  for (int i = 0; i < dim; ++i) w.w_u[static_cast<std::size_t>(i)] = MicroSymbol::u(dim, i);
  w.w_hbar = MicroSymbol::hbar(dim);
  return w;
}

DerivationSpec DerivationSpec::inner(const MicroSymbol& d) {
  DerivationSpec w = zero(d.dim());
  for (int i = 0; i < d.dim(); ++i) {
    w.w_x[static_cast<std::size_t>(i)] = ad_over_hbar(d, MicroSymbol::x(d.dim(), i));
    w.w_u[static_cast<std::size_t>(i)] = ad_over_hbar(d, MicroSymbol::u(d.dim(), i));
  }
  return w;
}

void DerivationSpec::validate() const {
  if (dim < 1) throw DomainError("derivation dimension must be positive");
  if (static_cast<int>(w_x.size()) != dim || static_cast<int>(w_u.size()) != dim) {
    throw MismatchError("derivation needs one image per generator");
  }
  auto check = [this](const MicroSymbol& s) {
    if (s.dim() != dim) throw MismatchError("derivation image of the wrong dimension");
    if (!s.is_t_free()) throw DomainError("derivation images must be t-free");
  };
  for (const auto& s : w_x) check(s);
  for (const auto& s : w_u) check(s);
  check(w_hbar);
}

namespace {

// Pointwise monomial x^alpha u^beta in display variables, as a native symbol.
MicroSymbol xu_monomial(int dim, const std::vector<int>& alpha, const std::vector<int>& beta) {
  DisplaySymbol d(dim);
  MultiIndex key(static_cast<std::size_t>(2 * dim + 2));
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    key[i] = alpha[i];
    key[static_cast<std::size_t>(dim) + 1 + i] = beta[i];
  }
  d.add_term(key, 1);
  return d.to_native();
}

std::optional<int> image_shift(const DerivationSpec& w) {
  std::optional<int> shift;
  auto consider = [&shift](const MicroSymbol& s, int base) {
    if (auto o = s.filtration_bound()) shift = std::max(shift.value_or(*o - base), *o - base);
  };
  for (const auto& s : w.w_x) consider(s, 0);
  for (const auto& s : w.w_u) consider(s, 0);
  consider(w.w_hbar, -1);
  return shift;
}

}  // namespace

MicroSymbol apply_derivation(const DerivationSpec& w, const MicroSymbol& a) {
  w.validate();
  if (a.dim() != w.dim) throw MismatchError("derivation applied to a symbol of another dimension");
  if (!a.is_t_free()) throw DomainError("derivations act on t-free symbols");
  const int n = w.dim;
  const auto un = static_cast<std::size_t>(n);
  MicroSymbol out(n);
  const DisplaySymbol da = DisplaySymbol::from_native(a.truncated(PrecisionWindow::exact()));
  for (const auto& [key, c] : da.terms()) {
    std::vector<int> alpha(un), beta(un);
    for (std::size_t i = 0; i < un; ++i) {
      alpha[i] = key[i];
      beta[i] = key[un + 1 + i];
    }
    const int p = key[2 * un + 1];
    MicroSymbol inner(n);
    // generators in order x_1^a1 .. x_n^an u_1^b1 .. u_n^bn
    std::vector<int> pre_a(un, 0), pre_b(un, 0);
    for (int slot = 0; slot < 2 * n; ++slot) {
      const bool is_x = slot < n;
      const auto g = static_cast<std::size_t>(is_x ? slot : slot - n);
      const int count = is_x ? alpha[g] : beta[g];
      const MicroSymbol& image = is_x ? w.w_x[g] : w.w_u[g];
      for (int r = 0; r < count; ++r) {
        std::vector<int> suf_a(un), suf_b(un);
        for (std::size_t i = 0; i < un; ++i) {
          suf_a[i] = alpha[i] - pre_a[i];
          suf_b[i] = beta[i] - pre_b[i];
        }
        (is_x ? suf_a : suf_b)[g] -= 1;
        if (!image.is_zero()) {
          inner = inner + star(star(xu_monomial(n, pre_a, pre_b), image), xu_monomial(n, suf_a, suf_b));
        }
        (is_x ? pre_a : pre_b)[g] += 1;
      }
    }
    MicroSymbol term = symbol_product(MicroSymbol::hbar(n, p), inner);
    if (p != 0 && !w.w_hbar.is_zero()) {
      term = term + Rational(p) * symbol_product(symbol_product(MicroSymbol::hbar(n, p - 1), w.w_hbar),
                                                 xu_monomial(n, alpha, beta));
    }
    out = out + c * term;
  }
  if (a.window().is_exact()) return out;
  return out.truncated(PrecisionWindow::at(a.window().lowest() + image_shift(w).value_or(0)));
}

MicroSymbol canonical_v(const MicroSymbol& a) {
  const int n = a.dim();
  std::vector<int> zero(static_cast<std::size_t>(n), 0);
  return commutator(MicroSymbol::monomial(n, zero, 1, zero, 1), a);
}

MicroSymbol ad_over_hbar(const MicroSymbol& d, const MicroSymbol& a) {
  return symbol_product(MicroSymbol::hbar(d.dim(), -1), commutator(d, a));
}

namespace {

std::vector<MicroSymbol> generators(int n) {
  std::vector<MicroSymbol> g;
  for (int i = 0; i < n; ++i) g.push_back(MicroSymbol::x(n, i));
  for (int i = 0; i < n; ++i) g.push_back(MicroSymbol::u(n, i));
  g.push_back(MicroSymbol::hbar(n));
  return g;
}

// Deterministic sample of t-free symbols of degree <= 3 in x and u.
std::vector<MicroSymbol> samples(int n, int count) {
  std::mt19937_64 rng(0x5eed);
  auto pick = [&rng](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  std::vector<MicroSymbol> out;
  const auto un = static_cast<std::size_t>(n);
  for (int s = 0; s < count; ++s) {
    DisplaySymbol d(n);
    int terms = pick(1, 3);
    for (int k = 0; k < terms; ++k) {
      MultiIndex key(2 * un + 2);
      int budget = pick(0, 3);
      for (std::size_t i = 0; i < 2 * un + 1 && budget > 0; ++i) {
        if (i == un) continue;
        int e = pick(0, budget);
        key[i] = e;
        budget -= e;
      }
      key[2 * un + 1] = pick(-1, 2);
      d.add_term(key, Rational(pick(1, 5), pick(1, 3)) * (pick(0, 1) ? 1 : -1));
    }
    out.push_back(d.to_native());
  }
  return out;
}

}  // namespace

Report check_eps_morphism(const DerivationSpec& w) {
  w.validate();
  const int n = w.dim;
  const auto un = static_cast<std::size_t>(n);
  Report report;

  std::string failed;
  for (std::size_t i = 0; i < un && failed.empty(); ++i) {
    for (std::size_t j = 0; j < un && failed.empty(); ++j) {
      const MicroSymbol xi = MicroSymbol::x(n, static_cast<int>(i)), xj = MicroSymbol::x(n, static_cast<int>(j));
      const MicroSymbol ui = MicroSymbol::u(n, static_cast<int>(i)), uj = MicroSymbol::u(n, static_cast<int>(j));
      if (!(commutator(w.w_x[i], xj) + commutator(xi, w.w_x[j])).is_zero()) failed = "[x,x]";
      else if (!(commutator(w.w_u[i], uj) + commutator(ui, w.w_u[j])).is_zero()) failed = "[u,u]";
      else if (!(commutator(w.w_u[i], xj) + commutator(ui, w.w_x[j]) == (i == j ? w.w_hbar : MicroSymbol(n))))
        failed = "[u,x] = hbar";
    }
  }
  report.add("relations", failed.empty(), failed.empty() ? "" : "relation " + failed + " not preserved");

  const MicroSymbol h = MicroSymbol::hbar(n);
  auto phi = [&](const MicroSymbol& a) { return DualExtElement(a, symbol_product(h, apply_derivation(w, a))); };

  std::vector<MicroSymbol> sample = generators(n);
  for (auto& s : samples(n, 20)) sample.push_back(s);
  bool leibniz = true;
  for (std::size_t i = 0; i < sample.size() && leibniz; ++i)
    for (std::size_t j = 0; j < sample.size() && leibniz; ++j)
      leibniz = phi(compose(sample[i], sample[j])) == phi(sample[i]) * phi(sample[j]);
  report.add("leibniz", leibniz, leibniz ? "" : "phi(ab) != phi(a)phi(b) on a sample pair");

  bool hbar_ok = w.w_hbar == h;
  report.add("hbar", hbar_ok, hbar_ok ? "" : "phi(hbar) != hbar + eps hbar^2");

  bool adj = true;
  for (std::size_t i = 0; i < sample.size() && adj; ++i) adj = phi(adjoint(sample[i])) == adjoint(phi(sample[i]));
  report.add("adjoint", adj, adj ? "" : "phi(a*) != phi(a)* on a sample");
  return report;
}

namespace {

// Poincare antiderivative: the symbol F with d_{var_i} F = forms[i] when the
// forms are closed, built from F = sum_i int_0^1 forms_i(s y) y_i ds over the
// chosen display variables (x when use_x, else u).
MicroSymbol radial_antiderivative(int n, const std::vector<MicroSymbol>& forms, bool use_x) {
  const auto un = static_cast<std::size_t>(n);
  DisplaySymbol acc(n);
  for (std::size_t i = 0; i < un; ++i) {
    DisplaySymbol f = DisplaySymbol::from_native(forms[i]);
    for (const auto& [key, c] : f.terms()) {
      const std::size_t base = use_x ? 0 : un + 1;
      int deg = 0;
      for (std::size_t k = 0; k < un; ++k) deg += key[base + k];
      MultiIndex raised = key;
      raised[base + i] += 1;
      acc.add_term(raised, c / Rational(deg + 1));
    }
  }
  return acc.to_native();
}

MicroSymbol display_derivative(const MicroSymbol& a, std::size_t slot) {
  DisplaySymbol d = DisplaySymbol::from_native(a);
  DisplaySymbol r(a.dim(), a.window());
  for (const auto& [key, c] : d.terms()) {
    if (key[slot] == 0) continue;
    MultiIndex lowered = key;
    lowered[slot] -= 1;
    r.add_term(lowered, c * key[slot]);
  }
  return r.to_native();
}

}  // namespace

MicroSymbol find_inner_generator(const DerivationSpec& w) {
  w.validate();
  if (!w.w_hbar.is_zero()) throw DomainError("inner derivations vanish on hbar");
  const int n = w.dim;
  const auto un = static_cast<std::size_t>(n);
  // ad(hbar^-1 e)(x_i) = d_{u_i} e
  MicroSymbol e = radial_antiderivative(n, w.w_x, false);
  for (std::size_t i = 0; i < un; ++i) {
    if (!(display_derivative(e, un + 1 + i) == w.w_x[i])) throw DomainError("derivation is not integrable");
  }
  std::vector<MicroSymbol> rest;
  for (std::size_t i = 0; i < un; ++i) {
    MicroSymbol r = w.w_u[i] - ad_over_hbar(e, MicroSymbol::u(n, static_cast<int>(i)));
    for (std::size_t j = 0; j < un; ++j) {
      if (!display_derivative(r, un + 1 + j).is_zero()) throw DomainError("derivation is not integrable");
    }
    rest.push_back(-r);
  }
  // ad(hbar^-1 d)(u_i) = -d_{x_i} d for u-free d
  MicroSymbol d = radial_antiderivative(n, rest, true);
  for (std::size_t i = 0; i < un; ++i) {
    if (!(display_derivative(d, i) == rest[i])) throw DomainError("derivation is not integrable");
  }
  return e + d;
}

PsiPrimeResult check_psi_prime(const Rational& mu, const MicroSymbol& b) {
  if (!is_formal_unit(b) || b.order() != 0) throw DomainError("b must be a formal unit of order 0");
  const int n = b.dim();
  Report report;
  report.add("gauge", is_gauge(b), "");
  if (!report.clauses.back().passed) report.clauses.back().detail = "b* b != 1 or sigma_0(b) != 1";

  const MicroSymbol b_inv = invert_unit(b);
  MicroSymbol d = mu * MicroSymbol::constant(n, 1) +
                  symbol_product(MicroSymbol::hbar(n), compose(canonical_v(b), b_inv));
  bool self_adj = equal_mod_window(adjoint(d), d);
  report.add("self-adjoint", self_adj, self_adj ? "" : "d* != d");

  bool conj = true;
  for (const MicroSymbol& g : generators(n)) {
    MicroSymbol lhs = canonical_v(g) - compose(compose(b, canonical_v(compose(compose(b_inv, g), b))), b_inv);
    if (!equal_mod_window(lhs, ad_over_hbar(d, g))) {
      conj = false;
      break;
    }
  }
  report.add("conjugation", conj, conj ? "" : "v - Ad(b) v Ad(b)^-1 != ad(hbar^-1 d) on a generator");
  return {report, d};
}

}  // namespace qalg
