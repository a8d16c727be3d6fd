#include "qalg/micro_symbol.hpp"

#include <algorithm>
#include <functional>

#include "qalg/errors.hpp"

namespace qalg {

namespace {

// Calls f(J) for every multi-index 0 <= J <= bound (componentwise), in
// increasing |J| within each coordinate sweep.
void for_each_below(const std::vector<int>& bound, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> j(bound.size(), 0);
  while (true) {
    f(j);
    std::size_t i = 0;
    for (; i < j.size(); ++i) {
      if (j[i] < bound[i]) {
        ++j[i];
        break;
      }
      j[i] = 0;
    }
    if (i == j.size()) return;
  }
}

std::optional<int> add_opt(std::optional<int> a, std::optional<int> b) {
  if (!a || !b) return std::nullopt;
  return *a + *b;
}

}  // namespace

PrecisionWindow PrecisionWindow::coarser(PrecisionWindow a, PrecisionWindow b) {
  if (a.is_exact()) return b;
  if (b.is_exact()) return a;
  return at(std::max(a.lowest(), b.lowest()));
}

MicroSymbol::MicroSymbol(int dim, PrecisionWindow window) : dim_(dim), window_(window) {
  if (dim < 1) throw DomainError("symbol dimension must be positive");
}

MicroSymbol MicroSymbol::constant(int dim, const Rational& c) {
  MicroSymbol s(dim);
  s.add_term(s.make_key(), c);
  return s;
}

MicroSymbol MicroSymbol::monomial(int dim, const std::vector<int>& x, int t, const std::vector<int>& xi, int tau,
                                  const Rational& c) {
  MicroSymbol s(dim);
  if (static_cast<int>(x.size()) != dim || static_cast<int>(xi.size()) != dim) {
    throw MismatchError("monomial exponent vectors do not match the dimension");
  }
  MultiIndex k = s.make_key();
  for (int i = 0; i < dim; ++i) {
    k[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(i)];
    k[static_cast<std::size_t>(dim + 1 + i)] = xi[static_cast<std::size_t>(i)];
  }
  k[static_cast<std::size_t>(dim)] = t;
  k[static_cast<std::size_t>(2 * dim + 1)] = tau;
  s.add_term(k, c);
  return s;
}

MicroSymbol MicroSymbol::x(int dim, int i) {
  std::vector<int> e(static_cast<std::size_t>(dim), 0);
  e[static_cast<std::size_t>(i)] = 1;
  return monomial(dim, e, 0, std::vector<int>(static_cast<std::size_t>(dim), 0), 0);
}

MicroSymbol MicroSymbol::t(int dim) {
  std::vector<int> z(static_cast<std::size_t>(dim), 0);
  return monomial(dim, z, 1, z, 0);
}

MicroSymbol MicroSymbol::xi(int dim, int i) {
  std::vector<int> e(static_cast<std::size_t>(dim), 0);
  e[static_cast<std::size_t>(i)] = 1;
  return monomial(dim, std::vector<int>(static_cast<std::size_t>(dim), 0), 0, e, 0);
}

MicroSymbol MicroSymbol::tau(int dim, int power) {
  std::vector<int> z(static_cast<std::size_t>(dim), 0);
  return monomial(dim, z, 0, z, power);
}

MicroSymbol MicroSymbol::u(int dim, int i) {
  std::vector<int> e(static_cast<std::size_t>(dim), 0);
  e[static_cast<std::size_t>(i)] = 1;
  return monomial(dim, std::vector<int>(static_cast<std::size_t>(dim), 0), 0, e, -1);
}

Rational MicroSymbol::coeff(const MultiIndex& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? Rational(0) : it->second;
}

int MicroSymbol::degree(const MultiIndex& k) const {
  int d = tau_exp(k);
  for (int i = 0; i < dim_; ++i) d += xi_exp(k, i);
  return d;
}

void MicroSymbol::add_term(const MultiIndex& key, const Rational& c) {
  if (qalg::is_zero(c) || !window_.keeps(degree(key))) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (inserted) {
    it->second.canonicalize();
  } else {
    it->second += c;
    if (qalg::is_zero(it->second)) terms_.erase(it);
  }
}

std::optional<int> MicroSymbol::order() const {
  if (terms_.empty()) return std::nullopt;
  int best = degree(terms_.begin()->first);
  for (const auto& [k, c] : terms_) best = std::max(best, degree(k));
  return best;
}

std::optional<int> MicroSymbol::filtration_bound() const {
  auto ord = order();
  if (window_.is_exact()) return ord;
  int floor = window_.lowest() - 1;
  return ord ? std::max(*ord, floor) : floor;
}

int MicroSymbol::t_degree() const {
  int d = 0;
  for (const auto& [k, c] : terms_) d = std::max(d, t_exp(k));
  return d;
}

bool MicroSymbol::has_tau_only() const {
  for (const auto& [k, c] : terms_) {
    for (std::size_t i = 0; i + 1 < k.size(); ++i) {
      if (k[i] != 0) return false;
    }
  }
  return true;
}

MicroSymbol MicroSymbol::truncated(PrecisionWindow w) const {
  MicroSymbol r(dim_, PrecisionWindow::coarser(window_, w));
  for (const auto& [k, c] : terms_) r.add_term(k, c);
  return r;
}

MicroSymbol MicroSymbol::operator-() const {
  MicroSymbol r(dim_, window_);
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
  return r;
}

void require_same_dim(const MicroSymbol& a, const MicroSymbol& b) {
  if (a.dim() != b.dim()) {
    throw MismatchError("symbols of dimension " + std::to_string(a.dim()) + " and " + std::to_string(b.dim()));
  }
}

MicroSymbol operator+(const MicroSymbol& a, const MicroSymbol& b) {
  require_same_dim(a, b);
  MicroSymbol r(a.dim_, PrecisionWindow::coarser(a.window_, b.window_));
  for (const auto& [k, c] : a.terms_) r.add_term(k, c);
  for (const auto& [k, c] : b.terms_) r.add_term(k, c);
  return r;
}

MicroSymbol operator-(const MicroSymbol& a, const MicroSymbol& b) { return a + (-b); }

MicroSymbol operator*(const Rational& c, const MicroSymbol& a) {
  MicroSymbol r(a.dim_, a.window_);
  if (is_zero(c)) return r;
  for (const auto& [k, x] : a.terms_) r.add_term(k, c * x);
  return r;
}

bool equal_mod_window(const MicroSymbol& a, const MicroSymbol& b) { return (a - b).is_zero(); }

namespace {

// Window of a product: terms of degree >= max(L_a + k_b, L_b + k_a) are exact.
PrecisionWindow product_window(const MicroSymbol& a, const MicroSymbol& b) {
  auto fa = a.filtration_bound();
  auto fb = b.filtration_bound();
  std::optional<int> best;
  auto consider = [&best](std::optional<int> cand) {
    if (cand) best = best ? std::max(*best, *cand) : *cand;
  };
  if (!a.window().is_exact()) consider(add_opt(a.window().lowest(), fb));
  if (!b.window().is_exact()) consider(add_opt(b.window().lowest(), fa));
  return best ? PrecisionWindow::at(*best) : PrecisionWindow::exact();
}

}  // namespace

MicroSymbol compose(const MicroSymbol& a, const MicroSymbol& b) {
  require_same_dim(a, b);
  const int n = a.dim();
  MicroSymbol r(n, product_window(a, b));
  if (a.is_zero() || b.is_zero()) return r;
  std::vector<int> bound(static_cast<std::size_t>(n + 1));
  for (const auto& [ka, ca] : a.terms()) {
    const int deg_a = a.degree(ka);
    for (const auto& [kb, cb] : b.terms()) {
      const int deg_b = b.degree(kb);
      const Rational cab = ca * cb;
      // bound[0..n-1] pairs xi_i with x_i; bound[n] pairs tau with t.
      for (int i = 0; i < n; ++i) {
        bound[static_cast<std::size_t>(i)] = std::min(a.xi_exp(ka, i), b.x_exp(kb, i));
      }
      bound[static_cast<std::size_t>(n)] = b.t_exp(kb);
      for_each_below(bound, [&](const std::vector<int>& j) {
        int drop = 0;
        for (int v : j) drop += v;
        if (!r.window().keeps(deg_a + deg_b - drop)) return;
        Rational coef = cab;
        MultiIndex key = r.make_key();
        for (int i = 0; i < n; ++i) {
          const int ji = j[static_cast<std::size_t>(i)];
          const int xa = a.x_exp(ka, i), xb = b.x_exp(kb, i);
          const int ea = a.xi_exp(ka, i), eb = b.xi_exp(kb, i);
          if (ji > 0) coef *= falling(ea, ji) * falling(xb, ji) / factorial(ji);
          key[static_cast<std::size_t>(i)] = xa + xb - ji;
          key[static_cast<std::size_t>(n + 1 + i)] = ea - ji + eb;
        }
        const int k = j[static_cast<std::size_t>(n)];
        const int ta = a.tau_exp(ka), tb = b.t_exp(kb);
        if (k > 0) coef *= falling(ta, k) * falling(tb, k) / factorial(k);
        key[static_cast<std::size_t>(n)] = a.t_exp(ka) + tb - k;
        key[static_cast<std::size_t>(2 * n + 1)] = ta - k + b.tau_exp(kb);
        r.add_term(key, coef);
      });
    }
  }
  return r;
}

MicroSymbol commutator(const MicroSymbol& a, const MicroSymbol& b) { return compose(a, b) - compose(b, a); }

MicroSymbol symbol_product(const MicroSymbol& a, const MicroSymbol& b) {
  require_same_dim(a, b);
  MicroSymbol r(a.dim(), product_window(a, b));
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      MultiIndex key = ka;
      for (std::size_t i = 0; i < key.size(); ++i) key[i] += kb[i];
      r.add_term(key, ca * cb);
    }
  }
  return r;
}

MicroSymbol compose_power(const MicroSymbol& a, int k) {
  if (k < 0) throw DomainError("negative compose power");
  MicroSymbol r = MicroSymbol::constant(a.dim(), 1);
  for (int i = 0; i < k; ++i) r = compose(r, a);
  return r;
}

MicroSymbol adjoint(const MicroSymbol& a) {
  const int n = a.dim();
  MicroSymbol r(n, a.window());
  std::vector<int> bound(static_cast<std::size_t>(n + 1));
  for (const auto& [ka, ca] : a.terms()) {
    int flips = a.tau_exp(ka);
    for (int i = 0; i < n; ++i) {
      flips += a.xi_exp(ka, i);
      bound[static_cast<std::size_t>(i)] = std::min(a.xi_exp(ka, i), a.x_exp(ka, i));
    }
    bound[static_cast<std::size_t>(n)] = a.t_exp(ka);
    const Rational base = (flips % 2 == 0) ? ca : Rational(-ca);
    const int deg = a.degree(ka);
    for_each_below(bound, [&](const std::vector<int>& j) {
      int drop = 0;
      for (int v : j) drop += v;
      if (!r.window().keeps(deg - drop)) return;
      Rational coef = base;
      MultiIndex key = ka;
      for (int i = 0; i < n; ++i) {
        const int ji = j[static_cast<std::size_t>(i)];
        if (ji == 0) continue;
        coef *= falling(a.xi_exp(ka, i), ji) * falling(a.x_exp(ka, i), ji) / factorial(ji);
        key[static_cast<std::size_t>(i)] -= ji;
        key[static_cast<std::size_t>(n + 1 + i)] -= ji;
      }
      const int k = j[static_cast<std::size_t>(n)];
      if (k > 0) {
        coef *= falling(a.tau_exp(ka), k) * falling(a.t_exp(ka), k) / factorial(k);
        key[static_cast<std::size_t>(n)] -= k;
        key[static_cast<std::size_t>(2 * n + 1)] -= k;
      }
      r.add_term(key, coef);
    });
  }
  return r;
}

MicroSymbol sigma(const MicroSymbol& a, int k) {
  if (!a.window().keeps(k)) {
    throw PrecisionError("degree " + std::to_string(k) + " part lies below the precision window");
  }
  MicroSymbol r(a.dim());
  for (const auto& [key, c] : a.terms()) {
    if (a.degree(key) == k) r.add_term(key, c);
  }
  return r;
}

MicroSymbol principal_symbol(const MicroSymbol& a) {
  auto ord = a.order();
  if (!ord) throw DomainError("the zero symbol has no order");
  return sigma(a, *ord);
}

bool is_homogeneous(const MicroSymbol& a) {
  auto ord = a.order();
  if (!ord) return true;
  return std::all_of(a.terms().begin(), a.terms().end(), [&](const auto& t) { return a.degree(t.first) == *ord; });
}

namespace {

MicroSymbol partial(const MicroSymbol& a, std::size_t slot) {
  MicroSymbol r(a.dim(), a.window());
  for (const auto& [k, c] : a.terms()) {
    if (k[slot] == 0) continue;
    MultiIndex d = k;
    d[slot] -= 1;
    r.add_term(d, c * k[slot]);
  }
  return r;
}

}  // namespace

MicroSymbol d_x(const MicroSymbol& a, int i) { return partial(a, static_cast<std::size_t>(i)); }
MicroSymbol d_xi(const MicroSymbol& a, int i) { return partial(a, static_cast<std::size_t>(a.dim() + 1 + i)); }
MicroSymbol d_t(const MicroSymbol& a) { return partial(a, static_cast<std::size_t>(a.dim())); }
MicroSymbol d_tau(const MicroSymbol& a) { return partial(a, static_cast<std::size_t>(2 * a.dim() + 1)); }

MicroSymbol poisson(const MicroSymbol& f, const MicroSymbol& g) {
  require_same_dim(f, g);
  if (!is_homogeneous(f) || !is_homogeneous(g)) throw DomainError("poisson bracket needs homogeneous symbols");
  MicroSymbol r = symbol_product(d_tau(f), d_t(g)) - symbol_product(d_t(f), d_tau(g));
  for (int i = 0; i < f.dim(); ++i) {
    r = r + symbol_product(d_xi(f, i), d_x(g, i)) - symbol_product(d_x(f, i), d_xi(g, i));
  }
  return r;
}

MicroSymbol translate_t(const MicroSymbol& a, const Rational& lambda) {
  const auto slot = static_cast<std::size_t>(a.dim());
  MicroSymbol r(a.dim(), a.window());
  for (const auto& [k, c] : a.terms()) {
    const int b = k[slot];
    for (int j = 0; j <= b; ++j) {
      MultiIndex key = k;
      key[slot] = j;
      r.add_term(key, c * binomial(b, j) * pow(lambda, b - j));
    }
  }
  return r;
}

MicroSymbol ad_hbar(const MicroSymbol& a) { return commutator(MicroSymbol::hbar(a.dim()), a); }

int centralizer_level(const MicroSymbol& a) { return a.t_degree(); }

bool is_formal_unit(const MicroSymbol& a) {
  auto ord = a.order();
  if (!ord) return false;
  MicroSymbol lead = sigma(a, *ord);
  return lead.size() == 1 && lead.has_tau_only();
}

MicroSymbol invert_unit(const MicroSymbol& a, std::optional<int> target) {
  if (!is_formal_unit(a)) throw DomainError("not a formal unit: principal symbol is not c*tau^j");
  const int n = a.dim();
  const int j = *a.order();
  const MicroSymbol lead = sigma(a, j);
  const Rational lead_c = lead.terms().begin()->second;
  const MicroSymbol b0 = MicroSymbol::tau(n, -j).truncated(PrecisionWindow::exact());
  const MicroSymbol inv0 = Rational(1 / lead_c) * b0;
  // a * inv0 = 1 - s with order(s) < 0.
  const MicroSymbol s = MicroSymbol::constant(n, 1) - compose(a, inv0);
  if (s.is_zero() && a.window().is_exact()) return inv0;

  int window = target.value_or(kDefaultWindow);
  if (!a.window().is_exact()) window = std::max(window, a.window().lowest() - 2 * j);
  const PrecisionWindow inner = PrecisionWindow::at(window + j);
  const MicroSymbol s_tr = s.truncated(inner);
  MicroSymbol series = MicroSymbol::constant(n, 1).truncated(inner);
  MicroSymbol term = series;
  while (true) {
    term = compose(term, s_tr).truncated(inner);
    if (term.is_zero()) break;
    series = series + term;
  }
  return compose(inv0, series).truncated(PrecisionWindow::at(window));
}

bool is_gauge(const MicroSymbol& b) {
  auto ord = b.order();
  if (!ord || *ord != 0) return false;
  if (!(sigma(b, 0) == MicroSymbol::constant(b.dim(), 1))) return false;
  return equal_mod_window(compose(adjoint(b), b), MicroSymbol::constant(b.dim(), 1));
}

bool is_deformation_parameter(const MicroSymbol& h) {
  if (!is_formal_unit(h) || *h.order() != -1) return false;
  if (!(sigma(h, -1) == MicroSymbol::hbar(h.dim()))) return false;
  return equal_mod_window(adjoint(h), -h);
}

std::string MicroSymbol::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::string> names;
  for (int i = 0; i < dim_; ++i) names.push_back(dim_ == 1 ? "x" : "x" + std::to_string(i + 1));
  names.push_back("t");
  for (int i = 0; i < dim_; ++i) names.push_back(dim_ == 1 ? "xi" : "xi" + std::to_string(i + 1));
  names.push_back("tau");
  std::string out;
  for (const auto& [k, c] : terms_) {
    std::string mono;
    for (std::size_t i = 0; i < k.size(); ++i) {
      if (k[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[i];
      if (k[i] != 1) mono += "^" + std::to_string(k[i]);
    }
    append_term(out, c, mono);
  }
  return out;
}

}  // namespace qalg
