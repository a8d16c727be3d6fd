#include "qalg/w_star.hpp"

#include <algorithm>
#include <functional>

#include "qalg/errors.hpp"

namespace qalg {

DisplaySymbol::DisplaySymbol(int dim, PrecisionWindow window) : dim_(dim), window_(window) {
  if (dim < 1) throw DomainError("symbol dimension must be positive");
}

DisplaySymbol DisplaySymbol::from_native(const MicroSymbol& a) {
  DisplaySymbol d(a.dim(), a.window());
  const auto n = static_cast<std::size_t>(a.dim());
  for (const auto& [k, c] : a.terms()) {
    MultiIndex key = k;
    int xi_total = 0;
    for (std::size_t i = 0; i < n; ++i) xi_total += k[n + 1 + i];
    // x^a t^b xi^c tau^j = x^a t^b u^c hbar^{-j-|c|}
    key[2 * n + 1] = -k[2 * n + 1] - xi_total;
    d.terms_.emplace(key, c);
  }
  return d;
}

MicroSymbol DisplaySymbol::to_native() const {
  MicroSymbol a(dim_, window_);
  const auto n = static_cast<std::size_t>(dim_);
  for (const auto& [k, c] : terms_) {
    MultiIndex key = k;
    int u_total = 0;
    for (std::size_t i = 0; i < n; ++i) u_total += k[n + 1 + i];
    key[2 * n + 1] = -k[2 * n + 1] - u_total;
    a.add_term(key, c);
  }
  return a;
}

bool DisplaySymbol::is_t_free() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [this](const auto& t) { return t.first[static_cast<std::size_t>(dim_)] == 0; });
}

std::optional<int> DisplaySymbol::filtration_bound() const {
  std::optional<int> ord;
  for (const auto& [k, c] : terms_) ord = ord ? std::max(*ord, degree(k)) : degree(k);
  if (window_.is_exact()) return ord;
  int floor = window_.lowest() - 1;
  return ord ? std::max(*ord, floor) : floor;
}

void DisplaySymbol::add_term(const MultiIndex& key, const Rational& c) {
  if (qalg::is_zero(c) || !window_.keeps(degree(key))) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (inserted) {
    it->second.canonicalize();
  } else {
    it->second += c;
    if (qalg::is_zero(it->second)) terms_.erase(it);
  }
}

std::string DisplaySymbol::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::string> names;
  for (int i = 0; i < dim_; ++i) names.push_back(dim_ == 1 ? "x" : "x" + std::to_string(i + 1));
  names.push_back("t");
  for (int i = 0; i < dim_; ++i) names.push_back(dim_ == 1 ? "u" : "u" + std::to_string(i + 1));
  names.push_back("h");
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

namespace {

PrecisionWindow display_product_window(const DisplaySymbol& a, const DisplaySymbol& b) {
  std::optional<int> best;
  auto consider = [&best](PrecisionWindow w, std::optional<int> other) {
    if (w.is_exact() || !other) return;
    int cand = w.lowest() + *other;
    best = best ? std::max(*best, cand) : cand;
  };
  consider(a.window(), b.filtration_bound());
  consider(b.window(), a.filtration_bound());
  return best ? PrecisionWindow::at(*best) : PrecisionWindow::exact();
}

}  // namespace

DisplaySymbol star(const DisplaySymbol& a, const DisplaySymbol& b) {
  if (a.dim() != b.dim()) throw MismatchError("star of symbols with different dimensions");
  if (!a.is_t_free() || !b.is_t_free()) throw DomainError("star product is defined on t-free symbols only");
  const auto n = static_cast<std::size_t>(a.dim());
  DisplaySymbol r(a.dim(), display_product_window(a, b));
  std::vector<int> j(n);
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      std::vector<int> bound(n);
      for (std::size_t i = 0; i < n; ++i) bound[i] = std::min(ka[n + 1 + i], kb[i]);
      std::fill(j.begin(), j.end(), 0);
      while (true) {
        Rational coef = ca * cb;
        MultiIndex key(2 * n + 2);
        int order_j = 0;
        for (std::size_t i = 0; i < n; ++i) {
          if (j[i] > 0) coef *= falling(ka[n + 1 + i], j[i]) * falling(kb[i], j[i]) / factorial(j[i]);
          key[i] = ka[i] + kb[i] - j[i];
          key[n + 1 + i] = ka[n + 1 + i] - j[i] + kb[n + 1 + i];
          order_j += j[i];
        }
        key[2 * n + 1] = ka[2 * n + 1] + kb[2 * n + 1] + order_j;
        r.add_term(key, coef);
        std::size_t i = 0;
        for (; i < n; ++i) {
          if (j[i] < bound[i]) {
            ++j[i];
            break;
          }
          j[i] = 0;
        }
        if (i == n) break;
      }
    }
  }
  return r;
}

MicroSymbol star(const MicroSymbol& a, const MicroSymbol& b) {
  return star(DisplaySymbol::from_native(a), DisplaySymbol::from_native(b)).to_native();
}

MicroSymbol skew_commute(const MicroSymbol& a) { return commutator(MicroSymbol::t(a.dim()), a); }

MicroSymbol t_coefficient(const MicroSymbol& a, int k) {
  MicroSymbol r(a.dim(), a.window());
  const auto slot = static_cast<std::size_t>(a.dim());
  for (const auto& [key, c] : a.terms()) {
    if (key[slot] != k) continue;
    MultiIndex stripped = key;
    stripped[slot] = 0;
    r.add_term(stripped, c);
  }
  return r;
}

TMonic::TMonic(int degree, std::vector<MicroSymbol> coeffs)
    : degree_(degree), coeffs_(std::move(coeffs)), symbol_(coeffs_.empty() ? 1 : coeffs_.front().dim()) {
  if (degree_ < 1) throw DomainError("t-monic operator needs degree >= 1");
  if (static_cast<int>(coeffs_.size()) != degree_) {
    throw DomainError("t-monic operator of degree m needs exactly m lower coefficients");
  }
  const int n = coeffs_.front().dim();
  std::vector<int> zero(static_cast<std::size_t>(n), 0);
  symbol_ = MicroSymbol::monomial(n, zero, degree_, zero, 0);
  for (int i = 0; i < degree_; ++i) {
    const MicroSymbol& b = coeffs_[static_cast<std::size_t>(i)];
    require_same_dim(b, symbol_);
    if (!b.is_t_free()) throw DomainError("t-monic coefficients must be t-free");
    if (auto ord = b.order(); ord && *ord > 0) throw DomainError("t-monic coefficients must have order <= 0");
    symbol_ = symbol_ + symbol_product(b, MicroSymbol::monomial(n, zero, i, zero, 0));
  }
}

TMonic TMonic::from_symbol(const MicroSymbol& a) {
  const int m = a.t_degree();
  if (m < 1) throw DomainError("symbol is not of positive degree in t");
  if (!(t_coefficient(a, m) == MicroSymbol::constant(a.dim(), 1))) {
    throw DomainError("leading t-coefficient is not 1");
  }
  std::vector<MicroSymbol> coeffs;
  for (int i = 0; i < m; ++i) coeffs.push_back(t_coefficient(a, i).truncated(PrecisionWindow::exact()));
  return TMonic(m, std::move(coeffs));
}

MonicDivision divide_monic(const MicroSymbol& c, const TMonic& a) {
  require_same_dim(c, a.symbol());
  const int n = c.dim();
  const int m = a.degree();
  std::vector<int> zero(static_cast<std::size_t>(n), 0);
  MicroSymbol quotient(n);
  MicroSymbol remainder = c;
  while (remainder.t_degree() >= m) {
    const int top = remainder.t_degree();
    MicroSymbol step = symbol_product(t_coefficient(remainder, top).truncated(PrecisionWindow::exact()),
                                      MicroSymbol::monomial(n, zero, top - m, zero, 0));
    quotient = quotient + step;
    remainder = remainder - compose(step, a.symbol());
    if (remainder.t_degree() >= top) throw Error("division failed to lower the t-degree");
  }
  return {quotient.truncated(c.window()), remainder};
}

}  // namespace qalg
