#include "qalg/kscalar.hpp"

#include <algorithm>

#include "qalg/errors.hpp"

namespace qalg {

KScalar::KScalar(const Rational& c, int trunc) : trunc_(trunc) { add_term(0, c); }

KScalar KScalar::monomial(const Rational& c, int j, int trunc) {
  KScalar k(trunc);
  k.add_term(j, c);
  return k;
}

Rational KScalar::coeff(int j) const {
  auto it = terms_.find(j);
  return it == terms_.end() ? Rational(0) : it->second;
}

int KScalar::valuation() const { return terms_.empty() ? trunc_ + 1 : terms_.begin()->first; }

void KScalar::add_term(int j, const Rational& c) {
  if (j > trunc_ || qalg::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(j, c);
  if (inserted) {
    it->second.canonicalize();
  } else {
    it->second += c;
    if (qalg::is_zero(it->second)) terms_.erase(it);
  }
}

KScalar KScalar::operator-() const {
  KScalar r(trunc_);
  for (const auto& [j, c] : terms_) r.terms_.emplace(j, -c);
  return r;
}

KScalar operator+(const KScalar& a, const KScalar& b) {
  KScalar r(std::min(a.trunc_, b.trunc_));
  for (const auto& [j, c] : a.terms_) r.add_term(j, c);
  for (const auto& [j, c] : b.terms_) r.add_term(j, c);
  return r;
}

KScalar operator-(const KScalar& a, const KScalar& b) { return a + (-b); }

KScalar operator*(const KScalar& a, const KScalar& b) {
  KScalar r(std::min(a.trunc_ + b.valuation(), b.trunc_ + a.valuation()));
  for (const auto& [ja, ca] : a.terms_) {
    for (const auto& [jb, cb] : b.terms_) {
      if (ja + jb > r.trunc_) break;
      r.add_term(ja + jb, ca * cb);
    }
  }
  return r;
}

KScalar operator*(const Rational& c, const KScalar& a) {
  KScalar r(a.trunc_);
  if (is_zero(c)) return r;
  for (const auto& [j, x] : a.terms_) r.add_term(j, c * x);
  return r;
}

bool operator==(const KScalar& a, const KScalar& b) { return (a - b).is_zero(); }

KScalar KScalar::shifted(int k) const {
  KScalar r(trunc_ + k);
  for (const auto& [j, c] : terms_) r.terms_.emplace(j + k, c);
  return r;
}

KScalar KScalar::derivative() const {
  KScalar r(trunc_ - 1);
  for (const auto& [j, c] : terms_) r.add_term(j - 1, c * j);
  return r;
}

KScalar KScalar::euler() const {
  KScalar r(trunc_);
  for (const auto& [j, c] : terms_) r.add_term(j, c * j);
  return r;
}

KScalar KScalar::with_trunc(int trunc) const {
  KScalar r(trunc);
  for (const auto& [j, c] : terms_) r.add_term(j, c);
  return r;
}

bool KScalar::is_constant() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first == 0; });
}

std::string KScalar::to_string(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [j, c] : terms_) {
    std::string mono = j == 0 ? "" : (j == 1 ? var : var + "^" + std::to_string(j));
    append_term(out, c, mono);
  }
  return out;
}

KScalar kscalar_invert(const KScalar& a) {
  if (a.is_zero()) throw DomainError("cannot invert zero in k");
  const int v = a.valuation();
  const Rational lead = a.coeff(v);
  // a = lead * h^v * (1 + r), r of positive valuation, known through trunc - v.
  const int rel = a.trunc() - v;
  const int out_trunc = a.trunc() - 2 * v;
  // Solve (1 + r) * q = 1 coefficientwise: q_0 = 1, q_k = -sum_{i=1..k} r_i q_{k-i}.
  std::vector<Rational> r(static_cast<std::size_t>(rel + 1));
  for (const auto& [j, c] : a.terms()) {
    if (j - v <= rel) r[j - v] = c / lead;
  }
  std::vector<Rational> q(static_cast<std::size_t>(rel + 1));
  q[0] = 1;
  for (int k = 1; k <= rel; ++k) {
    Rational acc = 0;
    for (int i = 1; i <= k; ++i) {
      if (!is_zero(r[i])) acc -= r[i] * q[k - i];
    }
    q[k] = acc;
  }
  KScalar inv(out_trunc);
  const Rational inv_lead = 1 / lead;
  for (int k = 0; k <= rel; ++k) inv.add_term(k - v, inv_lead * q[k]);
  return inv;
}

}  // namespace qalg
