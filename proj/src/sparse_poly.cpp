#include "qalg/sparse_poly.hpp"

#include <algorithm>

#include "qalg/errors.hpp"

namespace qalg {

Rational factorial(const MultiIndex& j) {
  Rational f = 1;
  for (int e : j.exps) f *= factorial(e);
  return f;
}

SparsePoly SparsePoly::constant(std::vector<std::string> vars, const Rational& c) {
  SparsePoly p(std::move(vars));
  p.add_term(MultiIndex(p.vars_.size()), c);
  return p;
}

SparsePoly SparsePoly::variable(std::vector<std::string> vars, const std::string& name) {
  SparsePoly p(std::move(vars));
  MultiIndex m(p.vars_.size());
  m[p.index_of(name)] = 1;
  p.add_term(m, 1);
  return p;
}

std::size_t SparsePoly::index_of(const std::string& var) const {
  auto it = std::find(vars_.begin(), vars_.end(), var);
  if (it == vars_.end()) throw MismatchError("unknown variable '" + var + "'");
  return static_cast<std::size_t>(it - vars_.begin());
}

Rational SparsePoly::coeff(const MultiIndex& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

int SparsePoly::degree() const { return terms_.empty() ? -1 : terms_.begin()->first.total(); }

void SparsePoly::add_term(const MultiIndex& m, const Rational& c) {
  if (qalg::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) {
    it->second.canonicalize();
  } else {
    it->second += c;
    if (qalg::is_zero(it->second)) terms_.erase(it);
  }
}

void SparsePoly::require_same_vars(const SparsePoly& other) const {
  if (vars_ != other.vars_) throw MismatchError("polynomials over different variable lists");
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly r(vars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

SparsePoly operator+(const SparsePoly& p, const SparsePoly& q) {
  p.require_same_vars(q);
  SparsePoly r = p;
  for (const auto& [m, c] : q.terms_) r.add_term(m, c);
  return r;
}

SparsePoly operator-(const SparsePoly& p, const SparsePoly& q) { return p + (-q); }

SparsePoly operator*(const SparsePoly& p, const SparsePoly& q) {
  p.require_same_vars(q);
  SparsePoly r(p.vars_);
  for (const auto& [mp, cp] : p.terms_) {
    for (const auto& [mq, cq] : q.terms_) {
      MultiIndex m(p.vars_.size());
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = mp[i] + mq[i];
      r.add_term(m, cp * cq);
    }
  }
  return r;
}

SparsePoly operator*(const Rational& c, const SparsePoly& p) {
  SparsePoly r(p.vars_);
  if (is_zero(c)) return r;
  for (const auto& [m, cm] : p.terms_) r.add_term(m, c * cm);
  return r;
}

bool operator==(const SparsePoly& p, const SparsePoly& q) { return p.vars_ == q.vars_ && p.terms_ == q.terms_; }

SparsePoly SparsePoly::derivative(const std::string& var) const {
  std::size_t i = index_of(var);
  SparsePoly r(vars_);
  for (const auto& [m, c] : terms_) {
    if (m[i] == 0) continue;
    MultiIndex d = m;
    d[i] -= 1;
    r.add_term(d, c * m[i]);
  }
  return r;
}

std::string SparsePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    std::string mono;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_[i];
      if (m[i] != 1) mono += "^" + std::to_string(m[i]);
    }
    append_term(out, c, mono);
  }
  return out;
}

}  // namespace qalg
