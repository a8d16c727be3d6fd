#include "qalg/quantization_ring.hpp"

#include <algorithm>

#include "qalg/errors.hpp"
#include "qalg/w_star.hpp"

namespace qalg {

QElement QElement::term(const MicroSymbol& a, const Rational& lambda) {
  QElement q(a.dim());
  q.add(lambda, a);
  return q;
}

MicroSymbol QElement::component(const Rational& exponent) const {
  Rational lambda = exponent;
  lambda.canonicalize();
  auto it = components_.find(lambda);
  return it == components_.end() ? MicroSymbol(dim_) : it->second;
}

void QElement::add(const Rational& exponent, const MicroSymbol& a) {
  if (a.dim() != dim_) throw MismatchError("quantization ring elements of different dimensions");
  Rational lambda = exponent;
  lambda.canonicalize();
  auto it = components_.find(lambda);
  if (it == components_.end()) {
    if (!a.is_zero()) components_.emplace(lambda, a);
    return;
  }
  it->second = it->second + a;
  if (it->second.is_zero()) components_.erase(it);
}

QElement operator+(const QElement& p, const QElement& q) {
  QElement r = p;
  for (const auto& [l, a] : q.components_) r.add(l, a);
  return r;
}

QElement operator-(const QElement& p, const QElement& q) {
  QElement r = p;
  for (const auto& [l, a] : q.components_) r.add(l, -a);
  return r;
}

std::string QElement::to_string(const std::function<std::string(const MicroSymbol&)>& render) const {
  if (components_.empty()) return "0";
  std::string out;
  for (const auto& [l, a] : components_) {
    if (!out.empty()) out += " + ";
    std::string body = render(a);
    if (a.size() > 1 || body.front() == '-') body = "(" + body + ")";
    out += body + "*e(" + qalg::to_string(l) + ")";
  }
  return out;
}

std::string QElement::to_string() const {
  return to_string([](const MicroSymbol& a) { return a.to_string(); });
}

QElement qmul(const QElement& p, const QElement& q) {
  if (p.dim() != q.dim()) throw MismatchError("quantization ring elements of different dimensions");
  QElement r(p.dim());
  for (const auto& [l, a] : p.components())
    for (const auto& [m, b] : q.components()) r.add(l + m, compose(a, translate_t(b, l)));
  return r;
}

int h_centralizer_level(const QElement& p) {
  int level = 0;
  for (const auto& [l, a] : p.components()) level = std::max(level, centralizer_level(a));
  return level;
}

std::vector<std::pair<Rational, MicroSymbol>> split_w_tensor_r(const QElement& p) {
  if (h_centralizer_level(p) != 0) throw DomainError("element does not centralize hbar");
  return {p.components().begin(), p.components().end()};
}

std::vector<std::pair<Rational, MicroSymbol>> convolve_w_tensor_r(
    const std::vector<std::pair<Rational, MicroSymbol>>& p, const std::vector<std::pair<Rational, MicroSymbol>>& q) {
  std::map<Rational, MicroSymbol> acc;
  for (const auto& [l, a] : p) {
    for (const auto& [m, b] : q) {
      MicroSymbol s = star(a, b);
      auto [it, inserted] = acc.try_emplace(l + m, s);
      if (!inserted) it->second = it->second + s;
    }
  }
  std::vector<std::pair<Rational, MicroSymbol>> out;
  for (auto& [l, a] : acc)
    if (!a.is_zero()) out.emplace_back(l, a);
  return out;
}

}  // namespace qalg
