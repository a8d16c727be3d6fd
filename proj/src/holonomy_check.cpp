#include "qalg/holonomy_check.hpp"

#include <algorithm>
#include <vector>

#include "qalg/errors.hpp"

namespace qalg {

OHElement OHElement::monomial(const KScalar& c, int i) {
  OHElement r;
  r.add(i, c);
  return r;
}

KScalar OHElement::coeff(int i, int trunc) const {
  auto it = coeffs_.find(i);
  return it == coeffs_.end() ? KScalar(trunc) : it->second;
}

int OHElement::degree() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }

int OHElement::trunc() const {
  if (coeffs_.empty()) return kDefaultScalarTrunc;
  int t = coeffs_.begin()->second.trunc();
  for (const auto& [i, c] : coeffs_) t = std::min(t, c.trunc());
  return t;
}

void OHElement::add(int i, const KScalar& c) {
  if (i < 0) throw DomainError("negative power of x");
  auto it = coeffs_.find(i);
  KScalar sum = it == coeffs_.end() ? c : it->second + c;
  if (sum.is_zero()) {
    if (it != coeffs_.end()) coeffs_.erase(it);
    return;
  }
  coeffs_.insert_or_assign(i, sum);
}

OHElement operator+(const OHElement& a, const OHElement& b) {
  OHElement r = a;
  for (const auto& [i, c] : b.coeffs_) r.add(i, c);
  return r;
}

OHElement operator-(const OHElement& a, const OHElement& b) {
  OHElement r = a;
  for (const auto& [i, c] : b.coeffs_) r.add(i, -c);
  return r;
}

OHElement operator*(const OHElement& a, const OHElement& b) {
  OHElement r;
  for (const auto& [i, c] : a.coeffs_)
    for (const auto& [j, d] : b.coeffs_) r.add(i + j, c * d);
  return r;
}

OHElement operator*(const KScalar& c, const OHElement& a) {
  OHElement r;
  for (const auto& [i, d] : a.coeffs_) r.add(i, c * d);
  return r;
}

OHElement OHElement::d_x() const {
  OHElement r;
  for (const auto& [i, c] : coeffs_)
    if (i > 0) r.add(i - 1, Rational(i) * c);
  return r;
}

OHElement OHElement::times_x(int k) const {
  OHElement r;
  for (const auto& [i, c] : coeffs_) r.add(i + k, c);
  return r;
}

OHElement OHElement::shifted(int k) const {
  OHElement r;
  for (const auto& [i, c] : coeffs_) r.add(i, c.shifted(k));
  return r;
}

OHElement OHElement::t_bracket() const {
  OHElement r;
  for (const auto& [i, c] : coeffs_) r.add(i, c.t_bracket());
  return r;
}

std::string OHElement::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    const auto& [i, c] = *it;
    for (const auto& [j, q] : c.terms()) {
      std::string mono;
      if (j != 0) mono = j == 1 ? "h" : "h^" + std::to_string(j);
      if (i != 0) {
        if (!mono.empty()) mono += "*";
        mono += i == 1 ? "x" : "x^" + std::to_string(i);
      }
      append_term(out, q, mono);
    }
  }
  return out;
}

ReduceResult reduce_mod(const OHElement& g, int m) {
  if (m < 1) throw DomainError("m must be positive");
  ReduceResult res;
  const int top = g.degree() - m;
  const int trunc = g.trunc();
  std::vector<KScalar> e(static_cast<std::size_t>(std::max(top, -1) + 2), KScalar(trunc));
  for (int j = top; j >= 0; --j) {
    KScalar next = j + m + 1 <= top ? e[static_cast<std::size_t>(j + m + 1)] : KScalar(trunc);
    e[static_cast<std::size_t>(j)] = (Rational(j + m + 1) * next - g.coeff(j + m, trunc)).shifted(1);
  }
  for (int j = 0; j <= top; ++j) res.e.add(j, e[static_cast<std::size_t>(j)]);
  for (int i = 0; i < m; ++i) {
    KScalar next = i + 1 <= top ? e[static_cast<std::size_t>(i + 1)] : KScalar(trunc);
    res.r.add(i, g.coeff(i, trunc) - Rational(i + 1) * next);
  }
  return res;
}

bool gauge_equiv(const OHElement& a, const OHElement& b, int m) { return reduce_mod(a - b, m).r.is_zero(); }

MaPresentation::MaPresentation(int m_, OHElement a_) : m(m_), a(std::move(a_)) {
  if (m < 1) throw DomainError("m must be positive");
  if (a.degree() >= m) a = reduce_mod(a, m).r;
}

namespace {

// f1 v1 + f2 v2 in the free decomposition of M_a.
struct ModElem {
  OHElement f1, f2;
  friend ModElem operator-(const ModElem& p, const ModElem& q) { return {p.f1 - q.f1, p.f2 - q.f2}; }
  bool is_zero() const { return f1.is_zero() && f2.is_zero(); }
};

class MaModule {
 public:
  MaModule(const MaPresentation& p, const TStructureWitness& w) : p_(p), w_(w) {}

  ModElem d_x(const ModElem& v) const {
    return {v.f1.d_x() + p_.a * v.f2, v.f2.d_x() + v.f2.times_x(p_.m).shifted(-1)};
  }
  ModElem x(const ModElem& v) const { return {v.f1.times_x(1), v.f2.times_x(1)}; }
  ModElem d_t(const ModElem& v) const { return {v.f1.shifted(-1), v.f2.shifted(-1)}; }
  ModElem t(const ModElem& v) const { return {v.f1.t_bracket() + v.f2 * w_.b, v.f2.t_bracket() + v.f2 * w_.c}; }

 private:
  const MaPresentation& p_;
  const TStructureWitness& w_;
};

}  // namespace

Report verify_t_action(const MaPresentation& p, const TStructureWitness& w) {
  MaModule mod(p, w);
  const int trunc = std::min(p.a.trunc(), w.c.trunc());
  const KScalar one(1, trunc);
  std::vector<OHElement> coeffs{OHElement::constant(one), OHElement::monomial(one, 1),
                                OHElement::monomial(one, 2), OHElement::constant(one.shifted(1)),
                                OHElement::monomial(one.shifted(1), 1)};
  std::vector<ModElem> samples;
  for (const auto& f : coeffs) {
    samples.push_back({f, {}});
    samples.push_back({{}, f});
  }

  Report report;
  bool ok = true;
  for (const auto& s : samples) ok = ok && (mod.t(mod.x(s)) - mod.x(mod.t(s))).is_zero();
  report.add("[T,x] = 0", ok, ok ? "" : "T does not commute with x");

  ok = true;
  for (const auto& s : samples) {
    ModElem bracket = mod.t(mod.d_t(s)) - mod.d_t(mod.t(s));
    ok = ok && (bracket.f1 + s.f1).is_zero() && (bracket.f2 + s.f2).is_zero();
  }
  report.add("[T,d_t] = -1", ok, ok ? "" : "[T,d_t] != -1");

  ok = true;
  for (std::size_t k = 0; k < samples.size(); k += 2) {
    ModElem bracket = mod.t(mod.d_x(samples[k])) - mod.d_x(mod.t(samples[k]));
    ok = ok && bracket.is_zero();
  }
  report.add("[T,d_x] v1 = 0", ok, ok ? "" : "[T,d_x] is nonzero on C v1");

  bool v2_part = true, v1_part = true;
  for (std::size_t k = 1; k < samples.size(); k += 2) {
    ModElem bracket = mod.t(mod.d_x(samples[k])) - mod.d_x(mod.t(samples[k]));
    v2_part = v2_part && bracket.f2.is_zero();
    v1_part = v1_part && bracket.f1.is_zero();
  }
  report.add("c_x + x^m = 0", v2_part, v2_part ? "" : "v2 component of [T,d_x] v2 is nonzero");
  report.add("ac + b_x - x^m b d_t - [t,a] = 0", v1_part, v1_part ? "" : "v1 component of [T,d_x] v2 is nonzero");
  return report;
}

TStructureResult t_structure_exists(const MaPresentation& p) {
  TStructureResult res;
  const int m = p.m;
  const int trunc = p.a.trunc();
  for (const auto& [i, ai] : p.a.coeffs()) {
    res.candidates.emplace(i, KScalar(i, ai.trunc()) + Rational(m + 1) * (ai.euler() * kscalar_invert(ai)));
  }
  for (auto it = res.candidates.begin(); it != res.candidates.end(); ++it) {
    for (auto jt = std::next(it); jt != res.candidates.end(); ++jt) {
      KScalar diff = it->second - jt->second;
      if (diff.is_zero()) {
        throw PrecisionError("candidates at x^" + std::to_string(it->first) + " and x^" +
                             std::to_string(jt->first) + " agree up to h^" + std::to_string(diff.trunc()));
      }
      if (!res.conflict) res.conflict = std::make_pair(it->first, jt->first);
    }
  }
  if (res.conflict) return res;

  TStructureWitness w;
  w.e = res.candidates.empty() ? KScalar(-1, trunc) : res.candidates.begin()->second;
  w.d = Rational(1, m + 1) * (w.e + KScalar(1, w.e.trunc())).shifted(1);
  w.c = OHElement::monomial(KScalar(Rational(-1, m + 1), trunc), m + 1) + OHElement::constant(w.d);
  w.b = KScalar(Rational(-1, m + 1), trunc).shifted(1) * p.a.times_x(1);
  res.verification = verify_t_action(p, w);
  res.exists = res.verification.passed();
  res.witness = w;
  return res;
}

}  // namespace qalg
