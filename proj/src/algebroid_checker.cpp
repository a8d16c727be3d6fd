#include "qalg/algebroid_checker.hpp"

#include <json.hpp>

#include "qalg/errors.hpp"

namespace qalg {

namespace {

Vec add(const Vec& a, const Vec& b) {
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

// Gaussian elimination for the square system m x = rhs; empty if singular.
std::optional<Vec> solve(Matrix m, Vec rhs) {
  const std::size_t n = rhs.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && is_zero(m[piv][col])) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(m[piv], m[col]);
    std::swap(rhs[piv], rhs[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || is_zero(m[r][col])) continue;
      Rational f = m[r][col] / m[col][col];
      for (std::size_t k = col; k < n; ++k) m[r][k] -= f * m[col][k];
      rhs[r] -= f * rhs[col];
    }
  }
  for (std::size_t i = 0; i < n; ++i) rhs[i] /= m[i][i];
  return rhs;
}

std::string vec_string(const Vec& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
  return s + "]";
}

}  // namespace

FiniteAlgebra::FiniteAlgebra(int dim, Vec unit) : dim_(dim), unit_(std::move(unit)) {
  if (dim < 1) throw FormatError("algebra dimension must be positive");
  if (static_cast<int>(unit_.size()) != dim) throw FormatError("unit has the wrong length");
  table_.assign(static_cast<std::size_t>(dim), std::vector<Vec>(static_cast<std::size_t>(dim), zero()));
}

void FiniteAlgebra::set_constant(int i, int j, int k, const Rational& c) {
  if (i < 0 || j < 0 || k < 0 || i >= dim_ || j >= dim_ || k >= dim_) {
    throw FormatError("structure constant index out of range");
  }
  table_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] += c;
}

Vec FiniteAlgebra::mul(const Vec& a, const Vec& b) const {
  Vec r = zero();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (is_zero(b[j])) continue;
      const Vec& e = table_[i][j];
      for (std::size_t k = 0; k < e.size(); ++k) r[k] += a[i] * b[j] * e[k];
    }
  }
  return r;
}

Vec FiniteAlgebra::basis(int i) const {
  Vec v = zero();
  v[static_cast<std::size_t>(i)] = 1;
  return v;
}

std::optional<Vec> FiniteAlgebra::inverse(const Vec& a) const {
  // left multiplication by a, column k = a e_k
  Matrix left(static_cast<std::size_t>(dim_), zero());
  for (int k = 0; k < dim_; ++k) {
    Vec col = mul(a, basis(k));
    for (std::size_t r = 0; r < col.size(); ++r) left[r][static_cast<std::size_t>(k)] = col[r];
  }
  auto x = solve(left, unit_);
  if (!x || mul(*x, a) != unit_) return std::nullopt;
  return x;
}

void FiniteAlgebra::validate() const {
  for (int i = 0; i < dim_; ++i) {
    if (mul(unit_, basis(i)) != basis(i) || mul(basis(i), unit_) != basis(i)) {
      throw DomainError("unit law fails on basis element " + std::to_string(i));
    }
    for (int j = 0; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k)
        if (mul(mul(basis(i), basis(j)), basis(k)) != mul(basis(i), mul(basis(j), basis(k))))
          throw DomainError("algebra is not associative on basis triple (" + std::to_string(i) + ", " +
                            std::to_string(j) + ", " + std::to_string(k) + ")");
  }
}

namespace {

using nlohmann::json;

Rational json_rational(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw FormatError("expected an integer or a rational string, got " + j.dump());
}

Vec json_vec(const json& j, int dim) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim) {
    throw FormatError("expected a vector of length " + std::to_string(dim));
  }
  Vec v;
  for (const auto& x : j) v.push_back(json_rational(x));
  return v;
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

}  // namespace

int AlgebroidInstance::find_morphism(const std::string& name) const {
  for (std::size_t g = 0; g < morphisms_.size(); ++g)
    if (morphisms_[g].name == name) return static_cast<int>(g);
  throw FormatError("unknown morphism \"" + name + "\"");
}

AlgebroidInstance AlgebroidInstance::from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
  AlgebroidInstance inst;
  try {
    for (const auto& o : field(doc, "objects")) inst.objects_.push_back(o.get<std::string>());
    auto object_index = [&inst](const std::string& name) {
      for (std::size_t i = 0; i < inst.objects_.size(); ++i)
        if (inst.objects_[i] == name) return static_cast<int>(i);
      throw FormatError("unknown object \"" + name + "\"");
    };
    const json& algebras = field(doc, "algebras");
    for (const auto& name : inst.objects_) {
      const json& a = field(algebras, name.c_str());
      int dim = field(a, "dim").get<int>();
      FiniteAlgebra alg(dim, json_vec(field(a, "unit"), dim));
      for (const auto& entry : field(a, "mult")) {
        if (!entry.is_array() || entry.size() != 4) throw FormatError("structure constants are [i, j, k, c]");
        alg.set_constant(entry[0].get<int>(), entry[1].get<int>(), entry[2].get<int>(), json_rational(entry[3]));
      }
      inst.algebras_.push_back(std::move(alg));
    }
    for (const auto& m : field(doc, "morphisms")) {
      Morphism g;
      g.name = field(m, "name").get<std::string>();
      g.src = object_index(field(m, "src").get<std::string>());
      g.dst = object_index(field(m, "dst").get<std::string>());
      const json& phi = field(m, "phi");
      int rows = inst.algebra(g.dst).dim(), cols = inst.algebra(g.src).dim();
      if (!phi.is_array() || static_cast<int>(phi.size()) != rows) throw FormatError("phi of " + g.name + " has the wrong shape");
      for (const auto& row : phi) g.phi.push_back(json_vec(row, cols));
      for (const auto& prev : inst.morphisms_)
        if (prev.name == g.name) throw FormatError("duplicate morphism \"" + g.name + "\"");
      inst.morphisms_.push_back(std::move(g));
    }
    const json& ids = field(doc, "identities");
    for (const auto& name : inst.objects_) inst.identities_.push_back(inst.find_morphism(field(ids, name.c_str()).get<std::string>()));
    for (const auto& entry : field(doc, "compose")) {
      if (!entry.is_array() || entry.size() != 3) throw FormatError("composition entries are [g, h, g o h]");
      int g = inst.find_morphism(entry[0].get<std::string>());
      int h = inst.find_morphism(entry[1].get<std::string>());
      int gh = inst.find_morphism(entry[2].get<std::string>());
      inst.compose_[{g, h}] = gh;
    }
    for (const auto& [name, value] : field(doc, "lift").items()) {
      int g = inst.find_morphism(name);
      inst.lifts_[g] = json_vec(value, inst.algebra(inst.morphism(g).dst).dim());
    }
  } catch (const json::exception& e) {
    throw FormatError(std::string("malformed instance: ") + e.what());
  }
  inst.validate();
  return inst;
}

int AlgebroidInstance::compose(int g, int h) const {
  auto it = compose_.find({g, h});
  if (it == compose_.end()) {
    throw FormatError("composition " + morphism(g).name + " o " + morphism(h).name + " is missing");
  }
  return it->second;
}

int AlgebroidInstance::inverse(int g) const {
  const Morphism& m = morphism(g);
  for (int h : hom(m.dst, m.src))
    if (compose(g, h) == identity(m.dst) && compose(h, g) == identity(m.src)) return h;
  throw DomainError("morphism " + m.name + " has no inverse");
}

std::vector<int> AlgebroidInstance::hom(int src, int dst) const {
  std::vector<int> out;
  for (std::size_t g = 0; g < morphisms_.size(); ++g)
    if (morphisms_[g].src == src && morphisms_[g].dst == dst) out.push_back(static_cast<int>(g));
  return out;
}

Vec AlgebroidInstance::apply(int g, const Vec& a) const {
  const Matrix& m = morphism(g).phi;
  Vec r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) r[i] += m[i][j] * a[j];
  return r;
}

void AlgebroidInstance::validate() const {
  for (const auto& alg : algebras_) alg.validate();
  const int nm = static_cast<int>(morphisms_.size());
  for (int o = 0; o < static_cast<int>(objects_.size()); ++o) {
    const Morphism& id = morphism(identity(o));
    if (id.src != o || id.dst != o) throw DomainError("identity of " + objects_[static_cast<std::size_t>(o)] + " is not an endomorphism");
  }
  for (int g = 0; g < nm; ++g) {
    for (int h = 0; h < nm; ++h) {
      if (morphism(h).dst != morphism(g).src) continue;
      int gh = compose(g, h);
      if (morphism(gh).src != morphism(h).src || morphism(gh).dst != morphism(g).dst) {
        throw DomainError("composition " + morphism(g).name + " o " + morphism(h).name + " has the wrong type");
      }
    }
  }
  for (int g = 0; g < nm; ++g) {
    const Morphism& m = morphism(g);
    if (compose(g, identity(m.src)) != g || compose(identity(m.dst), g) != g) {
      throw DomainError("identity law fails for " + m.name);
    }
    inverse(g);
    const FiniteAlgebra& src = algebra(m.src);
    const FiniteAlgebra& dst = algebra(m.dst);
    if (apply(g, src.unit()) != dst.unit()) throw DomainError("Phi(" + m.name + ") is not unital");
    for (int i = 0; i < src.dim(); ++i)
      for (int j = 0; j < src.dim(); ++j)
        if (apply(g, src.mul(src.basis(i), src.basis(j))) != dst.mul(apply(g, src.basis(i)), apply(g, src.basis(j))))
          throw DomainError("Phi(" + m.name + ") is not multiplicative");
  }
  for (int g = 0; g < nm; ++g) {
    for (int h = 0; h < nm; ++h) {
      if (morphism(h).dst != morphism(g).src) continue;
      for (int k = 0; k < nm; ++k) {
        if (morphism(k).dst != morphism(h).src) continue;
        if (compose(compose(g, h), k) != compose(g, compose(h, k))) throw DomainError("composition is not associative");
      }
      const FiniteAlgebra& src = algebra(morphism(h).src);
      int gh = compose(g, h);
      for (int i = 0; i < src.dim(); ++i)
        if (apply(gh, src.basis(i)) != apply(g, apply(h, src.basis(i))))
          throw DomainError("Phi is not functorial on " + morphism(g).name + " o " + morphism(h).name);
    }
  }
  for (int o = 0; o < static_cast<int>(objects_.size()); ++o) {
    for (int phi : endomorphisms(o)) {
      auto it = lifts_.find(phi);
      if (it == lifts_.end()) throw FormatError("missing lift of " + morphism(phi).name);
      if (!algebra(o).inverse(it->second)) throw DomainError("lift of " + morphism(phi).name + " is not a unit");
    }
  }
  for (const auto& [g, v] : lifts_) {
    if (morphism(g).src != morphism(g).dst) throw FormatError("lift given for non-endomorphism " + morphism(g).name);
  }
}

Report check_data(const AlgebroidInstance& inst) {
  Report report;
  const int no = static_cast<int>(inst.objects().size());

  std::string detail;
  for (int o = 0; o < no && detail.empty(); ++o) {
    const FiniteAlgebra& alg = inst.algebra(o);
    for (int phi : inst.endomorphisms(o)) {
      for (int psi : inst.endomorphisms(o)) {
        if (alg.mul(inst.lift(phi), inst.lift(psi)) != inst.lift(inst.compose(phi, psi))) {
          detail = "lift(" + inst.morphism(phi).name + ") lift(" + inst.morphism(psi).name + ") != lift(" +
                   inst.morphism(inst.compose(phi, psi)).name + ")";
          break;
        }
      }
      if (!detail.empty()) break;
    }
  }
  report.add("lift-homomorphism", detail.empty(), detail);

  detail.clear();
  for (int o = 0; o < no && detail.empty(); ++o) {
    const FiniteAlgebra& alg = inst.algebra(o);
    for (int phi : inst.endomorphisms(o)) {
      const Vec& l = inst.lift(phi);
      const Vec l_inv = *alg.inverse(l);
      for (int i = 0; i < alg.dim(); ++i) {
        if (inst.apply(phi, alg.basis(i)) != alg.mul(alg.mul(l, alg.basis(i)), l_inv)) {
          detail = "Phi(" + inst.morphism(phi).name + ") != Ad(lift(" + inst.morphism(phi).name + ")) on e_" +
                   std::to_string(i);
          break;
        }
      }
      if (!detail.empty()) break;
    }
  }
  report.add("inner-action", detail.empty(), detail);

  detail.clear();
  for (std::size_t g = 0; g < inst.morphisms().size() && detail.empty(); ++g) {
    const int G = static_cast<int>(g);
    const Morphism& m = inst.morphism(G);
    const int g_inv = inst.inverse(G);
    for (int phi : inst.endomorphisms(m.src)) {
      int conj = inst.compose(inst.compose(G, phi), g_inv);
      if (inst.lift(conj) != inst.apply(G, inst.lift(phi))) {
        detail = "lift(" + m.name + " " + inst.morphism(phi).name + " " + m.name + "^-1) != Phi(" + m.name +
                 ")(lift(" + inst.morphism(phi).name + "))";
        break;
      }
    }
  }
  report.add("conjugation", detail.empty(), detail);
  return report;
}

namespace {

// Representative (a, H) of a class in Phi(dst(H)) x^End Hom(src(H), dst(H)).
struct Rep {
  Vec a;
  int h;
};

class Quotient {
 public:
  explicit Quotient(const AlgebroidInstance& inst) : inst_(inst) {}

  int reference(int src, int dst) const { return inst_.hom(src, dst).front(); }

  /// Coordinates of [a, H] against the reference: [a, phi H0] = [a lift(phi), H0].
  Vec normalize(const Rep& r) const {
    const Morphism& m = inst_.morphism(r.h);
    int h0 = reference(m.src, m.dst);
    int phi = inst_.compose(r.h, inst_.inverse(h0));
    return inst_.algebra(m.dst).mul(r.a, inst_.lift(phi));
  }

  /// [a, G] o [a', G'] = [a Phi(G)(a'), G G'].
  Rep compose(const Rep& x, const Rep& y) const {
    const FiniteAlgebra& alg = inst_.algebra(inst_.morphism(x.h).dst);
    return {alg.mul(x.a, inst_.apply(x.h, y.a)), inst_.compose(x.h, y.h)};
  }

  /// [a, G] + [a', G'] = [a + a' lift(G' G^-1), G].
  Rep add(const Rep& x, const Rep& y) const {
    const FiniteAlgebra& alg = inst_.algebra(inst_.morphism(x.h).dst);
    int phi = inst_.compose(y.h, inst_.inverse(x.h));
    return {qalg::add(x.a, alg.mul(y.a, inst_.lift(phi))), x.h};
  }

 private:
  const AlgebroidInstance& inst_;
};

}  // namespace

QuotientResult build_quotient(const AlgebroidInstance& inst) {
  QuotientResult res;
  Quotient q(inst);
  const int no = static_cast<int>(inst.objects().size());
  std::map<std::pair<int, int>, int> index;
  for (int dst = 0; dst < no; ++dst) {
    for (int src = 0; src < no; ++src) {
      if (inst.hom(src, dst).empty()) continue;
      index[{src, dst}] = static_cast<int>(res.homs.size());
      res.homs.push_back({src, dst, q.reference(src, dst), inst.algebra(dst).dim()});
    }
  }

  auto name = [&inst](int g) { return inst.morphism(g).name; };
  std::string first, second, addition, assoc, endo;

  for (const auto& x : res.homs) {
    const FiniteAlgebra& ax = inst.algebra(x.dst);
    for (const auto& y : res.homs) {
      if (y.dst != x.src) continue;
      const FiniteAlgebra& ay = inst.algebra(y.dst);
      auto& table = res.composition[{index[{x.src, x.dst}], index[{y.src, y.dst}]}];
      table.assign(static_cast<std::size_t>(ax.dim()), {});
      for (int i = 0; i < ax.dim(); ++i)
        for (int j = 0; j < ay.dim(); ++j)
          table[static_cast<std::size_t>(i)].push_back(
              q.normalize(q.compose({ax.basis(i), x.reference}, {ay.basis(j), y.reference})));

      for (int g : inst.hom(x.src, x.dst)) {
        for (int g2 : inst.hom(y.src, y.dst)) {
          for (int i = 0; i < ax.dim(); ++i) {
            for (int j = 0; j < ay.dim(); ++j) {
              const Vec a = ax.basis(i), a2 = ay.basis(j);
              if (first.empty()) {
                for (int phi : inst.endomorphisms(x.dst)) {
                  Vec lhs = q.normalize(q.compose({ax.mul(a, inst.lift(phi)), g}, {a2, g2}));
                  Vec rhs = q.normalize(q.compose({a, inst.compose(phi, g)}, {a2, g2}));
                  if (lhs != rhs) {
                    first = "[a lift(" + name(phi) + "), " + name(g) + "] o [a', " + name(g2) + "] != [a, " +
                            name(phi) + " " + name(g) + "] o [a', " + name(g2) + "]: " + vec_string(lhs) +
                            " vs " + vec_string(rhs);
                    break;
                  }
                }
              }
              if (second.empty()) {
                for (int phi : inst.endomorphisms(y.dst)) {
                  Vec lhs = q.normalize(q.compose({a, g}, {ay.mul(a2, inst.lift(phi)), g2}));
                  Vec rhs = q.normalize(q.compose({a, g}, {a2, inst.compose(phi, g2)}));
                  if (lhs != rhs) {
                    int conj = inst.compose(inst.compose(g, phi), inst.inverse(g));
                    second = "a Phi(" + name(g) + ")(a' lift(" + name(phi) + ")) != a Phi(" + name(g) +
                             ")(a') lift(" + name(conj) + "): " + vec_string(lhs) + " vs " + vec_string(rhs);
                    break;
                  }
                }
              }
            }
          }
        }
      }
    }
    for (int g : inst.hom(x.src, x.dst)) {
      for (int g2 : inst.hom(x.src, x.dst)) {
        for (int i = 0; i < ax.dim() && addition.empty(); ++i) {
          for (int j = 0; j < ax.dim(); ++j) {
            Rep r1{ax.basis(i), g}, r2{ax.basis(j), g2};
            Vec lhs = q.normalize(q.add(r1, r2));
            Vec rhs = qalg::add(q.normalize(r1), q.normalize(r2));
            if (lhs != rhs) {
              addition = "[e_" + std::to_string(i) + ", " + name(g) + "] + [e_" + std::to_string(j) + ", " +
                         name(g2) + "] depends on the representative";
              break;
            }
          }
        }
      }
    }
  }

  for (const auto& x : res.homs) {
    for (const auto& y : res.homs) {
      if (y.dst != x.src) continue;
      for (const auto& z : res.homs) {
        if (z.dst != y.src || !assoc.empty()) continue;
        const FiniteAlgebra &ax = inst.algebra(x.dst), &ay = inst.algebra(y.dst), &az = inst.algebra(z.dst);
        for (int i = 0; i < ax.dim() && assoc.empty(); ++i)
          for (int j = 0; j < ay.dim() && assoc.empty(); ++j)
            for (int k = 0; k < az.dim() && assoc.empty(); ++k) {
              Rep a{ax.basis(i), x.reference}, b{ay.basis(j), y.reference}, c{az.basis(k), z.reference};
              if (q.normalize(q.compose(q.compose(a, b), c)) != q.normalize(q.compose(a, q.compose(b, c))))
                assoc = "composition is not associative on a basis triple";
            }
      }
    }
  }

  for (int o = 0; o < no && endo.empty(); ++o) {
    const FiniteAlgebra& alg = inst.algebra(o);
    const int id = inst.identity(o);
    for (int g : inst.endomorphisms(o)) {
      for (int i = 0; i < alg.dim(); ++i) {
        Vec a = alg.basis(i);
        if (q.normalize({a, g}) != q.normalize({alg.mul(a, inst.lift(g)), id})) {
          endo = "[e_" + std::to_string(i) + ", " + name(g) + "] != [e_" + std::to_string(i) + " lift(" + name(g) +
                 "), id]";
          break;
        }
      }
    }
    for (int i = 0; i < alg.dim() && endo.empty(); ++i)
      for (int j = 0; j < alg.dim() && endo.empty(); ++j) {
        Vec a = alg.basis(i), b = alg.basis(j);
        if (q.normalize(q.compose({a, id}, {b, id})) != q.normalize({alg.mul(a, b), id}))
          endo = "a -> [a, id] is not multiplicative";
      }
  }

  res.report.add("first-representative", first.empty(), first);
  res.report.add("second-representative", second.empty(), second);
  res.report.add("addition", addition.empty(), addition);
  res.report.add("associativity", assoc.empty(), assoc);
  res.report.add("endomorphism-algebra", endo.empty(), endo);
  return res;
}

}  // namespace qalg
