#include "qalg/lagrangian_lift.hpp"

#include "qalg/errors.hpp"

namespace qalg {

ParamCurve::ParamCurve(PowerSeries1 x_, PowerSeries1 u_) : x(std::move(x_)), u(std::move(u_)) {
  if (x.order() != u.order()) throw MismatchError("curve components must share the truncation order");
  if (!qalg::is_zero(x[0]) || !qalg::is_zero(u[0])) throw DomainError("curve must pass through the origin");
}

namespace {

PowerSeries1 power(const PowerSeries1& a, int k) {
  PowerSeries1 r = PowerSeries1::constant(1, a.order());
  for (int i = 0; i < k; ++i) r = r * a;
  return r;
}

// Row-echelon system grown one equation at a time.
class IncrementalSolver {
 public:
  explicit IncrementalSolver(std::size_t unknowns) : unknowns_(unknowns) {}

  /// False when the new equation contradicts the previous ones.
  bool add(std::vector<Rational> row, Rational rhs) {
    for (const auto& [pivot, prow] : pivots_) {
      if (qalg::is_zero(row[pivot])) continue;
      Rational factor = row[pivot];
      for (std::size_t j = 0; j < unknowns_; ++j) row[j] -= factor * prow.coeffs[j];
      rhs -= factor * prow.rhs;
    }
    for (std::size_t j = 0; j < unknowns_; ++j) {
      if (qalg::is_zero(row[j])) continue;
      Rational lead = row[j];
      for (auto& v : row) v /= lead;
      rhs /= lead;
      // keep the stored rows fully reduced
      for (auto& [pivot, prow] : pivots_) {
        if (qalg::is_zero(prow.coeffs[j])) continue;
        Rational factor = prow.coeffs[j];
        for (std::size_t k = 0; k < unknowns_; ++k) prow.coeffs[k] -= factor * row[k];
        prow.rhs -= factor * rhs;
      }
      pivots_.push_back({j, {std::move(row), rhs}});
      return true;
    }
    return qalg::is_zero(rhs);
  }

  /// Solution with free unknowns set to zero.
  std::vector<Rational> solution() const {
    std::vector<Rational> x(unknowns_);
    for (const auto& [pivot, prow] : pivots_) x[pivot] = prow.rhs;
    return x;
  }

 private:
  struct Row {
    std::vector<Rational> coeffs;
    Rational rhs;
  };
  std::size_t unknowns_;
  std::vector<std::pair<std::size_t, Row>> pivots_;
};

}  // namespace

LiftResult lift_curve(const ParamCurve& c) {
  const int n = c.order();
  LiftResult result;
  result.f = n == 0 ? PowerSeries1(0) : (c.u * c.x.derivative()).integrate();

  struct Candidate {
    int a, b;
    PowerSeries1 series;
  };
  std::vector<Candidate> monomials;
  const int vx = c.x.valuation(), vu = c.u.valuation();
  for (int a = 0; a * vx <= n; ++a) {
    if (a > 0 && c.x.is_zero()) break;
    for (int b = 0; a * vx + b * vu <= n; ++b) {
      if (b > 0 && c.u.is_zero()) break;
      monomials.push_back({a, b, power(c.x, a) * power(c.u, b)});
    }
  }

  IncrementalSolver solver(monomials.size());
  for (int k = 0; k <= n; ++k) {
    std::vector<Rational> row;
    for (const auto& m : monomials) row.push_back(m.series[k]);
    if (!solver.add(std::move(row), result.f[k])) {
      result.member = false;
      result.obstructed_degree = k;
      return result;
    }
  }
  result.member = true;
  SparsePoly p({"x", "u"});
  std::vector<Rational> coef = solver.solution();
  for (std::size_t i = 0; i < monomials.size(); ++i) p.add_term(MultiIndex{monomials[i].a, monomials[i].b}, coef[i]);
  result.certificate = p;
  return result;
}

const std::vector<std::string>& relation_vars() {
  static const std::vector<std::string> vars{"x", "u", "f", "s"};
  return vars;
}

RelationResult check_relation(const ParamCurve& c, const PowerSeries1& f, const SparsePoly& lhs,
                              const SparsePoly& rhs) {
  if (lhs.vars() != relation_vars() || rhs.vars() != relation_vars()) {
    throw MismatchError("relation claims are polynomials in x, u, f, s");
  }
  const int n = c.order();
  if (f.order() != n) throw MismatchError("f must share the curve truncation order");
  const SparsePoly diff = lhs - rhs;
  int claim_degree = 0;
  for (const auto* side : {&lhs, &rhs})
    for (const auto& [m, coef] : side->terms()) claim_degree = std::max(claim_degree, m[3]);
  if (n < claim_degree) {
    throw PrecisionError("truncation order " + std::to_string(n) + " cannot decide a claim of s-degree " +
                         std::to_string(claim_degree));
  }
  std::vector<PowerSeries1> values{c.x, c.u, f, PowerSeries1::monomial(1, 1, n)};
  RelationResult r;
  r.residual = diff.evaluate(values, PowerSeries1::constant(1, n));
  r.holds = r.residual.is_zero();
  return r;
}

}  // namespace qalg
