#pragma once

#include <optional>

#include "qalg/power_series.hpp"
#include "qalg/sparse_poly.hpp"

namespace qalg {

/// s -> (x(s), u(s)) with x(0) = u(0) = 0, both known modulo s^{N+1}.
struct ParamCurve {
  PowerSeries1 x;
  PowerSeries1 u;

  ParamCurve(PowerSeries1 x_, PowerSeries1 u_);
  int order() const { return x.order(); }
};

struct LiftResult {
  PowerSeries1 f;
  bool member = false;
  /// P(x, u) with P(x(s), u(s)) = f mod s^{N+1}, when member.
  std::optional<SparsePoly> certificate;
  /// Least k such that no polynomial matches f modulo s^{k+1}, when not member.
  std::optional<int> obstructed_degree;
};

/// f with f' = u x', f(0) = 0, and whether f is a polynomial in x, u to order N.
LiftResult lift_curve(const ParamCurve& c);

struct RelationResult {
  PowerSeries1 residual;
  bool holds = false;
};

/// Evaluates lhs - rhs, polynomials in the variables x, u, f, s, along the
/// curve. Throws PrecisionError when the truncation is below the largest
/// power of s in the claim.
RelationResult check_relation(const ParamCurve& c, const PowerSeries1& f, const SparsePoly& lhs,
                              const SparsePoly& rhs);

/// Variable list {x, u, f, s} used by relation claims.
const std::vector<std::string>& relation_vars();

}  // namespace qalg
