#include "qalg/power_series.hpp"

#include <algorithm>

#include "qalg/errors.hpp"

namespace qalg {

PowerSeries1::PowerSeries1(std::vector<Rational> coeffs, int order) : coeffs_(std::move(coeffs)) {
  if (order < 0) throw DomainError("negative truncation order");
  coeffs_.resize(static_cast<std::size_t>(order + 1));
}

PowerSeries1 PowerSeries1::constant(const Rational& c, int order) { return monomial(c, 0, order); }

PowerSeries1 PowerSeries1::monomial(const Rational& c, int degree, int order) {
  PowerSeries1 s(order);
  if (degree <= order) s.coeffs_[static_cast<std::size_t>(degree)] = c;
  return s;
}

bool PowerSeries1::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return qalg::is_zero(c); });
}

int PowerSeries1::valuation() const {
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (!qalg::is_zero(coeffs_[k])) return static_cast<int>(k);
  }
  return order() + 1;
}

PowerSeries1 operator+(const PowerSeries1& a, const PowerSeries1& b) {
  PowerSeries1 r(std::min(a.order(), b.order()));
  for (int k = 0; k <= r.order(); ++k) r.coeffs_[k] = a[k] + b[k];
  return r;
}

PowerSeries1 operator-(const PowerSeries1& a, const PowerSeries1& b) {
  PowerSeries1 r(std::min(a.order(), b.order()));
  for (int k = 0; k <= r.order(); ++k) r.coeffs_[k] = a[k] - b[k];
  return r;
}

PowerSeries1 operator*(const PowerSeries1& a, const PowerSeries1& b) {
  PowerSeries1 r(std::min(a.order(), b.order()));
  for (int i = 0; i <= r.order(); ++i) {
    if (qalg::is_zero(a[i])) continue;
    for (int j = 0; i + j <= r.order(); ++j) r.coeffs_[i + j] += a[i] * b[j];
  }
  return r;
}

PowerSeries1 operator*(const PowerSeries1& a, const Rational& c) {
  PowerSeries1 r = a;
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

PowerSeries1 PowerSeries1::derivative() const {
  if (order() == 0) throw PrecisionError("derivative of an order-0 series is unknown");
  PowerSeries1 r(order() - 1);
  for (int k = 0; k <= r.order(); ++k) r.coeffs_[k] = coeffs_[k + 1] * (k + 1);
  return r;
}

PowerSeries1 PowerSeries1::integrate() const {
  PowerSeries1 r(order() + 1);
  for (int k = 0; k <= order(); ++k) r.coeffs_[k + 1] = coeffs_[k] / Rational(k + 1);
  return r;
}

PowerSeries1 PowerSeries1::truncated(int order) const {
  if (order > this->order()) throw PrecisionError("cannot raise the truncation order of a series");
  return PowerSeries1(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order + 1), order);
}

std::string PowerSeries1::to_string(const std::string& var) const {
  std::string out;
  for (int k = 0; k <= order(); ++k) {
    const Rational& c = coeffs_[k];
    if (qalg::is_zero(c)) continue;
    std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
    append_term(out, c, mono);
  }
  return out.empty() ? "0" : out;
}

}  // namespace qalg
