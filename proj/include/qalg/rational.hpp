#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qalg {

/// Exact rational number. mpq_class keeps numerator/denominator reduced with
/// a positive denominator after every arithmetic operation; values built
/// from a numerator/denominator pair must be canonicalized first.
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" and canonicalizes. Throws FormatError.
Rational parse_rational(std::string_view text);

/// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& r);

Rational factorial(int n);

/// n (n-1) ... (n-k+1) for any integer n and k >= 0.
Rational falling(int n, int k);

/// Binomial coefficient C(n, k) for 0 <= k <= n.
Rational binomial(int n, int k);

/// r^k for integer k (k < 0 requires r != 0).
Rational pow(const Rational& r, int k);

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

/// Appends "c*mono" to a sum being rendered: sign handling, unit
/// coefficients and constant terms follow the canonical text format.
void append_term(std::string& out, const Rational& c, const std::string& mono);

}  // namespace qalg
