#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace higgs {

using Int = mpz_class;

/// Polynomial or truncated power series in one formal variable t, with
/// arbitrary-precision integer coefficients.
///
/// A series is either an exact polynomial (exact_through() is empty) or
/// carries an explicit bound N meaning "coefficients are exact up to and
/// including degree N; nothing is known beyond".  Reading a coefficient past
/// the bound throws instead of silently returning 0.
///
/// Canonical form: an exact polynomial stores no trailing zeros; a truncated
/// series stores no coefficients above its bound.  All values are immutable
/// after construction.
class PoincareSeries {
 public:
  PoincareSeries() = default;  // the zero polynomial

  explicit PoincareSeries(std::vector<Int> coeffs,
                          std::optional<int> exact_through = std::nullopt);

  static PoincareSeries zero() { return PoincareSeries(); }
  static PoincareSeries one();
  static PoincareSeries monomial(int degree, Int coeff = 1);

  const std::vector<Int>& coeffs() const { return coeffs_; }
  std::optional<int> exact_through() const { return exact_through_; }
  bool is_polynomial() const { return !exact_through_.has_value(); }

  /// True when every known coefficient is zero.
  bool is_zero() const { return coeffs_.empty(); }

  /// Degree of an exact polynomial (-1 for the zero polynomial).
  /// Throws std::domain_error on a truncated series.
  int degree() const;

  /// Coefficient of t^d.  Throws std::domain_error when d lies beyond the
  /// exactness bound of a truncated series.
  Int coeff(int d) const;

  /// Restrict exactness to degree n (drops higher coefficients).
  PoincareSeries truncated(int n) const;

  /// Reinterpret a truncated series as an exact polynomial.  Only valid once
  /// the caller has established that all coefficients beyond the bound
  /// vanish (e.g. by a dimension or duality argument checked elsewhere).
  PoincareSeries as_polynomial() const;

  bool all_coeffs_nonnegative() const;

  /// Value at t = -1 (alternating coefficient sum); polynomial only.
  Int value_at_minus_one() const;

  bool operator==(const PoincareSeries& o) const = default;

 private:
  std::vector<Int> coeffs_;  // index = degree in t
  std::optional<int> exact_through_;
};

/// Coefficientwise sum; exactness bound of the result is the min of the
/// inputs' bounds.
PoincareSeries operator+(const PoincareSeries& a, const PoincareSeries& b);
PoincareSeries operator-(const PoincareSeries& a, const PoincareSeries& b);

/// Convolution product.  The exactness bound propagates through the lowest
/// nonzero degree of the other factor: unknown coefficients of a degree-N
/// truncated factor can only disturb degrees > N + ord(other).
PoincareSeries operator*(const PoincareSeries& a, const PoincareSeries& b);
PoincareSeries operator*(const Int& c, const PoincareSeries& a);

/// k-th power by repeated squaring.
PoincareSeries pow(const PoincareSeries& a, unsigned k);

/// Expansion of numerator / prod_i (1 - t^{a_i}) exact through degree
/// trunc_n.  Each a_i must be a positive integer; trunc_n must be >= 0.
PoincareSeries expand_rational(const PoincareSeries& numerator,
                               const std::vector<int>& denom_one_minus_powers,
                               int trunc_n);

/// True iff coeff_a(d) <= coeff_b(d) for all d <= through_degree.  Both
/// series must be exact through through_degree, else std::domain_error.
bool coeffwise_leq(const PoincareSeries& a, const PoincareSeries& b,
                   int through_degree);

/// Poincare duality check: p is an exact polynomial with
/// coeff(d) == coeff(top_degree - d) for all d.
bool is_palindromic(const PoincareSeries& p, int top_degree);

}  // namespace higgs
