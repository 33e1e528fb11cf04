#include "higgscoh/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace higgs {

namespace {

// Lowest known nonzero degree; for an all-zero truncated series the first
// possibly-nonzero degree is bound + 1.
int order_bound(const PoincareSeries& s) {
  const auto& c = s.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) return static_cast<int>(i);
  if (s.is_polynomial()) return -1;  // exact zero, caller must handle
  return *s.exact_through() + 1;
}

std::optional<int> min_bound(std::optional<int> a, std::optional<int> b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

}  // namespace

PoincareSeries::PoincareSeries(std::vector<Int> coeffs,
                               std::optional<int> exact_through)
    : coeffs_(std::move(coeffs)), exact_through_(exact_through) {
  if (exact_through_) {
    if (*exact_through_ < 0)
      throw std::invalid_argument("PoincareSeries: negative exactness bound");
    if (coeffs_.size() > static_cast<std::size_t>(*exact_through_) + 1)
      coeffs_.resize(static_cast<std::size_t>(*exact_through_) + 1);
  }
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

PoincareSeries PoincareSeries::one() { return PoincareSeries({Int(1)}); }

PoincareSeries PoincareSeries::monomial(int degree, Int coeff) {
  if (degree < 0) throw std::invalid_argument("monomial: negative degree");
  std::vector<Int> c(static_cast<std::size_t>(degree) + 1);
  c.back() = std::move(coeff);
  return PoincareSeries(std::move(c));
}

int PoincareSeries::degree() const {
  if (!is_polynomial())
    throw std::domain_error("degree(): series is only exact through degree " +
                            std::to_string(*exact_through_));
  return static_cast<int>(coeffs_.size()) - 1;
}

Int PoincareSeries::coeff(int d) const {
  if (d < 0) throw std::invalid_argument("coeff: negative degree");
  if (exact_through_ && d > *exact_through_)
    throw std::domain_error("coeff(" + std::to_string(d) +
                            "): beyond exactness bound " +
                            std::to_string(*exact_through_));
  if (static_cast<std::size_t>(d) >= coeffs_.size()) return Int(0);
  return coeffs_[static_cast<std::size_t>(d)];
}

PoincareSeries PoincareSeries::truncated(int n) const {
  if (n < 0) throw std::invalid_argument("truncated: negative bound");
  if (exact_through_ && *exact_through_ < n)
    throw std::domain_error("truncated(" + std::to_string(n) +
                            "): series only exact through " +
                            std::to_string(*exact_through_));
  return PoincareSeries(coeffs_, n);
}

PoincareSeries PoincareSeries::as_polynomial() const {
  return PoincareSeries(coeffs_);
}

bool PoincareSeries::all_coeffs_nonnegative() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Int& c) { return c >= 0; });
}

Int PoincareSeries::value_at_minus_one() const {
  if (!is_polynomial())
    throw std::domain_error("value_at_minus_one: truncated series");
  Int v = 0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i % 2 == 0)
      v += coeffs_[i];
    else
      v -= coeffs_[i];
  }
  return v;
}

PoincareSeries operator+(const PoincareSeries& a, const PoincareSeries& b) {
  auto bound = min_bound(a.exact_through(), b.exact_through());
  std::size_t n = std::max(a.coeffs().size(), b.coeffs().size());
  std::vector<Int> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i < a.coeffs().size()) out[i] += a.coeffs()[i];
    if (i < b.coeffs().size()) out[i] += b.coeffs()[i];
  }
  return PoincareSeries(std::move(out), bound);
}

PoincareSeries operator-(const PoincareSeries& a, const PoincareSeries& b) {
  auto bound = min_bound(a.exact_through(), b.exact_through());
  std::size_t n = std::max(a.coeffs().size(), b.coeffs().size());
  std::vector<Int> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i < a.coeffs().size()) out[i] += a.coeffs()[i];
    if (i < b.coeffs().size()) out[i] -= b.coeffs()[i];
  }
  return PoincareSeries(std::move(out), bound);
}

PoincareSeries operator*(const PoincareSeries& a, const PoincareSeries& b) {
  // An exact zero annihilates regardless of the other factor's bound.
  if ((a.is_polynomial() && a.is_zero()) || (b.is_polynomial() && b.is_zero()))
    return PoincareSeries::zero();

  std::optional<int> bound;
  if (a.exact_through()) bound = *a.exact_through() + order_bound(b);
  if (b.exact_through())
    bound = min_bound(bound, *b.exact_through() + order_bound(a));

  std::size_t n = 0;
  if (!a.coeffs().empty() && !b.coeffs().empty())
    n = a.coeffs().size() + b.coeffs().size() - 1;
  if (bound) n = std::min(n, static_cast<std::size_t>(*bound) + 1);

  std::vector<Int> out(n);
  for (std::size_t i = 0; i < a.coeffs().size() && i < n; ++i) {
    if (a.coeffs()[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs().size() && i + j < n; ++j) {
      if (b.coeffs()[j] == 0) continue;
      out[i + j] += a.coeffs()[i] * b.coeffs()[j];
    }
  }
  return PoincareSeries(std::move(out), bound);
}

PoincareSeries operator*(const Int& c, const PoincareSeries& a) {
  std::vector<Int> out(a.coeffs());
  for (auto& x : out) x *= c;
  return PoincareSeries(std::move(out), a.exact_through());
}

PoincareSeries pow(const PoincareSeries& a, unsigned k) {
  PoincareSeries result = PoincareSeries::one();
  PoincareSeries base = a;
  while (k > 0) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k > 0) base = base * base;
  }
  return result;
}

PoincareSeries expand_rational(const PoincareSeries& numerator,
                               const std::vector<int>& denom_one_minus_powers,
                               int trunc_n) {
  if (trunc_n < 0) throw std::invalid_argument("expand_rational: trunc_n < 0");
  int bound = trunc_n;
  if (numerator.exact_through())
    bound = std::min(bound, *numerator.exact_through());

  std::vector<Int> c(static_cast<std::size_t>(bound) + 1);
  for (std::size_t i = 0; i < numerator.coeffs().size() && i <= std::size_t(bound); ++i)
    c[i] = numerator.coeffs()[i];

  // Dividing by (1 - t^a) is the running sum c[i] += c[i-a], one pass per
  // denominator factor.
  for (int a : denom_one_minus_powers) {
    if (a <= 0)
      throw std::invalid_argument("expand_rational: denominator exponents must be positive");
    for (int i = a; i <= bound; ++i)
      c[static_cast<std::size_t>(i)] += c[static_cast<std::size_t>(i - a)];
  }
  return PoincareSeries(std::move(c), bound);
}

bool coeffwise_leq(const PoincareSeries& a, const PoincareSeries& b,
                   int through_degree) {
  if (through_degree < 0)
    throw std::invalid_argument("coeffwise_leq: negative degree");
  for (const auto* s : {&a, &b})
    if (s->exact_through() && *s->exact_through() < through_degree)
      throw std::domain_error(
          "coeffwise_leq: series only exact through degree " +
          std::to_string(*s->exact_through()) + ", need " +
          std::to_string(through_degree));
  for (int d = 0; d <= through_degree; ++d)
    if (a.coeff(d) > b.coeff(d)) return false;
  return true;
}

bool is_palindromic(const PoincareSeries& p, int top_degree) {
  if (!p.is_polynomial() || p.degree() != top_degree) return false;
  for (int d = 0; d <= top_degree; ++d)
    if (p.coeff(d) != p.coeff(top_degree - d)) return false;
  return true;
}

}  // namespace higgs
