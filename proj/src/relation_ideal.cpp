#include "higgscoh/relation_ideal.hpp"

#include <stdexcept>
#include <string>

namespace higgs::ideal {

using algebra::EvenMonomial;
using algebra::Rational;
using algebra::RingElement;

IdealSpec::IdealSpec(int g_, int k_) : g(g_), k(k_) {
  if (g < 0 || k < 0) throw std::invalid_argument("IdealSpec: g', k' must be >= 0");
}

namespace {

mpz_class factorial(int n) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

bool admissible(const IdealSpec& spec, int r, int s, int t, std::string* why) {
  if (r < 0 || s < 0 || t < 0) {
    if (why) *why = "r, s, t must be >= 0";
    return false;
  }
  if (!(r + 3 * s + 3 * t > 3 * spec.g - 3 + spec.k)) {
    if (why)
      *why = "r+3s+3t > 3g'-3+k' violated (" + std::to_string(r + 3 * s + 3 * t) +
             " <= " + std::to_string(3 * spec.g - 3 + spec.k) + ")";
    return false;
  }
  if (!(r + 2 * s + 2 * t >= 2 * spec.g - 2 + spec.k)) {
    if (why)
      *why = "r+2s+2t >= 2g'-2+k' violated (" + std::to_string(r + 2 * s + 2 * t) +
             " < " + std::to_string(2 * spec.g - 2 + spec.k) + ")";
    return false;
  }
  return true;
}

}  // namespace

RingElement rho(const IdealSpec& spec, int r, int s, int t) {
  std::string why;
  if (!admissible(spec, r, s, t, &why))
    throw std::domain_error("rho: inadmissible (r,s,t): " + why);

  const int c = r + 3 * s + 2 * t - 2 * spec.g + 2 - spec.k;
  // The second admissibility condition gives c - s = (r+2s+2t) - (2g'-2+k')
  // >= 0, hence min(c,r,s) = min(r,s) and every factorial argument below is
  // nonnegative.
  if (c < s) throw std::logic_error("rho: c < s for admissible triple");

  RingElement out;
  const int degree = 2 * r + 4 * s + 6 * t;
  for (int i = 0; i <= std::min(r, s); ++i) {
    mpz_class num = factorial(c - i);
    mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(),
                 static_cast<unsigned long>(t + i));  // (2 gamma)^{t+i}
    Rational coeff(num, factorial(r - i) * factorial(s - i) * factorial(i));
    coeff.canonicalize();
    EvenMonomial m{r - i, s - i, t + i};
    if (m.degree() != degree)
      throw std::logic_error("rho: inhomogeneous term");
    out.add_term(m, coeff);
  }
  return out;
}

std::vector<RingElement> ideal_basis_in_degree(const IdealSpec& spec, int d) {
  if (d < 0) throw std::invalid_argument("ideal_basis_in_degree: d < 0");

  // Generators of degree <= d: gamma^{g'+1} plus all admissible rho.  The
  // rho of degree 2r+4s+6t are finite in number below any degree bound.
  std::vector<std::pair<RingElement, int>> generators;
  if (6 * (spec.g + 1) <= d)
    generators.emplace_back(
        RingElement::monomial({0, 0, spec.g + 1}), 6 * (spec.g + 1));
  for (int t = 0; 6 * t <= d; ++t)
    for (int s = 0; 6 * t + 4 * s <= d; ++s)
      for (int r = 0; 6 * t + 4 * s + 2 * r <= d; ++r)
        if (admissible(spec, r, s, t, nullptr))
          generators.emplace_back(rho(spec, r, s, t), 2 * r + 4 * s + 6 * t);

  std::vector<RingElement> slice;
  for (const auto& [gen, gdeg] : generators)
    for (const auto& m : algebra::even_monomials_of_degree(d - gdeg))
      slice.push_back(RingElement::monomial(m) * gen);
  return slice;
}

PoincareSeries quotient_hilbert(const IdealSpec& spec, int maxdeg) {
  if (maxdeg < 0) throw std::invalid_argument("quotient_hilbert: maxdeg < 0");
  std::vector<Int> dims(static_cast<std::size_t>(maxdeg) + 1);
  for (int d = 0; d <= maxdeg; ++d) {
    auto monomials = algebra::even_monomials_of_degree(d);
    if (monomials.empty()) continue;
    long rank = algebra::graded_slice_rank(ideal_basis_in_degree(spec, d), d);
    dims[static_cast<std::size_t>(d)] =
        static_cast<long>(monomials.size()) - rank;
  }
  return PoincareSeries(std::move(dims), maxdeg);
}

PoincareSeries dd_rhs_series(int g, int maxdeg) {
  if (g < 1) throw std::invalid_argument("dd_rhs_series: g must be >= 1");
  if (maxdeg < 0) maxdeg = 6 * g - 6;
  PoincareSeries total = PoincareSeries::zero().truncated(maxdeg);
  for (int k = 0; k <= g; ++k) {
    if (3 * k > maxdeg) break;
    Int dim(algebra::primitive_dim(g, k));
    PoincareSeries summand =
        PoincareSeries::monomial(3 * k, dim) *
        quotient_hilbert(IdealSpec(g - k, k), maxdeg - 3 * k);
    total = total + summand;
  }
  return total;
}

PoincareSeries full_h_series(int g) {
  if (g < 1) throw std::invalid_argument("full_h_series: g must be >= 1");
  const int window = 6 * g;
  PoincareSeries rhs = dd_rhs_series(g, window);
  for (int d = 6 * g - 5; d <= window; ++d)
    if (rhs.coeff(d) != 0)
      throw std::logic_error(
          "full_h_series: presentation fails to vanish above degree 6g-6");
  return pow(PoincareSeries({Int(1), Int(1)}), 2 * static_cast<unsigned>(g)) *
         rhs.as_polynomial();
}

}  // namespace higgs::ideal
