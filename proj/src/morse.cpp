#include "higgscoh/morse.hpp"

#include <stdexcept>

#include "higgscoh/graded_algebra.hpp"
#include "higgscoh/riemann_roch.hpp"
#include "higgscoh/shatz.hpp"

namespace higgs::morse {

namespace {

// floor((n-1)/2); C++ integer division truncates toward zero, and n = 0
// must give -1 here (so the j range for n = 0 ends at g-1).
int floor_half(int m) { return m >= 0 ? m / 2 : -((-m + 1) / 2); }

PoincareSeries one_plus_t_pow(int e) {
  return pow(PoincareSeries({Int(1), Int(1)}), static_cast<unsigned>(e));
}

}  // namespace

ModuliParams::ModuliParams(int g_, int n_, long long d_) : g(g_), n(n_), d(d_) {
  if (g < 1) throw std::invalid_argument("ModuliParams: genus must be >= 1");
  if (n < 0) throw std::invalid_argument("ModuliParams: pole order must be >= 0");
  if (d % 2 == 0) throw std::invalid_argument("ModuliParams: d must be odd");
}

PoincareSeries sym_poincare(int g, int k) {
  if (g < 0 || k < 0) throw std::invalid_argument("sym_poincare: g, k >= 0");
  // [q^k] (1+qt)^{2g} / ((1-q)(1-q t^2)): choose a factors of qt, c factors
  // of q t^2, and soak up the rest with 1/(1-q).
  std::vector<Int> coeffs(static_cast<std::size_t>(2 * k) + 1);
  for (int a = 0; a <= std::min(k, 2 * g); ++a) {
    Int bin = algebra::binomial(static_cast<unsigned long>(2 * g), a);
    for (int c = 0; c <= k - a; ++c)
      coeffs[static_cast<std::size_t>(a + 2 * c)] += bin;
  }
  return PoincareSeries(std::move(coeffs));
}

PoincareSeries jacobian_poincare(int g) {
  if (g < 0) throw std::invalid_argument("jacobian_poincare: g >= 0");
  return one_plus_t_pow(2 * g);
}

PoincareSeries stable_bundles_poincare(int g, long long d) {
  if (g < 1) throw std::invalid_argument("stable_bundles_poincare: g >= 1");
  if (d % 2 == 0)
    throw std::invalid_argument("stable_bundles_poincare: d must be odd");

  const int top = 2 * (4 * g - 3);
  const int window = top + 6;

  // Atiyah-Bott series of B(gauge group) for rank 2:
  // (1+t)^{2g} (1+t^3)^{2g} / ((1-t^2)^2 (1-t^4)).
  PoincareSeries bg = expand_rational(
      one_plus_t_pow(2 * g) * pow(PoincareSeries({Int(1), Int(0), Int(0), Int(1)}),
                                  static_cast<unsigned>(2 * g)),
      {2, 2, 4}, window);

  // Equivariant series of one split stratum: two line-bundle gauge factors,
  // ((1+t)^{2g} / (1-t^2))^2.
  PoincareSeries split = expand_rational(one_plus_t_pow(4 * g), {2, 2}, window);

  // Unstable strata below the truncation window: 2 codim <= window with
  // codim = d1 - d2 + g - 1.
  const long long max_top = (window / 2 - g + 1 + d) / 2 + 1;
  PoincareSeries ss = bg;
  for (const auto& mu : shatz::enum_hn_types(2, d, max_top)) {
    if (mu.is_semistable()) continue;
    const long long d1 = mu.parts()[0].second;
    const long long d2 = mu.parts()[1].second;
    const long long codim = rr::h1_of_negative_degree(g, d2 - d1);
    if (2 * codim > window) continue;
    ss = ss - PoincareSeries::monomial(static_cast<int>(2 * codim)) * split;
  }

  // Stable = semistable for odd d, and every stabilizer is the central
  // circle, so divide by P(B C^*) = 1/(1-t^2).
  PoincareSeries series = ss * PoincareSeries({Int(1), Int(0), Int(-1)});

  for (int i = top + 1; i <= window; ++i)
    if (series.coeff(i) != 0)
      throw std::logic_error("stable_bundles_poincare: series does not vanish above 2(4g-3)");
  PoincareSeries result = series.as_polynomial();
  if (!is_palindromic(result, top))
    throw std::logic_error("stable_bundles_poincare: Poincare duality violated");
  return result;
}

int morse_index(int g, int j) {
  if (g < 1 || j < 0) throw std::invalid_argument("morse_index: g >= 1, j >= 0");
  if (j == 0) return 0;  // absolute minimum: no downward flow
  return static_cast<int>(2 * rr::h1_of_negative_degree(g, 1 - 2LL * j));
}

std::vector<CriticalStratum> critical_manifolds(const ModuliParams& p) {
  const int jmax = p.g + floor_half(p.n - 1);
  std::vector<CriticalStratum> strata;
  for (int j = 0; j <= jmax; ++j) {
    CriticalStratum s;
    s.j = j;
    s.morse_index = morse_index(p.g, j);
    if (j == 0) {
      s.factors = {"N(2," + std::to_string(p.d) + ")"};
      s.complex_dim = 4LL * p.g - 3;
      s.poincare = stable_bundles_poincare(p.g, p.d);
    } else {
      const long long jac_deg = (p.d + 1) / 2 - j;
      const int sym_deg = 2 * p.g + p.n - 1 - 2 * j;
      s.factors = {"Jac^" + std::to_string(jac_deg) + "(C)",
                   "Sym^" + std::to_string(sym_deg) + "(C)"};
      s.complex_dim = p.g + sym_deg;
      s.poincare = jacobian_poincare(p.g) * sym_poincare(p.g, sym_deg);
    }
    strata.push_back(std::move(s));
  }
  return strata;
}

PoincareSeries higgs_poincare_morse(const ModuliParams& p) {
  PoincareSeries total;
  for (const auto& s : critical_manifolds(p))
    total = total + PoincareSeries::monomial(s.morse_index) * s.poincare;
  if (total.coeff(0) != 1)
    throw std::logic_error("higgs_poincare_morse: H_n must be connected");
  return total;
}

PoincareSeries classifying_space_poincare(int g, int trunc_n) {
  if (g < 1) throw std::invalid_argument("classifying_space_poincare: g >= 1");
  if (trunc_n < 0)
    throw std::invalid_argument("classifying_space_poincare: trunc_n >= 0");
  // (1-t^2) P(B gauge): the h-polynomial splitting removes one 1/(1-t^2).
  return expand_rational(
      one_plus_t_pow(2 * g) * pow(PoincareSeries({Int(1), Int(0), Int(0), Int(1)}),
                                  static_cast<unsigned>(2 * g)),
      {2, 4}, trunc_n);
}

}  // namespace higgs::morse
