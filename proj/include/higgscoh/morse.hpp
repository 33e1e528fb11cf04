#pragma once

#include <string>
#include <vector>

#include "higgscoh/series.hpp"

namespace higgs::morse {

/// Parameters of the pole-order-n Higgs moduli space H_n for rank 2.
struct ModuliParams {
  int g = 1;        // genus >= 1
  int n = 0;        // pole order >= 0
  long long d = 1;  // degree, odd (coprime to the rank)
  int r = 2;        // rank, fixed to 2 for all assembly operations

  ModuliParams(int g_, int n_, long long d_);
};

/// One critical submanifold F_n^j of the circle action, with its Poincare
/// polynomial and Morse index.
struct CriticalStratum {
  int j = 0;
  std::vector<std::string> factors;
  long long complex_dim = 0;
  int morse_index = 0;
  PoincareSeries poincare;
};

/// Poincare polynomial of Sym^k C, via the coefficient of q^k in the
/// Macdonald generating series (1+qt)^{2g} / ((1-q)(1-q t^2)).  Palindromic
/// of degree 2k.
PoincareSeries sym_poincare(int g, int k);

/// (1+t)^{2g}.
PoincareSeries jacobian_poincare(int g);

/// Poincare polynomial of the moduli space of rank-2 stable bundles of odd
/// degree d, from the Harder-Narasimhan recursion over the gauge
/// classifying-space series: equivariant series of the semistable stratum =
/// P(BG) - sum over unstable types of t^{2 codim} * (split-type series),
/// divided by the series 1/(1-t^2) of the central circle's classifying
/// space.  The result, a priori a truncated expansion, is checked to vanish
/// above degree 2(4g-3) and to be palindromic before being returned as an
/// exact polynomial.
PoincareSeries stable_bundles_poincare(int g, long long d = 1);

/// Morse index of F^j: 0 at the minimum; for j >= 1, twice the rank of the
/// negative normal bundle H^1 of a line bundle of degree 1-2j, which is
/// 2(g+2j-2) by Riemann-Roch.  Independent of the pole order n.
int morse_index(int g, int j);

/// The critical submanifolds F_n^j, j = 0 .. g + floor((n-1)/2).
std::vector<CriticalStratum> critical_manifolds(const ModuliParams& p);

/// Perfect Bott-Morse assembly: P_t(H_n) = sum_j t^{index(j)} P_t(F_n^j).
PoincareSeries higgs_poincare_morse(const ModuliParams& p);

/// Series of the classifying space of the projectivized gauge group,
/// (1+t)^{2g} (1+t^3)^{2g} / ((1-t^2)(1-t^4)), exact through trunc_n.  The
/// coefficients of P_t(H_n) stabilize to this as n grows.
PoincareSeries classifying_space_poincare(int g, int trunc_n);

}  // namespace higgs::morse
