#pragma once

#include "higgscoh/graded_algebra.hpp"
#include "higgscoh/series.hpp"

namespace higgs::ideal {

/// Parameters of the relation ideal I^{g'}_{k'} in Q[alpha, beta, gamma].
/// k' is the summand index of the direct-sum presentation (the source text
/// overloads the letter n for it; renamed to avoid colliding with the pole
/// order of K(n), which is unrelated).
struct IdealSpec {
  int g = 0;  // g' >= 0
  int k = 0;  // k' >= 0

  IdealSpec(int g_, int k_);
};

/// The relation
///   rho^c_{r,s,t} = sum_{i=0}^{min(c,r,s)} (c-i)! alpha^{r-i}/(r-i)!
///                   beta^{s-i}/(s-i)! (2 gamma)^{t+i}/i!,
/// c = r+3s+2t-2g'+2-k', defined for r,s,t >= 0 with
///   r+3s+3t > 3g'-3+k'   and   r+2s+2t >= 2g'-2+k'.
/// Homogeneous of degree 2r+4s+6t.  Inadmissible triples throw
/// std::domain_error naming the violated inequality.
algebra::RingElement rho(const IdealSpec& spec, int r, int s, int t);

/// Spanning set of the degree-d slice of the ideal: every product m*G with G
/// among gamma^{g'+1} and the admissible rho of degree <= d, and m an even
/// monomial bringing the product to degree exactly d.
std::vector<algebra::RingElement> ideal_basis_in_degree(const IdealSpec& spec,
                                                        int d);

/// Hilbert series of Q[alpha,beta,gamma] / I^{g'}_{k'}, exact through maxdeg.
/// Slice dimensions are #monomials minus the exact rank of the ideal slice.
PoincareSeries quotient_hilbert(const IdealSpec& spec, int maxdeg);

/// Right-hand side of the direct-sum presentation:
///   sum_{k=0}^{g} t^{3k} dim(Lambda^k_0) * Hilbert(Q[a,b,g]/I^{g-k}_k).
/// Exact through maxdeg; maxdeg < 0 selects the default bound 6g-6 (the
/// complex dimension of the fixed-determinant moduli space, above which the
/// ring vanishes -- asserted, not assumed, by full_h_series).
PoincareSeries dd_rhs_series(int g, int maxdeg = -1);

/// (1+t)^{2g} * dd_rhs_series(g) as an exact polynomial.  Computes the sum
/// through degree 6g, checks that degrees 6g-5..6g all vanish, and only then
/// drops the truncation.  Throws std::logic_error if the vanishing fails.
PoincareSeries full_h_series(int g);

}  // namespace higgs::ideal
