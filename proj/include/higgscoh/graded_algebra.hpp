#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace higgs::algebra {

using Rational = mpq_class;

/// One universal cohomology class: name, cohomological degree, parity, plus
/// the normalization convention where one applies.  Bookkeeping only; no
/// operation computes with this table.
struct GeneratorSpec {
  std::string name;
  int degree = 0;
  bool odd = false;
  std::string normalization;  // empty unless the class is a normalized one
};

/// The fixed rank-2 table: eps_j (j = 1..2g), alpha_i / beta_i / psi_{i,j}
/// for i = 1, 2, and the normalized classes alpha, beta, psi_j, gamma.
std::vector<GeneratorSpec> universal_class_table(int g);

/// Monomial alpha^a beta^b gamma^c in the even generators of degrees 2, 4, 6.
struct EvenMonomial {
  int a = 0;
  int b = 0;
  int c = 0;

  int degree() const { return 2 * a + 4 * b + 6 * c; }

  // Graded order, ties broken lexicographically with alpha < beta < gamma.
  friend auto operator<=>(const EvenMonomial& x, const EvenMonomial& y) {
    if (auto d = x.degree() <=> y.degree(); d != 0) return d;
    if (auto d = x.c <=> y.c; d != 0) return d;
    if (auto d = x.b <=> y.b; d != 0) return d;
    return x.a <=> y.a;
  }
  friend bool operator==(const EvenMonomial&, const EvenMonomial&) = default;
};

/// All monomials of the given cohomological degree, in the canonical order.
std::vector<EvenMonomial> even_monomials_of_degree(int degree);

/// Element of Q[alpha, beta, gamma].  No zero coefficients are stored.
class RingElement {
 public:
  RingElement() = default;
  static RingElement constant(const Rational& c);
  static RingElement monomial(EvenMonomial m, Rational coeff = 1);

  const std::map<EvenMonomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Degree when homogeneous; throws std::domain_error otherwise.
  int homogeneous_degree() const;
  bool is_homogeneous() const;

  RingElement& add_term(const EvenMonomial& m, const Rational& coeff);

  friend RingElement operator+(const RingElement& x, const RingElement& y);
  friend RingElement operator*(const RingElement& x, const RingElement& y);
  friend RingElement operator*(const Rational& c, const RingElement& x);
  bool operator==(const RingElement&) const = default;

 private:
  std::map<EvenMonomial, Rational> terms_;
};

/// Element of the exterior algebra on psi_1..psi_{2g}.  Index sets are kept
/// as bitmasks (bit j-1 = psi_j), which is the sorted-ascending canonical
/// form with the reordering sign folded into the coefficient.  Each psi_j
/// has cohomological degree 3.
class ExteriorElement {
 public:
  explicit ExteriorElement(int g);
  static ExteriorElement zero(int g) { return ExteriorElement(g); }
  static ExteriorElement scalar(int g, const Rational& c);
  /// psi-monomial from a list of 1-based indices; the sign of the sorting
  /// permutation is applied to the coefficient.
  static ExteriorElement monomial(int g, const std::vector<int>& psi_indices,
                                  Rational coeff = 1);

  int genus() const { return g_; }
  const std::map<std::uint64_t, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// 3 * (number of psi factors) when homogeneous; throws otherwise.
  int homogeneous_degree() const;

  friend ExteriorElement operator+(const ExteriorElement& x, const ExteriorElement& y);
  friend ExteriorElement operator*(const Rational& c, const ExteriorElement& x);
  bool operator==(const ExteriorElement&) const = default;

 private:
  friend ExteriorElement wedge_mul(const ExteriorElement&, const ExteriorElement&);
  ExteriorElement& add_term(std::uint64_t mask, const Rational& coeff);

  int g_ = 0;
  std::map<std::uint64_t, Rational> terms_;
};

/// Graded-anticommutative product; both factors must share the ambient g.
ExteriorElement wedge_mul(const ExteriorElement& x, const ExteriorElement& y);
ExteriorElement wedge_pow(const ExteriorElement& x, unsigned k);

/// gamma = -2 sum_{j=1}^{g} psi_j psi_{j+g}; zero when g = 0.
ExteriorElement gamma_element(int g);

/// Rank of the matrix whose rows are the vectors expressed in the monomial
/// basis of the given cohomological degree.  All vectors must be homogeneous
/// of that degree.  Exact fraction-free (Bareiss) elimination over the
/// integers after clearing each row's denominators.
long graded_slice_rank(const std::vector<RingElement>& vectors, int degree);
long graded_slice_rank(const std::vector<ExteriorElement>& vectors, int degree);

/// Bareiss rank of an integer matrix (rows may be empty).
long bareiss_rank(std::vector<std::vector<mpz_class>> m);

/// dim Lambda^k_0 = ker(Lambda^k V  --wedge gamma^{g+1-k}-->  Lambda^{2g+2-k} V),
/// computed both from the closed form C(2g,k) - C(2g,k-2) and as an exact
/// kernel dimension; throws std::logic_error if the two disagree and
/// std::invalid_argument when k < 0 or k > g.
long primitive_dim(int g, int k);

/// Exact binomial coefficient.
mpz_class binomial(unsigned long n, long k);

/// {"a,b,c": "p/q"} maps, for golden files.
nlohmann::json to_json(const RingElement& x);
nlohmann::json to_json(const ExteriorElement& x);

}  // namespace higgs::algebra
