#include "higgscoh/graded_algebra.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace higgs::algebra {

namespace {

constexpr int kMaxAmbient = 62;  // bitmask representation limit: 2g <= 62

void check_genus(int g) {
  if (g < 0) throw std::invalid_argument("genus must be >= 0");
  if (2 * g > kMaxAmbient)
    throw std::invalid_argument("genus too large for bitmask exterior algebra");
}

// Sign of moving every factor of `right` past the factors of `left` into one
// sorted product; masks must be disjoint.
int merge_sign(std::uint64_t left, std::uint64_t right) {
  int inversions = 0;
  std::uint64_t r = right;
  while (r) {
    std::uint64_t low = r & (~r + 1);  // lowest set bit of the right factor
    inversions += std::popcount(left & ~(low - 1) & ~low);
    r ^= low;
  }
  return (inversions % 2 == 0) ? 1 : -1;
}

}  // namespace

std::vector<GeneratorSpec> universal_class_table(int g) {
  check_genus(g);
  std::vector<GeneratorSpec> table;
  for (int j = 1; j <= 2 * g; ++j)
    table.push_back({"eps_" + std::to_string(j), 1, true, ""});
  for (int i = 1; i <= 2; ++i) {
    table.push_back({"alpha_" + std::to_string(i), 2 * i - 2, false, ""});
    table.push_back({"beta_" + std::to_string(i), 2 * i, false, ""});
    for (int j = 1; j <= 2 * g; ++j) {
      int deg = 2 * i - 1;
      table.push_back({"psi_" + std::to_string(i) + "," + std::to_string(j),
                       deg, deg % 2 != 0, ""});
    }
  }
  table.push_back({"alpha", 2, false, "alpha = (1/2) alpha_2"});
  table.push_back({"beta", 4, false, "beta = -(1/4) beta_2"});
  for (int j = 1; j <= 2 * g; ++j)
    table.push_back({"psi_" + std::to_string(j), 3, true,
                     "psi_j = psi_{2,j}"});
  table.push_back(
      {"gamma", 6, false, "gamma = -2 sum_{j=1..g} psi_j psi_{j+g}"});
  return table;
}

std::vector<EvenMonomial> even_monomials_of_degree(int degree) {
  std::vector<EvenMonomial> out;
  if (degree < 0) return out;
  for (int c = 0; 6 * c <= degree; ++c)
    for (int b = 0; 6 * c + 4 * b <= degree; ++b) {
      int rest = degree - 6 * c - 4 * b;
      if (rest % 2 == 0) out.push_back({rest / 2, b, c});
    }
  std::sort(out.begin(), out.end());
  return out;
}

RingElement RingElement::constant(const Rational& c) {
  RingElement x;
  x.add_term({0, 0, 0}, c);
  return x;
}

RingElement RingElement::monomial(EvenMonomial m, Rational coeff) {
  if (m.a < 0 || m.b < 0 || m.c < 0)
    throw std::invalid_argument("RingElement: negative exponent");
  RingElement x;
  x.add_term(m, coeff);
  return x;
}

RingElement& RingElement::add_term(const EvenMonomial& m, const Rational& coeff) {
  if (coeff == 0) return *this;
  auto [it, inserted] = terms_.emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

bool RingElement::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_.begin()->first.degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& t) { return t.first.degree() == d; });
}

int RingElement::homogeneous_degree() const {
  if (terms_.empty())
    throw std::domain_error("homogeneous_degree: zero element");
  if (!is_homogeneous())
    throw std::domain_error("homogeneous_degree: inhomogeneous element");
  return terms_.begin()->first.degree();
}

RingElement operator+(const RingElement& x, const RingElement& y) {
  RingElement out = x;
  for (const auto& [m, c] : y.terms_) out.add_term(m, c);
  return out;
}

RingElement operator*(const RingElement& x, const RingElement& y) {
  RingElement out;
  for (const auto& [mx, cx] : x.terms_)
    for (const auto& [my, cy] : y.terms_)
      out.add_term({mx.a + my.a, mx.b + my.b, mx.c + my.c}, cx * cy);
  return out;
}

RingElement operator*(const Rational& c, const RingElement& x) {
  RingElement out;
  for (const auto& [m, cx] : x.terms_) out.add_term(m, c * cx);
  return out;
}

ExteriorElement::ExteriorElement(int g) : g_(g) { check_genus(g); }

ExteriorElement ExteriorElement::scalar(int g, const Rational& c) {
  ExteriorElement x(g);
  x.add_term(0, c);
  return x;
}

ExteriorElement ExteriorElement::monomial(int g, const std::vector<int>& psi_indices,
                                          Rational coeff) {
  ExteriorElement x(g);
  std::uint64_t mask = 0;
  int sign = 1;
  for (int idx : psi_indices) {
    if (idx < 1 || idx > 2 * g)
      throw std::invalid_argument("ExteriorElement: psi index out of range");
    std::uint64_t bit = std::uint64_t(1) << (idx - 1);
    if (mask & bit) return x;  // psi_j^2 = 0
    sign *= merge_sign(mask, bit);
    mask |= bit;
  }
  x.add_term(mask, sign < 0 ? Rational(-coeff) : coeff);
  return x;
}

ExteriorElement& ExteriorElement::add_term(std::uint64_t mask, const Rational& coeff) {
  if (coeff == 0) return *this;
  auto [it, inserted] = terms_.emplace(mask, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

int ExteriorElement::homogeneous_degree() const {
  if (terms_.empty())
    throw std::domain_error("homogeneous_degree: zero element");
  int k = std::popcount(terms_.begin()->first);
  for (const auto& [m, c] : terms_)
    if (std::popcount(m) != k)
      throw std::domain_error("homogeneous_degree: inhomogeneous element");
  return 3 * k;
}

ExteriorElement operator+(const ExteriorElement& x, const ExteriorElement& y) {
  if (x.g_ != y.g_)
    throw std::invalid_argument("ExteriorElement: ambient genus mismatch");
  ExteriorElement out = x;
  for (const auto& [m, c] : y.terms_) out.add_term(m, c);
  return out;
}

ExteriorElement operator*(const Rational& c, const ExteriorElement& x) {
  ExteriorElement out(x.g_);
  for (const auto& [m, cx] : x.terms_) out.add_term(m, c * cx);
  return out;
}

ExteriorElement wedge_mul(const ExteriorElement& x, const ExteriorElement& y) {
  if (x.g_ != y.g_)
    throw std::invalid_argument("wedge_mul: ambient genus mismatch");
  ExteriorElement out(x.g_);
  for (const auto& [mx, cx] : x.terms_)
    for (const auto& [my, cy] : y.terms_) {
      if (mx & my) continue;  // repeated psi factor
      int sign = merge_sign(mx, my);
      out.add_term(mx | my, sign < 0 ? Rational(-(cx * cy)) : cx * cy);
    }
  return out;
}

ExteriorElement wedge_pow(const ExteriorElement& x, unsigned k) {
  ExteriorElement out = ExteriorElement::scalar(x.genus(), 1);
  for (unsigned i = 0; i < k; ++i) out = wedge_mul(out, x);
  return out;
}

ExteriorElement gamma_element(int g) {
  ExteriorElement out(g);
  for (int j = 1; j <= g; ++j)
    out = out + ExteriorElement::monomial(g, {j, j + g}, -2);
  return out;
}

long bareiss_rank(std::vector<std::vector<mpz_class>> m) {
  const long rows = static_cast<long>(m.size());
  if (rows == 0) return 0;
  const long cols = static_cast<long>(m[0].size());
  mpz_class prev = 1;
  long rank = 0;
  long r = 0;
  for (long c = 0; c < cols && r < rows; ++c) {
    long p = -1;
    for (long i = r; i < rows; ++i)
      if (m[i][c] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(m[p], m[r]);
    for (long i = r + 1; i < rows; ++i) {
      for (long j = c + 1; j < cols; ++j) {
        mpz_class num = m[i][j] * m[r][c] - m[i][c] * m[r][j];
        mpz_divexact(m[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++rank;
    ++r;
  }
  return rank;
}

namespace {

// Scale a rational row to integers (rank is invariant under row scaling).
template <typename Key>
std::vector<mpz_class> integer_row(const std::map<Key, Rational>& terms,
                                   const std::map<Key, std::size_t>& column) {
  mpz_class lcm = 1;
  for (const auto& [k, q] : terms)
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
  std::vector<mpz_class> row(column.size());
  for (const auto& [k, q] : terms) {
    Rational scaled = q * Rational(lcm);
    row[column.at(k)] = scaled.get_num();
  }
  return row;
}

}  // namespace

long graded_slice_rank(const std::vector<RingElement>& vectors, int degree) {
  std::map<EvenMonomial, std::size_t> column;
  {
    auto basis = even_monomials_of_degree(degree);
    for (std::size_t i = 0; i < basis.size(); ++i) column[basis[i]] = i;
  }
  std::vector<std::vector<mpz_class>> rows;
  for (const auto& v : vectors) {
    if (v.is_zero()) continue;
    if (v.homogeneous_degree() != degree)
      throw std::invalid_argument("graded_slice_rank: vector of wrong degree");
    rows.push_back(integer_row(v.terms(), column));
  }
  if (column.empty()) return 0;
  return bareiss_rank(std::move(rows));
}

long graded_slice_rank(const std::vector<ExteriorElement>& vectors, int degree) {
  if (degree % 3 != 0)
    throw std::invalid_argument("graded_slice_rank: exterior degrees are multiples of 3");
  std::map<std::uint64_t, std::size_t> column;
  std::vector<std::map<std::uint64_t, Rational>> terms;
  for (const auto& v : vectors) {
    if (v.is_zero()) continue;
    if (v.homogeneous_degree() != degree)
      throw std::invalid_argument("graded_slice_rank: vector of wrong degree");
    for (const auto& [m, c] : v.terms())
      column.emplace(m, 0);
    terms.push_back(v.terms());
  }
  std::size_t i = 0;
  for (auto& [m, idx] : column) idx = i++;
  std::vector<std::vector<mpz_class>> rows;
  rows.reserve(terms.size());
  for (const auto& t : terms) rows.push_back(integer_row(t, column));
  if (column.empty()) return 0;
  return bareiss_rank(std::move(rows));
}

mpz_class binomial(unsigned long n, long k) {
  if (k < 0 || static_cast<unsigned long>(k) > n) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, static_cast<unsigned long>(k));
  return out;
}

long primitive_dim(int g, int k) {
  check_genus(g);
  if (k < 0 || k > g)
    throw std::invalid_argument("primitive_dim: need 0 <= k <= g (the presentation sums n = 0..g)");

  mpz_class closed = binomial(2 * g, k) - binomial(2 * g, k - 2);

  // Kernel route: wedge with gamma^{g+1-k} from Lambda^k into Lambda^{2g+2-k}.
  ExteriorElement gpow = wedge_pow(gamma_element(g), static_cast<unsigned>(g + 1 - k));
  std::vector<ExteriorElement> images;
  long domain_dim = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << (2 * g)); ++mask) {
    if (std::popcount(mask) != k) continue;
    ++domain_dim;
    std::vector<int> idx;
    for (int j = 1; j <= 2 * g; ++j)
      if (mask & (std::uint64_t(1) << (j - 1))) idx.push_back(j);
    ExteriorElement image = wedge_mul(ExteriorElement::monomial(g, idx), gpow);
    if (!image.is_zero()) images.push_back(image);
  }
  long rank = images.empty()
                  ? 0
                  : graded_slice_rank(images, 3 * (2 * g + 2 - k));
  long kernel = domain_dim - rank;

  if (closed != kernel)
    throw std::logic_error("primitive_dim: closed form and kernel rank disagree");
  return kernel;
}

nlohmann::json to_json(const RingElement& x) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [m, c] : x.terms()) {
    std::string key = std::to_string(m.a) + "," + std::to_string(m.b) + "," +
                      std::to_string(m.c);
    j[key] = c.get_str();
  }
  return j;
}

nlohmann::json to_json(const ExteriorElement& x) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [mask, c] : x.terms()) {
    std::string key;
    for (int b = 0; b < 64; ++b)
      if (mask & (std::uint64_t(1) << b)) {
        if (!key.empty()) key += ",";
        key += std::to_string(b + 1);
      }
    j[key.empty() ? "1" : key] = c.get_str();
  }
  return j;
}

}  // namespace higgs::algebra
