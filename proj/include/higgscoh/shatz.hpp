#pragma once

#include <optional>
#include <utility>
#include <vector>

#include <json.hpp>

namespace higgs::shatz {

/// Harder-Narasimhan type: the (rank, degree) pairs of the semistable
/// quotients, with strictly decreasing slopes.  Validated on construction.
class HNType {
 public:
  using Part = std::pair<int, long long>;  // (rank, degree)

  explicit HNType(std::vector<Part> parts);

  const std::vector<Part>& parts() const { return parts_; }
  int total_rank() const;
  long long total_degree() const;
  bool is_semistable() const { return parts_.size() == 1; }

  bool operator==(const HNType&) const = default;

 private:
  std::vector<Part> parts_;
};

/// Vertices (0,0), (r1,d1), (r1+r2,d1+d2), ..., (r,d) of the convex Shatz
/// polygon; convexity is checked.
struct Polygon {
  std::vector<std::pair<long long, long long>> vertices;
  bool operator==(const Polygon&) const = default;
};

Polygon polygon(const HNType& mu);

/// All types of total (r, d): the semistable one plus, for r = 2, the
/// unstable ((1,d1),(1,d-d1)) with d1 > d/2, listed in increasing d1 up to
/// max_top_degree.  Ranks other than 1 and 2 are declined.
std::vector<HNType> enum_hn_types(int r, long long d, long long max_top_degree);

/// Shatz partial order: mu <= nu iff Pol(mu) is contained in Pol(nu).
/// Checked by testing each vertex of mu's polygon against the upper boundary
/// of nu's, with integer cross products.  Types must share (r, d).
bool type_leq(const HNType& mu, const HNType& nu);

/// Codimension of the unstable stratum of type mu inside the pole-order-n
/// Higgs space: the hypercohomology Euler characteristic of
/// Hom(L,M) -> Hom(L,M)(x)K(n) gives the bound 2g-2+n, which is exact (the
/// normal space is Hyp^1 and Hyp^0 = 0) whenever n > d1-d2 kills Hyp^2.
struct StratumCodim {
  int chi_bound = 0;
  std::optional<int> exact;
};

StratumCodim stratum_codim(const HNType& mu, int g, int n);

/// Expected dimensions of the pole-order-n moduli spaces.
struct ModuliDims {
  long long full = 0;       // r^2 (2g-2+n) + 2
  long long fixed_det = 0;  // (r^2-1)(2g-2+n)
};

ModuliDims moduli_dims(int r, int g, int n);

nlohmann::json to_json(const HNType& mu);
nlohmann::json to_json(const Polygon& p);

}  // namespace higgs::shatz
