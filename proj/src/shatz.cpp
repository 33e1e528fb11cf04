#include "higgscoh/shatz.hpp"

#include <numeric>
#include <stdexcept>

#include "higgscoh/riemann_roch.hpp"

namespace higgs::shatz {

HNType::HNType(std::vector<Part> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("HNType: empty type");
  for (const auto& [r, d] : parts_)
    if (r < 1) throw std::invalid_argument("HNType: ranks must be >= 1");
  for (std::size_t i = 0; i + 1 < parts_.size(); ++i) {
    // d_i / r_i > d_{i+1} / r_{i+1}, compared without division
    const auto& [r1, d1] = parts_[i];
    const auto& [r2, d2] = parts_[i + 1];
    if (!(d1 * r2 > d2 * r1))
      throw std::invalid_argument("HNType: slopes must strictly decrease");
  }
}

int HNType::total_rank() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0,
                         [](int acc, const Part& p) { return acc + p.first; });
}

long long HNType::total_degree() const {
  return std::accumulate(
      parts_.begin(), parts_.end(), 0LL,
      [](long long acc, const Part& p) { return acc + p.second; });
}

Polygon polygon(const HNType& mu) {
  Polygon p;
  long long r = 0, d = 0;
  p.vertices.emplace_back(0, 0);
  for (const auto& [ri, di] : mu.parts()) {
    r += ri;
    d += di;
    p.vertices.emplace_back(r, d);
  }
  for (std::size_t i = 0; i + 2 < p.vertices.size(); ++i) {
    auto [x0, y0] = p.vertices[i];
    auto [x1, y1] = p.vertices[i + 1];
    auto [x2, y2] = p.vertices[i + 2];
    if ((x1 - x0) * (y2 - y1) - (y1 - y0) * (x2 - x1) >= 0)
      throw std::logic_error("polygon: vertices are not convex");
  }
  return p;
}

std::vector<HNType> enum_hn_types(int r, long long d, long long max_top_degree) {
  if (r == 1) return {HNType({{1, d}})};
  if (r != 2)
    throw std::invalid_argument("enum_hn_types: not implemented: rank > 2");
  std::vector<HNType> types;
  types.push_back(HNType({{2, d}}));
  // d1 > d/2, i.e. 2*d1 > d, in increasing order
  for (long long d1 = d >= 0 ? d / 2 + 1 : -((-d + 1) / 2) + 1;
       d1 <= max_top_degree; ++d1)
    if (2 * d1 > d) types.push_back(HNType({{1, d1}, {1, d - d1}}));
  return types;
}

bool type_leq(const HNType& mu, const HNType& nu) {
  if (mu.total_rank() != nu.total_rank() ||
      mu.total_degree() != nu.total_degree())
    throw std::invalid_argument("type_leq: types have different total (r, d)");
  Polygon pm = polygon(mu);
  Polygon pn = polygon(nu);
  // Both polygons share the baseline from (0,0) to (r,d), so containment is:
  // every vertex of Pol(mu) lies on or below the upper path of Pol(nu).
  for (const auto& [x, y] : pm.vertices) {
    for (std::size_t i = 0; i + 1 < pn.vertices.size(); ++i) {
      auto [x0, y0] = pn.vertices[i];
      auto [x1, y1] = pn.vertices[i + 1];
      if (x0 <= x && x <= x1 && x0 < x1) {
        if ((x1 - x0) * (y - y0) - (y1 - y0) * (x - x0) > 0) return false;
      }
    }
  }
  return true;
}

StratumCodim stratum_codim(const HNType& mu, int g, int n) {
  if (g < 0 || n < 0)
    throw std::invalid_argument("stratum_codim: need g >= 0 and n >= 0");
  if (mu.is_semistable())
    throw std::invalid_argument(
        "stratum_codim: semistable type has no stratum codimension");
  if (mu.total_rank() != 2 || mu.parts().size() != 2)
    throw std::invalid_argument("stratum_codim: only rank-2 types supported");

  const long long d1 = mu.parts()[0].second;
  const long long d2 = mu.parts()[1].second;
  const long long a = d2 - d1;  // deg Hom(L, M) < 0

  // chi(Hyp END'') = chi(A) - chi(A (x) K(n)) = -deg K(n) = -(2g-2+n), and
  // Hyp^0 = 0, so dim Hyp^1 = 2g-2+n + dim Hyp^2.
  const long long twist = 2LL * g - 2 + n;  // deg K(n)
  StratumCodim out;
  out.chi_bound = static_cast<int>(rr::chi(g, a + twist) - rr::chi(g, a));
  // Hyp^2 = coker(H^1(A) -> H^1(A(x)K(n))) vanishes once deg(A(x)K(n)) >
  // 2g-2, i.e. n > d1-d2.
  if (n > d1 - d2) out.exact = out.chi_bound;
  return out;
}

ModuliDims moduli_dims(int r, int g, int n) {
  if (r < 1 || g < 0 || n < 0)
    throw std::invalid_argument("moduli_dims: need r >= 1, g >= 0, n >= 0");
  const long long base = 2LL * g - 2 + n;
  return {static_cast<long long>(r) * r * base + 2,
          (static_cast<long long>(r) * r - 1) * base};
}

nlohmann::json to_json(const HNType& mu) {
  nlohmann::json parts = nlohmann::json::array();
  for (const auto& [r, d] : mu.parts()) parts.push_back({r, d});
  return parts;
}

nlohmann::json to_json(const Polygon& p) {
  nlohmann::json verts = nlohmann::json::array();
  for (const auto& [x, y] : p.vertices) verts.push_back({x, y});
  return verts;
}

}  // namespace higgs::shatz
