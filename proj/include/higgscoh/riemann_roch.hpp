#pragma once

#include <stdexcept>

namespace higgs::rr {

/// Euler characteristic chi(L) = deg L + 1 - g of a line bundle on a smooth
/// curve of genus g.
inline long long chi(int g, long long deg) {
  if (g < 0) throw std::invalid_argument("chi: negative genus");
  return deg + 1 - g;
}

/// h^1 of a line bundle of negative degree: h^0 vanishes, so h^1 = -chi.
/// This single primitive feeds both the Morse indices (degree 1-2j) and the
/// unstable-stratum codimensions of the bundle recursion (degree d2-d1).
inline long long h1_of_negative_degree(int g, long long deg) {
  if (deg >= 0)
    throw std::invalid_argument("h1_of_negative_degree: degree must be negative");
  return -chi(g, deg);
}

}  // namespace higgs::rr
