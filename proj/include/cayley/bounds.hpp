#pragma once

#include <string>

#include "cayley/common.hpp"

namespace cayley {

/// Upper limit on the order of a graph with the given degree and diameter:
///   undirected: 1 + d*((d-1)^k - 1)/(d-2)   (d >= 3)
///   directed:   (d^(k+1) - 1)/(d - 1)       (d >= 2)
inline std::uint64_t moore_bound(std::uint64_t d, unsigned k, bool directed) {
  require(k >= 1, errc::invalid_input, "diameter must be at least 1");
  __int128 bound;
  if (directed) {
    require(d >= 2, errc::degree_below_minimum, "directed degree must be at least 2");
    __int128 p = 1;
    for (unsigned i = 0; i <= k; ++i) p *= d;
    bound = (p - 1) / (static_cast<__int128>(d) - 1);
  } else {
    require(d >= 3, errc::degree_below_minimum, "undirected degree must be at least 3");
    __int128 p = 1;
    for (unsigned i = 0; i < k; ++i) p *= (d - 1);
    bound = 1 + static_cast<__int128>(d) * (p - 1) / (static_cast<__int128>(d) - 2);
  }
  require(bound >= 0 && bound < (__int128(1) << 63), errc::invalid_input,
          "Moore bound out of range");
  return static_cast<std::uint64_t>(bound);
}

/// Exact n / s^k together with the 5-place decimal rendering used in result
/// tables (truncated, not rounded).
struct Ratio {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  std::string fraction_text(std::uint64_t s, unsigned k) const {
    return std::to_string(num) + "/" + std::to_string(s) + "^" + std::to_string(k);
  }

  std::string decimal5() const {
    std::uint64_t scaled = 0;
    __int128 wide = static_cast<__int128>(num) * 100000 / den;
    scaled = static_cast<std::uint64_t>(wide);
    std::string frac = std::to_string(scaled % 100000);
    frac.insert(frac.begin(), 5 - frac.size(), '0');
    return std::to_string(scaled / 100000) + "." + frac;
  }
};

inline Ratio make_ratio(std::uint64_t n, std::uint64_t s, unsigned k) {
  require(s >= 2, errc::invalid_input, "set size must be at least 2");
  require(k >= 2, errc::invalid_input, "diameter must be at least 2");
  Ratio r;
  r.num = n;
  r.den = ipow(s, k);
  return r;
}

}  // namespace cayley
