#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "cayley/common.hpp"

namespace cayley {

/// Diameter-3 generating set for Z_n built from balanced digits in base
/// K = ceil(n^(1/3)): the residues +-i, +-iK, +-iK^2 for 1 <= i <= floor(K/2).
struct DigitCover {
  std::uint64_t n = 0;
  std::uint64_t base = 0;         // K
  std::uint64_t digit_bound = 0;  // M = floor(K/2)
  std::vector<elem_t> set;        // sorted residues, duplicates collapsed
};

namespace detail {

inline std::vector<elem_t> digit_cover_set(std::uint64_t n) {
  std::uint64_t K = icbrt_ceil(n);
  std::uint64_t M = K / 2;
  std::vector<elem_t> s;
  for (std::uint64_t scale : {std::uint64_t{1}, K, K * K})
    for (std::uint64_t i = 1; i <= M; ++i) {
      std::uint64_t v = (i * scale) % n;
      if (v == 0) continue;
      s.push_back(static_cast<elem_t>(v));
      s.push_back(static_cast<elem_t>(n - v));
    }
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

/// Componentwise digit cover of Z_n x Z_n with a zero digit adjoined and the
/// origin removed. Valid (and brute-force checked) from n = 2 up; the public
/// entry point keeps the n >= 6 contract.
inline std::vector<std::pair<elem_t, elem_t>> pair_cover(std::uint64_t n) {
  require(n >= 2, errc::n_too_small, "modulus must be at least 2");
  require(n <= 128, errc::invalid_input, "pair cover modulus out of verified range");
  std::vector<elem_t> s = digit_cover_set(n);
  s.insert(s.begin(), 0);
  std::vector<std::pair<elem_t, elem_t>> t;
  for (elem_t a : s)
    for (elem_t b : s) {
      if (a == 0 && b == 0) continue;
      t.emplace_back(a, b);
    }
  // three breadth-first levels must reach everything
  std::vector<char> dist(n * n, 0);
  std::vector<std::uint32_t> frontier{0}, next;
  dist[0] = 1;
  for (int level = 0; level < 3; ++level) {
    next.clear();
    for (auto v : frontier) {
      elem_t x = static_cast<elem_t>(v / n), y = static_cast<elem_t>(v % n);
      for (auto [a, b] : t) {
        std::uint32_t w = static_cast<std::uint32_t>(((x + a) % n) * n + (y + b) % n);
        if (!dist[w]) {
          dist[w] = 1;
          next.push_back(w);
        }
      }
    }
    frontier.swap(next);
  }
  for (std::uint64_t v = 0; v < n * n; ++v)
    require(dist[v] != 0, errc::invalid_input, "pair cover misses an element");
  return t;
}

}  // namespace detail

inline DigitCover zn_cover(std::uint64_t n) {
  require(n >= 6, errc::n_too_small, "modulus must be at least 6");
  DigitCover c;
  c.n = n;
  c.base = icbrt_ceil(n);
  c.digit_bound = c.base / 2;
  c.set = detail::digit_cover_set(n);
  return c;
}

inline std::vector<std::pair<elem_t, elem_t>> znzn_cover(std::uint64_t n) {
  require(n >= 6, errc::n_too_small, "modulus must be at least 6");
  return detail::pair_cover(n);
}

}  // namespace cayley
