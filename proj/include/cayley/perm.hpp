#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "cayley/common.hpp"

namespace cayley {

/// A permutation of coordinate positions 0..k-1. `map[i]` is the position the
/// content of coordinate i moves to. Composition is left-to-right: in a*b,
/// a acts first.
struct CoordPerm {
  std::vector<std::uint8_t> map;

  CoordPerm() = default;
  explicit CoordPerm(std::vector<std::uint8_t> images) : map(std::move(images)) {}

  static CoordPerm identity(int k) {
    CoordPerm p;
    p.map.resize(static_cast<std::size_t>(k));
    std::iota(p.map.begin(), p.map.end(), std::uint8_t{0});
    return p;
  }

  /// Right rotation by `shift` places: coordinate i's content moves to i+shift.
  static CoordPerm rotation(int k, int shift) {
    shift = ((shift % k) + k) % k;
    CoordPerm p;
    p.map.resize(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) p.map[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>((i + shift) % k);
    return p;
  }

  /// Full reversal: coordinate i's content moves to k-1-i.
  static CoordPerm reversal(int k) {
    CoordPerm p;
    p.map.resize(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) p.map[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(k - 1 - i);
    return p;
  }

  int degree() const { return static_cast<int>(map.size()); }

  bool is_identity() const {
    for (int i = 0; i < degree(); ++i)
      if (map[static_cast<std::size_t>(i)] != i) return false;
    return true;
  }

  bool is_valid() const {
    std::vector<char> seen(map.size(), 0);
    for (auto v : map) {
      if (v >= map.size() || seen[v]) return false;
      seen[v] = 1;
    }
    return true;
  }

  CoordPerm inverse() const {
    CoordPerm p;
    p.map.resize(map.size());
    for (std::size_t i = 0; i < map.size(); ++i) p.map[map[i]] = static_cast<std::uint8_t>(i);
    return p;
  }

  int apply(int pos) const { return map[static_cast<std::size_t>(pos)]; }

  /// Moves the entry at position i to position map[i].
  template <class T>
  std::vector<T> permute(const std::vector<T>& v) const {
    std::vector<T> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[map[i]] = v[i];
    return out;
  }

  /// Sorted cycle lengths, fixed points included.
  std::vector<int> cycle_type() const {
    std::vector<int> type;
    std::vector<char> seen(map.size(), 0);
    for (std::size_t i = 0; i < map.size(); ++i) {
      if (seen[i]) continue;
      int len = 0;
      std::size_t j = i;
      while (!seen[j]) {
        seen[j] = 1;
        j = map[j];
        ++len;
      }
      type.push_back(len);
    }
    std::sort(type.begin(), type.end());
    return type;
  }

  int order() const {
    long long o = 1;
    for (int len : cycle_type()) o = std::lcm<long long>(o, len);
    return static_cast<int>(o);
  }

  auto operator<=>(const CoordPerm&) const = default;
};

/// a then b.
inline CoordPerm compose(const CoordPerm& a, const CoordPerm& b) {
  CoordPerm r;
  r.map.resize(a.map.size());
  for (std::size_t i = 0; i < a.map.size(); ++i) r.map[i] = b.map[a.map[i]];
  return r;
}

inline CoordPerm power(const CoordPerm& p, long long e) {
  int k = p.degree();
  CoordPerm base = p;
  if (e < 0) {
    base = p.inverse();
    e = -e;
  }
  CoordPerm acc = CoordPerm::identity(k);
  while (e > 0) {
    if (e & 1) acc = compose(acc, base);
    base = compose(base, base);
    e >>= 1;
  }
  return acc;
}

/// One-line cycle notation with 1-based points, e.g. "(1 2)(3 4)"; identity is "()".
inline std::string cycle_string(const CoordPerm& p) {
  std::string out;
  std::vector<char> seen(p.map.size(), 0);
  for (std::size_t i = 0; i < p.map.size(); ++i) {
    if (seen[i] || p.map[i] == i) {
      seen[i] = 1;
      continue;
    }
    out += '(';
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = 1;
      if (!first) out += ' ';
      out += std::to_string(j + 1);
      first = false;
      j = p.map[j];
    }
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

}  // namespace cayley
