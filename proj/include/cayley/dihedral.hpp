#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cayley/common.hpp"
#include "cayley/engine.hpp"
#include "cayley/graph.hpp"
#include "cayley/group_spec.hpp"
#include "cayley/matrix.hpp"
#include "cayley/perm.hpp"

namespace cayley {

/// Construction for arbitrary odd diameter k = 2q+1 >= 7 over the dihedral
/// group of order 2k acting on k coordinates by rotation and reversal.
struct DihedralParams {
  int k = 0;
  int q = 0;
  int t = 0;  // floor(q/2)

  static DihedralParams of(int k) {
    require(k >= 7 && k % 2 == 1, errc::k_invalid, "diameter must be odd and at least 7");
    DihedralParams p;
    p.k = k;
    p.q = (k - 1) / 2;
    p.t = p.q / 2;
    return p;
  }
};

/// The three 0/1 vectors, one per generator letter. With c = ceil(q/2):
/// v_r has its 1 at position c, v_rinv at c-1, and v_s has 1s at
/// {c-1, c, k-1-c, k-c} (a palindrome, which makes b(x)^-1 = b(-x)).
struct DihedralVectors {
  BitVec v_r, v_rinv, v_s;
};

inline DihedralVectors dihedral_vectors(int k) {
  DihedralParams p = DihedralParams::of(k);
  int c = (p.q + 1) / 2;
  DihedralVectors v;
  v.v_r.assign(static_cast<std::size_t>(k), 0);
  v.v_rinv.assign(static_cast<std::size_t>(k), 0);
  v.v_s.assign(static_cast<std::size_t>(k), 0);
  v.v_r[static_cast<std::size_t>(c)] = 1;
  v.v_rinv[static_cast<std::size_t>(c - 1)] = 1;
  v.v_s[static_cast<std::size_t>(c - 1)] = 1;
  v.v_s[static_cast<std::size_t>(c)] = 1;
  v.v_s[static_cast<std::size_t>(k - 1 - c)] = 1;
  v.v_s[static_cast<std::size_t>(k - c)] = 1;
  return v;
}

enum class DLetter : std::uint8_t { r, rinv, s };
using DString = std::vector<DLetter>;

/// Element r^rot s^flip of the dihedral group of order 2k.
struct DElem {
  int rot = 0;
  int flip = 0;
  bool operator==(const DElem&) const = default;
};

inline DElem dmul(int k, DElem a, DElem b) {
  int rot = a.flip ? (a.rot - b.rot % k + k) % k : (a.rot + b.rot) % k;
  return {rot, (a.flip + b.flip) % 2};
}

inline DElem dletter_value(int k, DLetter l) {
  switch (l) {
    case DLetter::r: return {1, 0};
    case DLetter::rinv: return {k - 1, 0};
    case DLetter::s: return {0, 1};
  }
  return {0, 0};
}

inline DElem dstring_value(int k, const DString& str) {
  DElem acc{0, 0};
  for (DLetter l : str) acc = dmul(k, acc, dletter_value(k, l));
  return acc;
}

inline DString inverse_string(const DString& str) {
  DString out;
  out.reserve(str.size());
  for (auto it = str.rbegin(); it != str.rend(); ++it)
    out.push_back(*it == DLetter::r ? DLetter::rinv : *it == DLetter::rinv ? DLetter::r : DLetter::s);
  return out;
}

inline std::string dstring_text(const DString& str) {
  std::string out;
  for (DLetter l : str) out += l == DLetter::r ? 'r' : l == DLetter::rinv ? 'R' : 's';
  return out;
}

inline DString dstring_parse(std::string_view text) {
  DString out;
  for (char ch : text) {
    require(ch == 'r' || ch == 'R' || ch == 's', errc::invalid_input,
            "string letters are r, R (r inverse), s");
    out.push_back(ch == 'r' ? DLetter::r : ch == 'R' ? DLetter::rinv : DLetter::s);
  }
  return out;
}

inline std::string delem_text(int k, DElem e) {
  std::string out;
  if (e.rot == 0 && e.flip == 0) return "1";
  if (e.rot > 0) {
    out = "r";
    if (e.rot > 1) out += "^" + std::to_string(e.rot);
  }
  if (e.flip) {
    if (!out.empty()) out += "*";
    out += "s";
  }
  return out;
}

/// Coordinate action of r^rot s^flip: rotate by rot, then reverse if flipped.
inline int dihedral_coord_image(int k, DElem y, int pos) {
  int moved = (pos + y.rot) % k;
  return y.flip ? k - 1 - moved : moved;
}

/// A length-k string is good when its k x k mapping matrix (row w is the
/// letter's vector permuted by the action of the suffix product) is
/// unimodular; then the parameter-to-coordinate map is onto over every
/// modulus at once.
inline IntMat dihedral_mapping_matrix(int k, const DString& str) {
  require(static_cast<int>(str.size()) == k, errc::invalid_input, "string length must equal k");
  DihedralVectors vecs = dihedral_vectors(k);
  IntMat m(k, k);
  DElem suffix{0, 0};
  for (int w = k - 1; w >= 0; --w) {
    const BitVec& v = str[static_cast<std::size_t>(w)] == DLetter::r      ? vecs.v_r
                      : str[static_cast<std::size_t>(w)] == DLetter::rinv ? vecs.v_rinv
                                                                          : vecs.v_s;
    for (int c = 0; c < k; ++c)
      if (v[static_cast<std::size_t>(c)]) m.at(w, dihedral_coord_image(k, suffix, c)) = 1;
    suffix = dmul(k, dletter_value(k, str[static_cast<std::size_t>(w)]), suffix);
  }
  return m;
}

inline bool is_good_string(int k, const DString& str) {
  long long d = det(dihedral_mapping_matrix(k, str));
  return d == 1 || d == -1;
}

namespace detail {

inline void append_run(DString& out, DLetter l, int count) {
  for (int i = 0; i < count; ++i) out.push_back(l);
}

inline void append_rsRs(DString& out, int copies) {
  for (int i = 0; i < copies; ++i) {
    out.push_back(DLetter::r);
    out.push_back(DLetter::s);
    out.push_back(DLetter::rinv);
    out.push_back(DLetter::s);
  }
}

}  // namespace detail

/// The prescribed good string for each element, by congruence class of k and
/// parity of the exponent. Powers r^-i (no flip) come from inverse strings.
inline DString good_string_for(int k, DElem e) {
  DihedralParams p = DihedralParams::of(k);
  int q = p.q;
  e.rot = ((e.rot % k) + k) % k;
  using detail::append_run;
  using detail::append_rsRs;
  DString out;

  if (e.flip == 0) {
    if (e.rot == 0) {
      append_run(out, DLetter::r, k);
      return out;
    }
    if (e.rot > q) {
      // r^-i for 1 <= i <= q
      DString fwd = good_string_for(k, {k - e.rot, 0});
      return inverse_string(fwd);
    }
    int i = e.rot;
    if (k % 4 == 1) {
      if (i % 2 == 0) {
        if (i == 2) {
          out.push_back(DLetter::s);
          append_run(out, DLetter::r, 2 * q - 1);
          out.push_back(DLetter::s);
        } else {
          out.push_back(DLetter::s);
          append_run(out, DLetter::r, q + 1 - i);
          append_rsRs(out, (i - 2) / 2);
          append_run(out, DLetter::r, q + 2 - i);
          out.push_back(DLetter::s);
        }
      } else {
        append_rsRs(out, (i - 1) / 2);
        append_run(out, DLetter::r, q + 1 - i);
        out.push_back(DLetter::s);
        append_run(out, DLetter::r, q - i);
        out.push_back(DLetter::s);
      }
    } else {  // k % 4 == 3
      if (i == q) {
        out.push_back(DLetter::s);
        out.push_back(DLetter::r);
        out.push_back(DLetter::s);
        out.push_back(DLetter::r);
        append_rsRs(out, (q - 3) / 2);
        append_run(out, DLetter::r, 3);
      } else if (i % 2 == 0) {
        out.push_back(DLetter::s);
        append_run(out, DLetter::r, q + 1 - i);
        append_rsRs(out, (i - 2) / 2);
        append_run(out, DLetter::r, q + 2 - i);
        out.push_back(DLetter::s);
      } else {
        append_rsRs(out, (i - 1) / 2);
        append_run(out, DLetter::r, q + 1 - i);
        out.push_back(DLetter::s);
        append_run(out, DLetter::r, q - i);
        out.push_back(DLetter::s);
      }
    }
    return out;
  }

  // flipped elements r^i s; exponents above q are treated as r^-i s
  int i = e.rot;
  bool negative = i > q;
  if (negative) i = k - i;

  if (k % 4 == 1) {
    if (!negative) {
      if (i == q) {
        append_run(out, DLetter::r, 2);
        append_rsRs(out, (q - 2) / 2);
        out.push_back(DLetter::r);
        out.push_back(DLetter::s);
        out.push_back(DLetter::r);
      } else if (i % 2 == 0) {
        append_rsRs(out, i / 2);
        append_run(out, DLetter::r, q - i);
        out.push_back(DLetter::s);
        append_run(out, DLetter::r, q - i);
      } else {
        out.push_back(DLetter::s);
        append_run(out, DLetter::r, q - i);
        append_rsRs(out, (i - 1) / 2);
        append_run(out, DLetter::r, q + 2 - i);
      }
    } else {
      if (i == q) {
        out.push_back(DLetter::r);
        out.push_back(DLetter::s);
        append_run(out, DLetter::r, 2);
        append_rsRs(out, (q - 4) / 2);
        out.push_back(DLetter::r);
        out.push_back(DLetter::s);
        append_run(out, DLetter::rinv, 2);
        out.push_back(DLetter::s);
      } else if (i % 2 == 1) {
        append_run(out, DLetter::r, q + 2 - i);
        append_rsRs(out, (i - 1) / 2);
        append_run(out, DLetter::r, q - i);
        out.push_back(DLetter::s);
      } else {
        append_run(out, DLetter::r, q - i);
        out.push_back(DLetter::s);
        append_run(out, DLetter::r, q - 1 - i);
        append_rsRs(out, i / 2);
        out.push_back(DLetter::r);
      }
    }
  } else {  // k % 4 == 3
    if (!negative) {
      if (i == q) {
        out.push_back(DLetter::s);
        out.push_back(DLetter::r);
        append_rsRs(out, (q - 1) / 2);
        out.push_back(DLetter::r);
      } else if (i % 2 == 0) {
        append_rsRs(out, i / 2);
        append_run(out, DLetter::r, q - i);
        out.push_back(DLetter::s);
        append_run(out, DLetter::r, q - i);
      } else {
        out.push_back(DLetter::s);
        append_run(out, DLetter::r, q - i);
        append_rsRs(out, (i - 1) / 2);
        append_run(out, DLetter::r, q + 2 - i);
      }
    } else {
      if (i % 2 == 1) {
        append_run(out, DLetter::r, q + 1 - i);
        append_rsRs(out, (i - 1) / 2);
        append_run(out, DLetter::r, q + 1 - i);
        out.push_back(DLetter::s);
      } else {
        append_run(out, DLetter::r, q + 1 - i);
        out.push_back(DLetter::s);
        append_run(out, DLetter::r, q + 1 - i);
        append_rsRs(out, (i - 2) / 2);
        append_run(out, DLetter::r, 2);
      }
    }
  }
  return out;
}

struct GoodStringTable {
  int k = 0;
  std::vector<std::pair<DElem, DString>> entries;  // all 2k elements
};

/// Good strings for every element of the dihedral group, each one checked:
/// correct length, correct value, unimodular mapping matrix.
inline GoodStringTable coverage_table(int k, unsigned jobs = 1) {
  DihedralParams::of(k);
  GoodStringTable table;
  table.k = k;
  table.entries.resize(static_cast<std::size_t>(2 * k));
  std::vector<std::string> problems(static_cast<std::size_t>(2 * k));
  parallel_for(static_cast<std::size_t>(2 * k), jobs, [&](std::size_t idx) {
    DElem e{static_cast<int>(idx) % k, static_cast<int>(idx) / k};
    DString str = good_string_for(k, e);
    std::string why;
    if (static_cast<int>(str.size()) != k)
      why = "wrong length";
    else if (!(dstring_value(k, str) == e))
      why = "wrong value";
    else if (!is_good_string(k, str))
      why = "mapping matrix not unimodular";
    if (!why.empty())
      problems[idx] = "element " + delem_text(k, e) + ": " + why;
    table.entries[idx] = {e, std::move(str)};
  });
  for (auto& p : problems)
    if (!p.empty()) fail(errc::goodness_violation, p);
  return table;
}

/// Z_m^k x| D_2k with the three-letter generating set; degree 3m, order
/// 2k m^k, diameter exactly k. Optional padding to degree 3m+1 or 3m+2 with
/// the flip involutions (0; rs) and (0; r^2 s).
inline CayleyGraph<SemidirectPowerGroup> build_dihedral_graph(
    int k, unsigned m, std::optional<std::size_t> target_degree = std::nullopt,
    std::uint64_t max_order = 2'000'000) {
  DihedralParams::of(k);
  require(m >= 2, errc::invalid_input, "modulus must be at least 2");
  std::uint64_t order = 2ull * static_cast<std::uint64_t>(k);
  for (int i = 0; i < k; ++i) {
    order *= m;
    require(order <= max_order, errc::budget_exceeded, "graph exceeds the memory budget");
  }

  GroupSpec dspec;
  dspec.tag = GroupSpec::kind::dihedral;
  dspec.n = 2 * k;
  auto K = std::make_shared<TableGroup>(dspec.build());
  std::vector<CoordPerm> gen_images{CoordPerm::rotation(k, 1), CoordPerm::reversal(k)};
  GroupHom phi = GroupHom::from_generator_images(K, gen_images);

  DihedralVectors vecs = dihedral_vectors(k);
  GeneratorSpec spec;
  spec.k = k;
  spec.directed = false;
  spec.K = K;
  spec.group_spec_text = dspec.text();
  spec.phi = phi;
  spec.S = {1, static_cast<elem_t>(k - 1), static_cast<elem_t>(k)};  // r, r^-1, s
  spec.V = {vecs.v_r, vecs.v_rinv, vecs.v_s};
  validate_generator_spec(spec, /*check_coverage=*/false);

  auto graph = instantiate_graph(spec, m);
  if (target_degree) graph = pad_genset(graph, *target_degree);
  return graph;
}

/// The generator spec underlying the dihedral graph (for certificates).
inline GeneratorSpec dihedral_generator_spec(int k) {
  DihedralParams::of(k);
  GroupSpec dspec;
  dspec.tag = GroupSpec::kind::dihedral;
  dspec.n = 2 * k;
  auto K = std::make_shared<TableGroup>(dspec.build());
  GroupHom phi = GroupHom::from_generator_images(
      K, {CoordPerm::rotation(k, 1), CoordPerm::reversal(k)});
  DihedralVectors vecs = dihedral_vectors(k);
  GeneratorSpec spec;
  spec.k = k;
  spec.directed = false;
  spec.K = K;
  spec.group_spec_text = dspec.text();
  spec.phi = std::move(phi);
  spec.S = {1, static_cast<elem_t>(k - 1), static_cast<elem_t>(k)};
  spec.V = {vecs.v_r, vecs.v_rinv, vecs.v_s};
  validate_generator_spec(spec, /*check_coverage=*/false);
  return spec;
}

}  // namespace cayley
