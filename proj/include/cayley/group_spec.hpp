#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "cayley/common.hpp"
#include "cayley/group.hpp"
#include "cayley/perm.hpp"

namespace cayley {

/// Constructor expression for a catalog group. The canonical text form, e.g.
/// "semidirect(cyclic(15),cyclic(4),exp=2)", is what certificates and CLI
/// flags carry.
struct GroupSpec {
  enum class kind { cyclic, dihedral, symmetric, alternating, product, semidirect, heisenberg2 };
  enum class action { none, exponent, matrix, gen_images };

  kind tag = kind::cyclic;
  long long n = 0;                                   // cyclic/dihedral/symmetric/alternating/heisenberg2 parameter
  std::vector<GroupSpec> factors;                    // product factors, or [base] for semidirect
  long long act_m = 0;                               // order of the acting cyclic group
  action act = action::none;
  long long exponent = 0;
  std::vector<std::vector<long long>> action_matrix; // row-major, acts on coordinate column vectors
  std::vector<std::string> gen_image_words;          // image of base generator i, as a word over g0,g1,...

  static GroupSpec parse(std::string_view text);
  std::string text() const;
  std::uint64_t declared_order() const;
  TableGroup build(std::size_t max_order = 5000) const;

  static GroupSpec cyclic_of(long long n) {
    GroupSpec s;
    s.tag = kind::cyclic;
    s.n = n;
    return s;
  }
};

namespace detail {

struct SpecParser {
  std::string_view s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }
  bool peek(char c) {
    skip_ws();
    return pos < s.size() && s[pos] == c;
  }
  bool eat(char c) {
    if (peek(c)) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    require(eat(c), errc::unsupported_spec, std::string("expected '") + c + "' in group spec");
  }
  std::string ident() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) ++pos;
    require(pos > start, errc::unsupported_spec, "expected identifier in group spec");
    return std::string(s.substr(start, pos - start));
  }
  long long integer() {
    skip_ws();
    bool neg = eat('-');
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    require(pos > start, errc::unsupported_spec, "expected integer in group spec");
    long long v = std::stoll(std::string(s.substr(start, pos - start)));
    return neg ? -v : v;
  }

  GroupSpec parse_spec() {
    std::string name = ident();
    GroupSpec out;
    expect('(');
    if (name == "cyclic" || name == "dihedral" || name == "symmetric" || name == "alternating" ||
        name == "heisenberg2") {
      out.tag = name == "cyclic"        ? GroupSpec::kind::cyclic
                : name == "dihedral"    ? GroupSpec::kind::dihedral
                : name == "symmetric"   ? GroupSpec::kind::symmetric
                : name == "alternating" ? GroupSpec::kind::alternating
                                        : GroupSpec::kind::heisenberg2;
      out.n = integer();
    } else if (name == "product") {
      out.tag = GroupSpec::kind::product;
      out.factors.push_back(parse_spec());
      while (eat(',')) out.factors.push_back(parse_spec());
      require(out.factors.size() >= 2, errc::unsupported_spec, "product needs at least two factors");
    } else if (name == "semidirect") {
      out.tag = GroupSpec::kind::semidirect;
      out.factors.push_back(parse_spec());
      expect(',');
      GroupSpec acting = parse_spec();
      require(acting.tag == GroupSpec::kind::cyclic, errc::unsupported_spec,
              "semidirect acting group must be cyclic");
      out.act_m = acting.n;
      expect(',');
      std::string key = ident();
      expect('=');
      if (key == "exp") {
        out.act = GroupSpec::action::exponent;
        out.exponent = integer();
      } else if (key == "mat") {
        out.act = GroupSpec::action::matrix;
        expect('[');
        do {
          expect('[');
          std::vector<long long> row{integer()};
          while (eat(',')) row.push_back(integer());
          expect(']');
          out.action_matrix.push_back(std::move(row));
        } while (eat(','));
        expect(']');
      } else if (key == "genimg") {
        out.act = GroupSpec::action::gen_images;
        expect('[');
        do {
          skip_ws();
          std::size_t start = pos;
          while (pos < s.size() && s[pos] != ',' && s[pos] != ']') ++pos;
          std::string w(s.substr(start, pos - start));
          while (!w.empty() && w.back() == ' ') w.pop_back();
          require(!w.empty(), errc::unsupported_spec, "empty generator image word");
          out.gen_image_words.push_back(std::move(w));
        } while (eat(','));
        expect(']');
      } else {
        fail(errc::unsupported_spec, "unknown semidirect action '" + key + "'");
      }
    } else {
      fail(errc::unsupported_spec, "unknown group constructor '" + name + "'");
    }
    expect(')');
    return out;
  }
};

inline std::uint64_t factorial(long long n) {
  std::uint64_t r = 1;
  for (long long i = 2; i <= n; ++i) r *= static_cast<std::uint64_t>(i);
  return r;
}

}  // namespace detail

inline GroupSpec GroupSpec::parse(std::string_view text) {
  detail::SpecParser p{text};
  GroupSpec spec = p.parse_spec();
  p.skip_ws();
  require(p.pos == text.size(), errc::unsupported_spec, "trailing characters in group spec");
  return spec;
}

inline std::string GroupSpec::text() const {
  switch (tag) {
    case kind::cyclic: return "cyclic(" + std::to_string(n) + ")";
    case kind::dihedral: return "dihedral(" + std::to_string(n) + ")";
    case kind::symmetric: return "symmetric(" + std::to_string(n) + ")";
    case kind::alternating: return "alternating(" + std::to_string(n) + ")";
    case kind::heisenberg2: return "heisenberg2(" + std::to_string(n) + ")";
    case kind::product: {
      std::string out = "product(";
      for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) out += ',';
        out += factors[i].text();
      }
      return out + ")";
    }
    case kind::semidirect: {
      std::string out = "semidirect(" + factors[0].text() + ",cyclic(" + std::to_string(act_m) + "),";
      if (act == action::exponent) {
        out += "exp=" + std::to_string(exponent);
      } else if (act == action::matrix) {
        out += "mat=[";
        for (std::size_t r = 0; r < action_matrix.size(); ++r) {
          if (r) out += ',';
          out += '[';
          for (std::size_t c = 0; c < action_matrix[r].size(); ++c) {
            if (c) out += ',';
            out += std::to_string(action_matrix[r][c]);
          }
          out += ']';
        }
        out += ']';
      } else {
        out += "genimg=[";
        for (std::size_t i = 0; i < gen_image_words.size(); ++i) {
          if (i) out += ',';
          out += gen_image_words[i];
        }
        out += ']';
      }
      return out + ")";
    }
  }
  return {};
}

inline std::uint64_t GroupSpec::declared_order() const {
  switch (tag) {
    case kind::cyclic: return static_cast<std::uint64_t>(n);
    case kind::dihedral: return static_cast<std::uint64_t>(n);
    case kind::symmetric: return detail::factorial(n);
    case kind::alternating: return n <= 2 ? 1 : detail::factorial(n) / 2;
    case kind::heisenberg2: return 2ull * static_cast<std::uint64_t>(n) * n * n;
    case kind::product: {
      std::uint64_t r = 1;
      for (const auto& f : factors) r *= f.declared_order();
      return r;
    }
    case kind::semidirect: return factors[0].declared_order() * static_cast<std::uint64_t>(act_m);
  }
  return 0;
}

namespace detail {

inline void uniquify_gen_labels(std::vector<std::string>& labels) {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    int clash = 0;
    for (std::size_t j = 0; j < i; ++j)
      if (labels[j] == labels[i] || labels[j].starts_with(labels[i] + "_")) ++clash;
    if (clash) labels[i] += "_" + std::to_string(clash + 1);
  }
}

inline TableGroup build_perm_group(long long n, bool even_only, std::size_t max_order) {
  require(n >= 1 && n <= 8, errc::unsupported_spec, "permutation degree out of range");
  std::vector<std::uint8_t> base(static_cast<std::size_t>(n));
  for (long long i = 0; i < n; ++i) base[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
  std::vector<std::vector<std::uint8_t>> elems;
  std::vector<std::uint8_t> p = base;
  do {
    if (even_only) {
      int inversions = 0;
      for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
          if (p[i] > p[j]) ++inversions;
      if (inversions & 1) continue;
    }
    elems.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::sort(elems.begin(), elems.end());
  require(elems.size() <= max_order, errc::unsupported_spec, "group exceeds table size cap");

  std::map<std::vector<std::uint8_t>, elem_t> index;
  for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<elem_t>(i);

  auto mul = [&](elem_t a, elem_t b) {
    const auto& pa = elems[a];
    const auto& pb = elems[b];
    std::vector<std::uint8_t> r(pa.size());
    for (std::size_t i = 0; i < pa.size(); ++i) r[i] = pb[pa[i]];  // apply a, then b
    return index.at(r);
  };

  std::vector<elem_t> gens;
  std::vector<std::string> labels;
  auto add_gen = [&](std::vector<std::uint8_t> perm) {
    CoordPerm cp(perm);
    gens.push_back(index.at(perm));
    labels.push_back(cycle_string(cp));
  };
  if (!even_only) {
    if (n >= 2) {
      std::vector<std::uint8_t> t = base;
      std::swap(t[0], t[1]);
      add_gen(t);
    }
    if (n >= 3) {
      std::vector<std::uint8_t> c(base);
      for (long long i = 0; i < n; ++i) c[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>((i + 1) % n);
      add_gen(c);
    }
  } else {
    if (n >= 3) {
      std::vector<std::uint8_t> c3 = base;
      c3[0] = 1;
      c3[1] = 2;
      c3[2] = 0;
      add_gen(c3);
    }
    if (n >= 4) {
      std::vector<std::uint8_t> c = base;
      if (n % 2 == 1) {
        for (long long i = 0; i < n; ++i) c[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>((i + 1) % n);
      } else {
        for (long long i = 1; i < n; ++i) c[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i == n - 1 ? 1 : i + 1);
      }
      add_gen(c);
    }
  }
  TableGroup g = TableGroup::from_mul(elems.size(), mul, gens, labels);
  g.attach_perm_rep(std::move(elems));
  return g;
}

// Collects the cyclic moduli of a product-of-cyclics spec (a bare cyclic
// counts as a one-factor product). Used by the matrix action.
inline bool cyclic_moduli(const GroupSpec& spec, std::vector<long long>& out) {
  if (spec.tag == GroupSpec::kind::cyclic) {
    out.push_back(spec.n);
    return true;
  }
  if (spec.tag == GroupSpec::kind::product) {
    for (const auto& f : spec.factors)
      if (!cyclic_moduli(f, out)) return false;
    return true;
  }
  return false;
}

// Evaluates a word like "g0*g1^-2" over the base group's generators, with the
// generator images substituted.
inline elem_t eval_gen_word(const TableGroup& base, const std::vector<elem_t>& images,
                            std::string_view word) {
  elem_t acc = 0;
  std::size_t pos = 0;
  while (pos < word.size()) {
    require(word[pos] == 'g', errc::invalid_action, "generator image words use g0,g1,...");
    ++pos;
    std::size_t start = pos;
    while (pos < word.size() && std::isdigit(static_cast<unsigned char>(word[pos]))) ++pos;
    require(pos > start, errc::invalid_action, "missing generator ordinal in image word");
    std::size_t gi = std::stoul(std::string(word.substr(start, pos - start)));
    require(gi < images.size(), errc::invalid_action, "generator ordinal out of range");
    long long e = 1;
    if (pos < word.size() && word[pos] == '^') {
      ++pos;
      bool neg = pos < word.size() && word[pos] == '-';
      if (neg) ++pos;
      start = pos;
      while (pos < word.size() && std::isdigit(static_cast<unsigned char>(word[pos]))) ++pos;
      require(pos > start, errc::invalid_action, "missing exponent in image word");
      e = std::stoll(std::string(word.substr(start, pos - start)));
      if (neg) e = -e;
    }
    acc = base.mul(acc, base.power(images[gi], e));
    if (pos < word.size()) {
      require(word[pos] == '*', errc::invalid_action, "image word terms are joined with '*'");
      ++pos;
    }
  }
  return acc;
}

inline TableGroup build_semidirect_spec(const GroupSpec& spec, std::size_t max_order) {
  TableGroup base = spec.factors[0].build(max_order);
  long long m = spec.act_m;
  require(m >= 1, errc::unsupported_spec, "acting cyclic order must be positive");
  std::size_t nb = static_cast<std::size_t>(base.order());

  // the automorphism applied by the acting generator
  std::vector<elem_t> psi(nb);
  switch (spec.act) {
    case GroupSpec::action::exponent: {
      for (std::size_t b = 0; b < nb; ++b) psi[b] = base.power(static_cast<elem_t>(b), spec.exponent);
      break;
    }
    case GroupSpec::action::matrix: {
      std::vector<long long> moduli;
      require(cyclic_moduli(spec.factors[0], moduli), errc::invalid_action,
              "matrix action needs a product-of-cyclics base");
      std::size_t dim = moduli.size();
      require(spec.action_matrix.size() == dim, errc::invalid_action, "action matrix has wrong size");
      for (const auto& row : spec.action_matrix)
        require(row.size() == dim, errc::invalid_action, "action matrix has wrong size");
      // element index <-> coordinate vector, first factor most significant
      auto decode = [&](elem_t e, std::vector<long long>& v) {
        for (std::size_t i = dim; i-- > 0;) {
          v[i] = static_cast<long long>(e % static_cast<elem_t>(moduli[i]));
          e /= static_cast<elem_t>(moduli[i]);
        }
      };
      std::vector<long long> v(dim), w(dim);
      for (std::size_t b = 0; b < nb; ++b) {
        decode(static_cast<elem_t>(b), v);
        elem_t enc = 0;
        for (std::size_t i = 0; i < dim; ++i) {
          long long acc = 0;
          for (std::size_t j = 0; j < dim; ++j) acc += spec.action_matrix[i][j] * v[j];
          w[i] = ((acc % moduli[i]) + moduli[i]) % moduli[i];
          enc = enc * static_cast<elem_t>(moduli[i]) + static_cast<elem_t>(w[i]);
        }
        psi[b] = enc;
      }
      break;
    }
    case GroupSpec::action::gen_images: {
      require(spec.gen_image_words.size() == base.generators().size(), errc::invalid_action,
              "need one image word per base generator");
      std::vector<elem_t> images;
      for (const auto& w : spec.gen_image_words) images.push_back(eval_gen_word(base, base.generators(), w));
      for (std::size_t b = 0; b < nb; ++b) {
        elem_t acc = 0;
        for (auto gi : base.word(static_cast<elem_t>(b))) acc = base.mul(acc, images[gi]);
        psi[b] = acc;
      }
      break;
    }
    case GroupSpec::action::none:
      fail(errc::unsupported_spec, "semidirect spec without an action");
  }

  // psi must be an automorphism whose order divides m
  {
    std::vector<char> hit(nb, 0);
    for (auto v : psi) {
      require(v < nb && !hit[v], errc::invalid_action, "action is not a bijection");
      hit[v] = 1;
    }
    require(psi[0] == 0, errc::invalid_action, "action does not fix the identity");
    for (std::size_t a = 0; a < nb; ++a)
      for (std::size_t b = 0; b < nb; ++b)
        require(psi[base.mul(static_cast<elem_t>(a), static_cast<elem_t>(b))] ==
                    base.mul(psi[a], psi[b]),
                errc::invalid_action, "action is not an automorphism");
  }
  std::vector<std::vector<elem_t>> psi_pow(static_cast<std::size_t>(m));
  psi_pow[0].resize(nb);
  for (std::size_t b = 0; b < nb; ++b) psi_pow[0][b] = static_cast<elem_t>(b);
  for (long long j = 1; j < m; ++j) {
    psi_pow[static_cast<std::size_t>(j)].resize(nb);
    for (std::size_t b = 0; b < nb; ++b)
      psi_pow[static_cast<std::size_t>(j)][b] = psi[psi_pow[static_cast<std::size_t>(j - 1)][b]];
  }
  {
    // order divides m
    std::vector<elem_t> last = psi_pow[static_cast<std::size_t>(m - 1)];
    for (std::size_t b = 0; b < nb; ++b)
      require(psi[last[b]] == b, errc::invalid_action, "action order does not divide the acting order");
  }

  std::size_t order = nb * static_cast<std::size_t>(m);
  require(order <= max_order, errc::unsupported_spec, "group exceeds table size cap");
  auto mul = [&](elem_t x, elem_t y) {
    elem_t b1 = x % nb, j1 = x / nb;
    elem_t b2 = y % nb, j2 = y / nb;
    elem_t b = base.mul(psi_pow[j2][b1], b2);
    elem_t j = (j1 + j2) % static_cast<elem_t>(m);
    return b + static_cast<elem_t>(nb) * j;
  };
  std::vector<elem_t> gens;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < base.generators().size(); ++i) {
    gens.push_back(base.generators()[i]);
    labels.push_back(base.generator_label(i));
  }
  if (m >= 2) {
    gens.push_back(static_cast<elem_t>(nb));  // (identity, 1)
    labels.push_back("t");
  }
  uniquify_gen_labels(labels);
  return TableGroup::from_mul(order, mul, gens, labels);
}

inline TableGroup build_heisenberg2_spec(long long p, std::size_t max_order) {
  require(p >= 3 && (p % 2) == 1 && is_prime(static_cast<std::uint64_t>(p)), errc::p_not_odd_prime,
          "heisenberg2 parameter must be an odd prime");
  std::uint64_t order = 2ull * static_cast<std::uint64_t>(p) * p * p;
  require(order <= max_order, errc::unsupported_spec, "group exceeds table size cap");
  auto decode = [p](elem_t e, long long& a, long long& b, long long& c, long long& eps) {
    eps = e & 1;
    e >>= 1;
    c = e % p;
    e /= static_cast<elem_t>(p);
    b = e % p;
    a = e / static_cast<elem_t>(p);
  };
  auto encode = [p](long long a, long long b, long long c, long long eps) {
    return static_cast<elem_t>(((a * p + b) * p + c) * 2 + eps);
  };
  auto mul = [&](elem_t x, elem_t y) {
    long long a1, b1, c1, e1, a2, b2, c2, e2;
    decode(x, a1, b1, c1, e1);
    decode(y, a2, b2, c2, e2);
    return encode((a1 + a2) % p, (b1 + b2 + a1 * c2) % p, (c1 + c2) % p, (e1 + e2) % 2);
  };
  std::vector<elem_t> gens{encode(1, 0, 0, 0), encode(0, 0, 1, 0), encode(0, 0, 0, 1)};
  std::vector<std::string> labels{"x", "z", "w"};
  return TableGroup::from_mul(static_cast<std::size_t>(order), mul, gens, labels);
}

}  // namespace detail

inline TableGroup GroupSpec::build(std::size_t max_order) const {
  switch (tag) {
    case kind::cyclic: {
      require(n >= 1, errc::unsupported_spec, "cyclic order must be positive");
      require(static_cast<std::uint64_t>(n) <= max_order, errc::unsupported_spec,
              "group exceeds table size cap");
      long long m = n;
      auto mul = [m](elem_t a, elem_t b) { return static_cast<elem_t>((a + b) % m); };
      std::vector<elem_t> gens;
      std::vector<std::string> labels;
      if (n >= 2) {
        gens.push_back(1);
        labels.push_back("r");
      }
      return TableGroup::from_mul(static_cast<std::size_t>(n), mul, gens, labels);
    }
    case kind::dihedral: {
      require(n >= 2 && n % 2 == 0, errc::unsupported_spec, "dihedral order must be even and >= 2");
      require(static_cast<std::uint64_t>(n) <= max_order, errc::unsupported_spec,
              "group exceeds table size cap");
      long long half = n / 2;
      auto mul = [half](elem_t x, elem_t y) {
        long long i1 = x % half, j1 = x / half;
        long long i2 = y % half, j2 = y / half;
        long long i = j1 ? (i1 - i2 + half) % half : (i1 + i2) % half;
        return static_cast<elem_t>(i + half * ((j1 + j2) % 2));
      };
      std::vector<elem_t> gens;
      std::vector<std::string> labels;
      if (half >= 2) {
        gens.push_back(1);
        labels.push_back("r");
      }
      gens.push_back(static_cast<elem_t>(half));
      labels.push_back("s");
      return TableGroup::from_mul(static_cast<std::size_t>(n), mul, gens, labels);
    }
    case kind::symmetric:
      return detail::build_perm_group(n, false, max_order);
    case kind::alternating:
      return detail::build_perm_group(n, true, max_order);
    case kind::product: {
      std::vector<TableGroup> parts;
      std::uint64_t order = 1;
      for (const auto& f : factors) {
        parts.push_back(f.build(max_order));
        order *= parts.back().order();
        require(order <= max_order, errc::unsupported_spec, "group exceeds table size cap");
      }
      std::vector<std::uint64_t> stride(parts.size(), 1);
      for (std::size_t i = parts.size(); i-- > 1;) stride[i - 1] = stride[i] * parts[i].order();
      auto mul = [&](elem_t a, elem_t b) {
        elem_t out = 0;
        for (std::size_t i = 0; i < parts.size(); ++i) {
          elem_t ea = static_cast<elem_t>((a / stride[i]) % parts[i].order());
          elem_t eb = static_cast<elem_t>((b / stride[i]) % parts[i].order());
          out += static_cast<elem_t>(parts[i].mul(ea, eb) * stride[i]);
        }
        return out;
      };
      std::vector<elem_t> gens;
      std::vector<std::string> labels;
      for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t gi = 0; gi < parts[i].generators().size(); ++gi) {
          gens.push_back(static_cast<elem_t>(parts[i].generators()[gi] * stride[i]));
          labels.push_back(parts[i].generator_label(gi));
        }
      detail::uniquify_gen_labels(labels);
      return TableGroup::from_mul(static_cast<std::size_t>(order), mul, gens, labels);
    }
    case kind::semidirect:
      return detail::build_semidirect_spec(*this, max_order);
    case kind::heisenberg2:
      return detail::build_heisenberg2_spec(n, max_order);
  }
  fail(errc::unsupported_spec, "unhandled group constructor");
}

/// Convenience: parse-and-build.
inline TableGroup build_group(std::string_view spec_text, std::size_t max_order = 5000) {
  return GroupSpec::parse(spec_text).build(max_order);
}

inline TableGroup build_group(const GroupSpec& spec, std::size_t max_order = 5000) {
  return spec.build(max_order);
}

struct CatalogEntry {
  std::string display;
  std::string spec_text;
};

/// The named groups the searches and tables draw from.
inline const std::vector<CatalogEntry>& group_catalog() {
  static const std::vector<CatalogEntry> entries = {
      {"Z12", "cyclic(12)"},
      {"S4", "symmetric(4)"},
      {"(Z4xZ4):Z3", "semidirect(product(cyclic(4),cyclic(4)),cyclic(3),mat=[[0,3],[1,3]])"},
      {"(Z2^2:Z9):Z2",
       "semidirect(semidirect(product(cyclic(2),cyclic(2)),cyclic(9),mat=[[0,1],[1,1]]),cyclic(2),"
       "genimg=[g0*g1,g1,g2^8])"},
      {"Z4", "cyclic(4)"},
      {"Z15:Z4", "semidirect(cyclic(15),cyclic(4),exp=2)"},
      {"S3", "symmetric(3)"},
      {"A5", "alternating(5)"},
      {"A4", "alternating(4)"},
      {"Z2x(Z13:Z3)", "product(cyclic(2),semidirect(cyclic(13),cyclic(3),exp=3))"},
      {"D14", "dihedral(14)"},
      {"Z8x(Z7:Z3)", "product(cyclic(8),semidirect(cyclic(7),cyclic(3),exp=2))"},
      {"Z2xS4", "product(cyclic(2),symmetric(4))"},
      {"Z3xA4", "product(cyclic(3),alternating(4))"},
      {"S5", "symmetric(5)"},
      {"Z36", "cyclic(36)"},
  };
  return entries;
}

/// Candidate specs of a given order: named catalog entries plus the parametric
/// families. Deduplicated by canonical text.
inline std::vector<GroupSpec> catalog_specs_of_order(std::uint64_t n) {
  std::vector<GroupSpec> specs;
  std::vector<std::string> seen;
  auto push = [&](GroupSpec s) {
    std::string t = s.text();
    if (std::find(seen.begin(), seen.end(), t) == seen.end()) {
      seen.push_back(t);
      specs.push_back(std::move(s));
    }
  };
  if (n >= 1) push(GroupSpec::cyclic_of(static_cast<long long>(n)));
  if (n >= 6 && n % 2 == 0) {
    GroupSpec d;
    d.tag = GroupSpec::kind::dihedral;
    d.n = static_cast<long long>(n);
    push(d);
  }
  for (long long m = 3; detail::factorial(m) / 2 <= n && m <= 8; ++m) {
    if (detail::factorial(m) == n) {
      GroupSpec s;
      s.tag = GroupSpec::kind::symmetric;
      s.n = m;
      push(s);
    }
    if (m >= 4 && detail::factorial(m) / 2 == n) {
      GroupSpec a;
      a.tag = GroupSpec::kind::alternating;
      a.n = m;
      push(a);
    }
  }
  for (const auto& entry : group_catalog()) {
    GroupSpec s = GroupSpec::parse(entry.spec_text);
    if (s.declared_order() == n) push(std::move(s));
  }
  return specs;
}

}  // namespace cayley
