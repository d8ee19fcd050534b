#pragma once

#include <concepts>
#include <cstdint>
#include <deque>
#include <functional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "cayley/common.hpp"

namespace cayley {

/// Anything with elements indexed 0..order()-1, identity at index 0, a total
/// multiplication and a total inverse. Large groups compute products on the
/// fly; catalog groups store a full table.
template <class G>
concept GroupLike = requires(const G& g, elem_t a, elem_t b) {
  { g.order() } -> std::convertible_to<std::uint64_t>;
  { g.mul(a, b) } -> std::convertible_to<elem_t>;
  { g.inv(a) } -> std::convertible_to<elem_t>;
};

/// Finite group backed by an explicit multiplication table. Element 0 is the
/// identity. Each element carries a word over the construction's generators;
/// the words double as human-readable labels in certificates.
class TableGroup {
public:
  TableGroup() = default;

  /// Builds the table from a multiplication callback. `gens` must generate the
  /// whole group (checked; words are assigned by breadth-first closure).
  static TableGroup from_mul(std::size_t n, const std::function<elem_t(elem_t, elem_t)>& mul,
                             std::vector<elem_t> gens, std::vector<std::string> gen_labels) {
    require(n >= 1, errc::invalid_input, "group order must be positive");
    require(n <= 65535, errc::invalid_input, "group too large for a multiplication table");
    TableGroup g;
    g.n_ = n;
    g.table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        elem_t p = mul(static_cast<elem_t>(a), static_cast<elem_t>(b));
        require(p < n, errc::invalid_input, "multiplication out of range");
        g.table_[a * n + b] = static_cast<std::uint16_t>(p);
      }
    g.inv_.assign(n, 0);
    std::vector<char> found(n, 0);
    for (std::size_t a = 0; a < n; ++a) {
      bool ok = false;
      for (std::size_t b = 0; b < n; ++b)
        if (g.table_[a * n + b] == 0) {
          g.inv_[a] = static_cast<elem_t>(b);
          ok = true;
          break;
        }
      require(ok, errc::invalid_input, "element with no inverse");
      found[a] = 1;
    }
    g.gens_ = std::move(gens);
    g.gen_labels_ = std::move(gen_labels);
    g.assign_words();
    return g;
  }

  std::uint64_t order() const { return n_; }
  elem_t mul(elem_t a, elem_t b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  elem_t inv(elem_t a) const { return inv_[a]; }

  const std::vector<elem_t>& generators() const { return gens_; }
  const std::string& generator_label(std::size_t i) const { return gen_labels_[i]; }
  const std::vector<std::string>& generator_labels() const { return gen_labels_; }

  /// Word over the generators reaching this element (generator indices).
  const std::vector<std::uint8_t>& word(elem_t e) const { return words_[e]; }
  /// Rendered word, e.g. "r^3*s"; the identity is "1".
  const std::string& label(elem_t e) const { return labels_[e]; }

  elem_t eval_word(std::span<const std::uint8_t> w) const {
    elem_t acc = 0;
    for (auto gi : w) acc = mul(acc, gens_[gi]);
    return acc;
  }

  elem_t element_order(elem_t e) const {
    elem_t acc = e;
    elem_t ord = 1;
    while (acc != 0) {
      acc = mul(acc, e);
      ++ord;
    }
    return ord;
  }

  bool is_involution(elem_t e) const { return e != 0 && mul(e, e) == 0; }

  elem_t power(elem_t e, long long x) const {
    elem_t base = e;
    if (x < 0) {
      base = inv(e);
      x = -x;
    }
    elem_t acc = 0;
    while (x > 0) {
      if (x & 1) acc = mul(acc, base);
      base = mul(base, base);
      x >>= 1;
    }
    return acc;
  }

  /// Attached only to groups built from explicit permutations
  /// (symmetric/alternating constructors): the permutation of each element.
  bool has_perm_rep() const { return !perm_rep_.empty(); }
  const std::vector<std::uint8_t>& perm_of(elem_t e) const { return perm_rep_[e]; }
  void attach_perm_rep(std::vector<std::vector<std::uint8_t>> rep) { perm_rep_ = std::move(rep); }

  /// Element index of a permutation, for permutation-constructed groups.
  elem_t index_of_perm(const std::vector<std::uint8_t>& p) const {
    for (std::size_t i = 0; i < perm_rep_.size(); ++i)
      if (perm_rep_[i] == p) return static_cast<elem_t>(i);
    fail(errc::invalid_input, "permutation not in group");
  }

private:
  void assign_words() {
    words_.assign(n_, {});
    labels_.assign(n_, "");
    std::vector<char> seen(n_, 0);
    seen[0] = 1;
    labels_[0] = "1";
    std::deque<elem_t> queue{0};
    std::size_t reached = 1;
    while (!queue.empty()) {
      elem_t g = queue.front();
      queue.pop_front();
      for (std::size_t gi = 0; gi < gens_.size(); ++gi) {
        elem_t h = mul(g, gens_[gi]);
        if (seen[h]) continue;
        seen[h] = 1;
        ++reached;
        words_[h] = words_[g];
        words_[h].push_back(static_cast<std::uint8_t>(gi));
        queue.push_back(h);
      }
    }
    require(reached == n_, errc::invalid_input, "generators do not generate the group");
    for (std::size_t e = 1; e < n_; ++e) labels_[e] = render_word(words_[e]);
  }

  std::string render_word(const std::vector<std::uint8_t>& w) const {
    std::string out;
    std::size_t i = 0;
    while (i < w.size()) {
      std::size_t j = i;
      while (j < w.size() && w[j] == w[i]) ++j;
      if (!out.empty()) out += '*';
      out += gen_labels_[w[i]];
      if (j - i > 1) out += "^" + std::to_string(j - i);
      i = j;
    }
    return out;
  }

  std::size_t n_ = 0;
  std::vector<std::uint16_t> table_;
  std::vector<elem_t> inv_;
  std::vector<elem_t> gens_;
  std::vector<std::string> gen_labels_;
  std::vector<std::vector<std::uint8_t>> words_;
  std::vector<std::string> labels_;
  std::vector<std::vector<std::uint8_t>> perm_rep_;
};

static_assert(GroupLike<TableGroup>);

/// Table-free Z_n for sweeps over many moduli.
struct CyclicGroup {
  std::uint64_t n = 1;
  std::uint64_t order() const { return n; }
  elem_t mul(elem_t a, elem_t b) const { return static_cast<elem_t>((a + b) % n); }
  elem_t inv(elem_t a) const { return static_cast<elem_t>((n - a) % n); }
};

static_assert(GroupLike<CyclicGroup>);

// ---------------------------------------------------------------------------
// Group axiom checks. Exhaustive checks are for catalog-sized groups; the
// generator-based check certifies associativity on all triples in O(|T| n^2)
// and the sampled check is for anything bigger.
// ---------------------------------------------------------------------------

template <GroupLike G>
void check_identity_and_inverses(const G& g) {
  std::uint64_t n = g.order();
  for (elem_t a = 0; a < n; ++a) {
    require(g.mul(a, 0) == a && g.mul(0, a) == a, errc::invalid_input, "identity axiom fails");
    elem_t b = g.inv(a);
    require(g.mul(a, b) == 0 && g.mul(b, a) == 0, errc::invalid_input, "inverse axiom fails");
  }
}

template <GroupLike G>
void check_associativity_exhaustive(const G& g) {
  std::uint64_t n = g.order();
  for (elem_t a = 0; a < n; ++a)
    for (elem_t b = 0; b < n; ++b) {
      elem_t ab = g.mul(a, b);
      for (elem_t c = 0; c < n; ++c)
        require(g.mul(ab, c) == g.mul(a, g.mul(b, c)), errc::invalid_input,
                "associativity fails");
    }
}

/// Certifies associativity on all triples given a set that generates the group
/// under the operation (Light's test): it suffices that (x*t)*y == x*(t*y) for
/// every generator t.
template <GroupLike G>
void check_associativity_generated(const G& g, std::span<const elem_t> gens) {
  std::uint64_t n = g.order();
  for (elem_t t : gens) {
    std::vector<elem_t> right(n);  // t*y
    for (elem_t y = 0; y < n; ++y) right[y] = g.mul(t, y);
    for (elem_t x = 0; x < n; ++x) {
      elem_t xt = g.mul(x, t);
      for (elem_t y = 0; y < n; ++y)
        require(g.mul(xt, y) == g.mul(x, right[y]), errc::invalid_input,
                "associativity fails (generated check)");
    }
  }
}

template <GroupLike G>
void check_associativity_sampled(const G& g, std::size_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> pick(0, g.order() - 1);
  for (std::size_t i = 0; i < samples; ++i) {
    elem_t a = static_cast<elem_t>(pick(rng));
    elem_t b = static_cast<elem_t>(pick(rng));
    elem_t c = static_cast<elem_t>(pick(rng));
    require(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)), errc::invalid_input,
            "associativity fails (sampled)");
  }
}

/// Both arguments of the multiplication act as bijections (Latin square).
template <GroupLike G>
void check_latin_square(const G& g) {
  std::uint64_t n = g.order();
  std::vector<char> seen(n);
  for (elem_t a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (elem_t b = 0; b < n; ++b) {
      elem_t p = g.mul(a, b);
      require(!seen[p], errc::invalid_input, "row of multiplication table repeats");
      seen[p] = 1;
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (elem_t b = 0; b < n; ++b) {
      elem_t p = g.mul(b, a);
      require(!seen[p], errc::invalid_input, "column of multiplication table repeats");
      seen[p] = 1;
    }
  }
}

/// Greedy generating set: repeatedly adjoin the lowest-index element not yet
/// reached by closure.
template <GroupLike G>
std::vector<elem_t> greedy_generating_set(const G& g) {
  std::uint64_t n = g.order();
  std::vector<char> reached(n, 0);
  reached[0] = 1;
  std::uint64_t count = 1;
  std::vector<elem_t> gens;
  while (count < n) {
    elem_t fresh = 0;
    for (elem_t e = 1; e < n; ++e)
      if (!reached[e]) {
        fresh = e;
        break;
      }
    gens.push_back(fresh);
    // closure under the enlarged set
    std::deque<elem_t> queue;
    for (elem_t e = 0; e < n; ++e)
      if (reached[e]) queue.push_back(e);
    reached[fresh] = (reached[fresh] ? 1 : (++count, 1));
    queue.push_back(fresh);
    while (!queue.empty()) {
      elem_t x = queue.front();
      queue.pop_front();
      for (elem_t t : gens) {
        for (elem_t y : {g.mul(x, t), g.mul(t, x)}) {
          if (!reached[y]) {
            reached[y] = 1;
            ++count;
            queue.push_back(y);
          }
        }
      }
    }
  }
  return gens;
}

}  // namespace cayley
