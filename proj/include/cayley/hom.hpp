#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "cayley/common.hpp"
#include "cayley/group.hpp"
#include "cayley/perm.hpp"

namespace cayley {

/// Homomorphism from a catalog group into the coordinate permutations of k
/// positions. Composition is left-to-right, matching the right-action
/// convention of the semidirect product: of(a*b) == compose(of(a), of(b)).
struct GroupHom {
  std::shared_ptr<const TableGroup> source;
  int arity = 0;
  std::vector<CoordPerm> image;  // indexed by element

  const CoordPerm& of(elem_t e) const { return image[e]; }

  bool is_valid() const {
    if (!source || image.size() != source->order()) return false;
    if (!image[0].is_identity()) return false;
    std::uint64_t n = source->order();
    for (elem_t a = 0; a < n; ++a)
      for (elem_t b = 0; b < n; ++b)
        if (compose(image[a], image[b]) != image[source->mul(a, b)]) return false;
    return true;
  }

  /// Coordinates fixed by every permutation in the image.
  std::vector<int> fixed_coordinates() const {
    std::vector<int> fixed;
    for (int c = 0; c < arity; ++c) {
      bool all = true;
      for (const auto& p : image)
        if (p.apply(c) != c) {
          all = false;
          break;
        }
      if (all) fixed.push_back(c);
    }
    return fixed;
  }

  /// Images of the source group's catalog generators.
  std::vector<CoordPerm> generator_images() const {
    std::vector<CoordPerm> out;
    for (elem_t g : source->generators()) out.push_back(image[g]);
    return out;
  }

  /// Extends generator images along each element's generator word, then
  /// verifies the homomorphism property on all pairs.
  static GroupHom from_generator_images(std::shared_ptr<const TableGroup> K,
                                        const std::vector<CoordPerm>& gen_images) {
    require(K != nullptr, errc::invalid_input, "missing source group");
    require(gen_images.size() == K->generators().size(), errc::invalid_input,
            "need one image per catalog generator");
    int k = gen_images.empty() ? 0 : gen_images[0].degree();
    GroupHom h;
    h.source = K;
    h.arity = k;
    h.image.resize(K->order());
    std::uint64_t n = K->order();
    for (elem_t e = 0; e < n; ++e) {
      CoordPerm acc = CoordPerm::identity(k);
      for (auto gi : K->word(e)) acc = compose(acc, gen_images[gi]);
      h.image[e] = std::move(acc);
    }
    require(h.is_valid(), errc::invalid_input, "generator images do not define a homomorphism");
    return h;
  }

  /// The trivial-into-identity hom is never useful but handy in tests.
  static GroupHom trivial(std::shared_ptr<const TableGroup> K, int k) {
    GroupHom h;
    h.source = K;
    h.arity = k;
    h.image.assign(K->order(), CoordPerm::identity(k));
    return h;
  }
};

/// Natural action of a permutation-constructed group on its own points.
inline GroupHom natural_hom(std::shared_ptr<const TableGroup> K) {
  require(K->has_perm_rep(), errc::invalid_input, "group has no permutation representation");
  GroupHom h;
  h.source = K;
  h.arity = static_cast<int>(K->perm_of(0).size());
  h.image.resize(K->order());
  for (elem_t e = 0; e < K->order(); ++e) h.image[e] = CoordPerm(K->perm_of(e));
  require(h.is_valid(), errc::invalid_input, "permutation representation is not an action");
  return h;
}

struct HomEnumOptions {
  std::size_t max_candidates = 50'000'000;  // generator-image tuples examined
  bool dedup = true;
};

namespace detail {

inline std::vector<CoordPerm> all_perms(int k) {
  std::vector<std::uint8_t> p(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) p[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
  std::vector<CoordPerm> out;
  do {
    out.emplace_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Conjugation-invariant key: per-element cycle types, refined for small k by
// the lexicographic minimum of the image tuple over all coordinate
// relabelings. Over-enumeration from the coarser key at k >= 7 is harmless.
inline std::string hom_signature(const GroupHom& h) {
  std::string sig;
  for (const auto& p : h.image) {
    for (int len : p.cycle_type()) {
      sig += static_cast<char>('0' + len);
    }
    sig += '|';
  }
  if (h.arity <= 6) {
    std::vector<std::uint8_t> best;
    auto perms = all_perms(h.arity);
    for (const auto& sigma : perms) {
      CoordPerm sigma_inv = sigma.inverse();
      std::vector<std::uint8_t> flat;
      flat.reserve(h.image.size() * static_cast<std::size_t>(h.arity));
      for (const auto& p : h.image) {
        CoordPerm conj = compose(compose(sigma_inv, p), sigma);
        flat.insert(flat.end(), conj.map.begin(), conj.map.end());
      }
      if (best.empty() || flat < best) best = std::move(flat);
    }
    sig += '#';
    for (auto v : best) sig += static_cast<char>('a' + v);
  }
  return sig;
}

}  // namespace detail

/// All homomorphisms K -> coordinate permutations of k positions whose image
/// leaves no coordinate fixed, at least one per conjugacy class. Duplicate
/// classes may slip through at k >= 7; nothing is missed.
inline std::vector<GroupHom> enumerate_homs(std::shared_ptr<const TableGroup> K, int k,
                                            const HomEnumOptions& opts = {}) {
  require(k >= 2 && k <= 9, errc::arity_out_of_range, "arity must be between 2 and 9");
  require(K->order() <= 65535, errc::invalid_input, "source group too large");

  const auto& gens = K->generators();
  require(!gens.empty() || K->order() == 1, errc::invalid_input, "source group has no generators");

  auto perms = detail::all_perms(k);
  std::vector<std::vector<const CoordPerm*>> candidates(gens.size());
  for (std::size_t gi = 0; gi < gens.size(); ++gi) {
    elem_t ord = K->element_order(gens[gi]);
    for (const auto& p : perms)
      if (ord % p.order() == 0) candidates[gi].push_back(&p);
  }

  std::size_t total = 1;
  for (const auto& c : candidates) {
    total *= c.size();
    require(total <= opts.max_candidates, errc::search_space_exceeded,
            "homomorphism candidate space exceeds budget");
  }

  std::vector<GroupHom> found;
  std::vector<std::string> signatures;
  std::vector<const CoordPerm*> pick(gens.size());

  auto try_candidate = [&]() {
    std::vector<CoordPerm> gen_images;
    gen_images.reserve(pick.size());
    for (const CoordPerm* p : pick) gen_images.push_back(*p);
    // extend along words, then validate
    GroupHom h;
    h.source = K;
    h.arity = k;
    h.image.resize(K->order());
    for (elem_t e = 0; e < K->order(); ++e) {
      CoordPerm acc = CoordPerm::identity(k);
      for (auto gi : K->word(e)) acc = compose(acc, gen_images[gi]);
      h.image[e] = std::move(acc);
    }
    // the extension must reproduce the chosen generator images and be a hom
    for (std::size_t gi = 0; gi < gens.size(); ++gi)
      if (h.image[gens[gi]] != *pick[gi]) return;
    if (!h.is_valid()) return;
    if (!h.fixed_coordinates().empty()) return;
    if (opts.dedup) {
      std::string sig = detail::hom_signature(h);
      if (std::find(signatures.begin(), signatures.end(), sig) != signatures.end()) return;
      signatures.push_back(std::move(sig));
    }
    found.push_back(std::move(h));
  };

  // odometer over candidate tuples, lexicographic by permutation image
  std::vector<std::size_t> idx(gens.size(), 0);
  if (gens.empty()) return found;
  for (;;) {
    for (std::size_t gi = 0; gi < gens.size(); ++gi) pick[gi] = candidates[gi][idx[gi]];
    try_candidate();
    std::size_t level = gens.size();
    while (level > 0) {
      --level;
      if (++idx[level] < candidates[level].size()) break;
      idx[level] = 0;
      if (level == 0) return found;
    }
  }
}

}  // namespace cayley
