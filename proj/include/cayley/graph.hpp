#pragma once

#include <algorithm>
#include <memory>
#include <ostream>
#include <vector>

#include "cayley/common.hpp"
#include "cayley/group.hpp"

namespace cayley {

template <GroupLike G>
struct CayleyGraph {
  std::shared_ptr<const G> group;
  std::vector<elem_t> genset;
  bool directed = false;

  std::size_t degree() const { return genset.size(); }
};

template <GroupLike G>
CayleyGraph<G> make_graph(std::shared_ptr<const G> group, std::vector<elem_t> genset,
                          bool directed = false) {
  std::sort(genset.begin(), genset.end());
  genset.erase(std::unique(genset.begin(), genset.end()), genset.end());
  return CayleyGraph<G>{std::move(group), std::move(genset), directed};
}

struct GensetReport {
  bool ok = true;
  bool contains_identity = false;
  std::vector<elem_t> duplicates;
  std::vector<elem_t> missing_inverses;  // elements whose inverse is absent (undirected only)
};

/// Report-only validation: identity-freeness, duplicate-freeness and, for
/// undirected graphs, inverse closure.
template <GroupLike G>
GensetReport validate_genset(const CayleyGraph<G>& g) {
  GensetReport rep;
  std::vector<elem_t> sorted = g.genset;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i + 1 < sorted.size(); ++i)
    if (sorted[i] == sorted[i + 1] &&
        (rep.duplicates.empty() || rep.duplicates.back() != sorted[i]))
      rep.duplicates.push_back(sorted[i]);
  for (elem_t s : g.genset)
    if (s == 0) rep.contains_identity = true;
  if (!g.directed) {
    for (elem_t s : g.genset) {
      elem_t si = g.group->inv(s);
      if (!std::binary_search(sorted.begin(), sorted.end(), si)) rep.missing_inverses.push_back(s);
    }
  }
  rep.ok = !rep.contains_identity && rep.duplicates.empty() && rep.missing_inverses.empty();
  return rep;
}

struct DiameterReport {
  std::uint32_t diameter = 0;
  std::vector<std::uint64_t> histogram;  // element count per distance from the identity
  std::uint64_t order = 0;
  std::uint32_t degree = 0;
};

/// Exact diameter by breadth-first search from the identity; valid because
/// Cayley graphs are vertex-transitive. Directed graphs follow out-arcs only.
template <GroupLike G>
DiameterReport diameter(const CayleyGraph<G>& g) {
  std::uint64_t n = g.group->order();
  std::vector<std::int32_t> dist(n, -1);
  std::vector<elem_t> frontier{0}, next;
  dist[0] = 0;
  std::uint64_t reached = 1;
  DiameterReport rep;
  rep.order = n;
  rep.degree = static_cast<std::uint32_t>(g.genset.size());
  rep.histogram.push_back(1);
  std::int32_t level = 0;
  while (!frontier.empty()) {
    ++level;
    next.clear();
    for (elem_t v : frontier)
      for (elem_t s : g.genset) {
        elem_t w = g.group->mul(v, s);
        if (dist[w] < 0) {
          dist[w] = level;
          next.push_back(w);
          ++reached;
        }
      }
    if (!next.empty()) rep.histogram.push_back(next.size());
    frontier.swap(next);
  }
  if (reached != n) {
    elem_t missing = 0;
    for (std::uint64_t e = 0; e < n; ++e)
      if (dist[e] < 0) {
        missing = static_cast<elem_t>(e);
        break;
      }
    fail(errc::not_strongly_connected,
         "element " + std::to_string(missing) + " is not a product of generators");
  }
  rep.diameter = static_cast<std::uint32_t>(rep.histogram.size() - 1);
  return rep;
}

/// Distances from the identity (for property checks).
template <GroupLike G>
std::vector<std::int32_t> distances_from_identity(const CayleyGraph<G>& g) {
  std::uint64_t n = g.group->order();
  std::vector<std::int32_t> dist(n, -1);
  std::vector<elem_t> frontier{0}, next;
  dist[0] = 0;
  std::int32_t level = 0;
  while (!frontier.empty()) {
    ++level;
    next.clear();
    for (elem_t v : frontier)
      for (elem_t s : g.genset) {
        elem_t w = g.group->mul(v, s);
        if (dist[w] < 0) {
          dist[w] = level;
          next.push_back(w);
        }
      }
    frontier.swap(next);
  }
  return dist;
}

/// Enlarges the generating set to exactly `target_degree` elements without
/// shrinking reachability (a supergraph never has larger diameter). Padding is
/// deterministic and prefers involutions: smallest-index unused involutions
/// while at least two remain (or one, when the residue is odd), then
/// smallest-index inverse pairs.
template <GroupLike G>
CayleyGraph<G> pad_genset(const CayleyGraph<G>& g, std::size_t target_degree) {
  require(target_degree >= g.genset.size(), errc::invalid_input,
          "target degree below current degree");
  CayleyGraph<G> out = g;
  if (target_degree == g.genset.size()) return out;

  std::uint64_t n = g.group->order();
  std::vector<char> used(n, 0);
  used[0] = 1;
  for (elem_t s : g.genset) used[s] = 1;

  std::vector<elem_t> involutions;
  std::vector<std::pair<elem_t, elem_t>> pairs;
  for (std::uint64_t e = 1; e < n; ++e) {
    if (used[e]) continue;
    elem_t ei = g.group->inv(static_cast<elem_t>(e));
    if (ei == e)
      involutions.push_back(static_cast<elem_t>(e));
    else if (e < ei && !used[ei])
      pairs.emplace_back(static_cast<elem_t>(e), ei);
  }

  std::size_t need = target_degree - g.genset.size();
  std::size_t inv_at = 0, pair_at = 0;
  auto take_involution = [&]() {
    require(inv_at < involutions.size(), errc::no_involution_available,
            "no unused involution available for odd padding");
    out.genset.push_back(involutions[inv_at++]);
    --need;
  };

  if (!g.directed) {
    if (need % 2 == 1) take_involution();
    while (need > 0) {
      if (inv_at + 1 < involutions.size()) {
        take_involution();
        take_involution();
      } else {
        require(pair_at < pairs.size(), errc::not_enough_elements,
                "not enough unused elements to reach the target degree");
        out.genset.push_back(pairs[pair_at].first);
        out.genset.push_back(pairs[pair_at].second);
        ++pair_at;
        need -= 2;
      }
    }
  } else {
    for (std::uint64_t e = 1; e < n && need > 0; ++e)
      if (!used[e]) {
        out.genset.push_back(static_cast<elem_t>(e));
        used[e] = 1;
        --need;
      }
    require(need == 0, errc::not_enough_elements,
            "not enough unused elements to reach the target degree");
  }
  std::sort(out.genset.begin(), out.genset.end());
  return out;
}

/// One line per arc "u v"; undirected graphs emit each edge once with u < v.
/// Header: "# <order> <degree> <directed|undirected>".
template <GroupLike G>
void write_edge_list(const CayleyGraph<G>& g, std::ostream& os) {
  std::uint64_t n = g.group->order();
  os << "# " << n << ' ' << g.genset.size() << ' ' << (g.directed ? "directed" : "undirected")
     << '\n';
  for (std::uint64_t u = 0; u < n; ++u)
    for (elem_t s : g.genset) {
      elem_t v = g.group->mul(static_cast<elem_t>(u), s);
      if (g.directed || u < v) os << u << ' ' << v << '\n';
    }
}

}  // namespace cayley
