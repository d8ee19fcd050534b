#pragma once

#include <algorithm>
#include <memory>
#include <vector>

#include "cayley/common.hpp"
#include "cayley/covers.hpp"
#include "cayley/graph.hpp"
#include "cayley/group.hpp"

namespace cayley {

/// Element of (unitriangular 3x3 over GF(p)) x Z_2: the matrix
/// (1 a b; 0 1 c; 0 0 1) plus a flip bit.
struct HeisElem {
  unsigned a = 0, b = 0, c = 0, eps = 0;
  bool operator==(const HeisElem&) const = default;
};

/// The group of such elements under
///   (a,b,c,e) * (a',b',c',e') = (a+a', b+b'+a*c', c+c', e+e')
/// which is exactly 3x3 matrix multiplication on the unitriangular part.
/// Order 2p^3; products are computed on the fly.
class HeisenbergGroup {
public:
  explicit HeisenbergGroup(unsigned p) : p_(p) {
    require(p >= 3 && p % 2 == 1 && is_prime(p), errc::p_not_odd_prime,
            "parameter must be an odd prime");
    require(p <= 127, errc::invalid_input, "prime out of supported range");
    order_ = 2ull * p * p * p;
  }

  unsigned p() const { return p_; }
  std::uint64_t order() const { return order_; }

  elem_t encode(const HeisElem& e) const {
    return static_cast<elem_t>((((e.a * p_ + e.b) * p_ + e.c) << 1) | e.eps);
  }
  HeisElem decode(elem_t x) const {
    HeisElem e;
    e.eps = x & 1;
    x >>= 1;
    e.c = x % p_;
    x /= p_;
    e.b = x % p_;
    e.a = x / p_;
    return e;
  }

  elem_t mul(elem_t x, elem_t y) const {
    HeisElem u = decode(x), v = decode(y);
    return encode({(u.a + v.a) % p_, (u.b + v.b + u.a * v.c) % p_, (u.c + v.c) % p_,
                   (u.eps + v.eps) % 2});
  }

  elem_t inv(elem_t x) const {
    HeisElem u = decode(x);
    return encode({(p_ - u.a) % p_, (p_ - u.b + (u.a * u.c) % p_) % p_, (p_ - u.c) % p_, u.eps});
  }

  elem_t alpha(unsigned x) const { return encode({x % p_, x % p_, 0, 0}); }
  elem_t beta(unsigned x) const { return encode({0, x % p_, x % p_, 1}); }

private:
  unsigned p_;
  std::uint64_t order_ = 0;
};

static_assert(GroupLike<HeisenbergGroup>);

inline HeisenbergGroup build_heisenberg(unsigned p) { return HeisenbergGroup(p); }

struct HeisGenset {
  unsigned p = 0;
  std::vector<elem_t> s1;  // alpha_x, beta_x over nonzero x
  std::vector<elem_t> s2;  // cover of the (a = 0, eps = 0) plane
  std::vector<elem_t> s3;  // cover of the (c = 0) plane, both flip labels
  std::vector<elem_t> all; // sorted union
};

/// Generating set giving diameter exactly 3 for p >= 5. Inverse-closed and
/// free of both the identity and the unique central involution (0,0,0,1).
inline HeisGenset diameter3_genset(unsigned p) {
  require(p >= 5, errc::p_too_small, "construction needs p >= 5");
  HeisenbergGroup g(p);
  HeisGenset out;
  out.p = p;
  for (unsigned x = 1; x < p; ++x) {
    out.s1.push_back(g.alpha(x));
    out.s1.push_back(g.beta(x));
  }
  auto cover = detail::pair_cover(p);
  for (auto [b, c] : cover) out.s2.push_back(g.encode({0, b, c, 0}));
  for (auto [a, b] : cover)
    for (unsigned eps : {0u, 1u}) out.s3.push_back(g.encode({a, b, 0, eps}));
  out.all = out.s1;
  out.all.insert(out.all.end(), out.s2.begin(), out.s2.end());
  out.all.insert(out.all.end(), out.s3.begin(), out.s3.end());
  std::sort(out.all.begin(), out.all.end());
  out.all.erase(std::unique(out.all.begin(), out.all.end()), out.all.end());
  return out;
}

namespace detail {

inline unsigned mod_inverse(unsigned x, unsigned p) {
  // p prime, x != 0: Fermat
  unsigned result = 1, base = x % p, e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

}  // namespace detail

/// Word of at most three s1-generators multiplying out to the element
/// (a,b,c,0) with a != 0. Case split on b relative to a+c and a+c+ac.
inline std::vector<elem_t> express_eps0(const HeisenbergGroup& g, const HeisElem& e) {
  unsigned p = g.p();
  require(e.eps == 0 && e.a % p != 0, errc::invalid_input, "element outside the eps=0, a!=0 case");
  unsigned a = e.a % p, b = e.b % p, c = e.c % p;
  if (b == (a + c) % p) {
    unsigned u = 1;
    while (u == c) ++u;  // smallest nonzero u != c
    return {g.beta(u), g.beta((c + p - u) % p), g.alpha(a)};
  }
  if (b == (a + c + a * c) % p) {
    unsigned u = 1;
    while (u == c) ++u;
    return {g.alpha(a), g.beta(u), g.beta((c + p - u) % p)};
  }
  unsigned q = (b + p - c) % p * detail::mod_inverse(a, p) % p;  // (b-c)/a
  unsigned x = (c + p - q + 1) % p;
  unsigned z = (q + p - 1) % p;
  return {g.beta(x), g.alpha(a), g.beta(z)};
}

/// Word of at most three s1-generators multiplying out to (a,b,c,1) with
/// c != 0. Factors whose parameter comes out zero are dropped.
inline std::vector<elem_t> express_eps1(const HeisenbergGroup& g, const HeisElem& e) {
  unsigned p = g.p();
  require(e.eps == 1 && e.c % p != 0, errc::invalid_input, "element outside the eps=1, c!=0 case");
  unsigned a = e.a % p, b = e.b % p, c = e.c % p;
  unsigned q = (b + p - a) % p * detail::mod_inverse(c, p) % p;  // (b-a)/c
  unsigned x = (q + p - 1) % p;
  unsigned z = (a + p - q + 1) % p;
  if (b == (a + c) % p) {
    std::vector<elem_t> w{g.beta(c)};
    if (z != 0) w.push_back(g.alpha(z));
    return w;
  }
  if (b == (a + c + a * c) % p) {
    std::vector<elem_t> w;
    if (x != 0) w.push_back(g.alpha(x));
    w.push_back(g.beta(c));
    return w;
  }
  return {g.alpha(x), g.beta(c), g.alpha(z)};
}

/// The graph for a requested degree: the largest odd prime whose generating
/// set fits, padded up to exactly d. The unique involution of the group never
/// sits in the construction's set, so odd padding always has a candidate.
struct DegreeGraph {
  unsigned p = 0;
  HeisGenset genset;
  CayleyGraph<HeisenbergGroup> graph;
};

inline DegreeGraph graph_for_degree(std::size_t d, unsigned max_p = 31) {
  unsigned best = 0;
  HeisGenset best_set;
  for (unsigned p = 5; p <= max_p; ++p) {
    if (!is_prime(p) || p % 2 == 0) continue;
    HeisGenset s = diameter3_genset(p);
    if (s.all.size() <= d) {
      best = p;
      best_set = std::move(s);
    }
  }
  require(best != 0, errc::degree_too_small, "degree below the smallest buildable set");
  DegreeGraph out;
  out.p = best;
  out.genset = std::move(best_set);
  auto group = std::make_shared<HeisenbergGroup>(best);
  out.graph = CayleyGraph<HeisenbergGroup>{group, out.genset.all, false};
  out.graph = pad_genset(out.graph, d);
  return out;
}

}  // namespace cayley
