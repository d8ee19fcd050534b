#include <memory>

#include <catch2/catch_amalgamated.hpp>

#include "cayley/group_spec.hpp"
#include "cayley/semidirect_group.hpp"

using namespace cayley;

namespace {

SemidirectPowerGroup cyclic36_rotation_group(unsigned m) {
  auto K = std::make_shared<TableGroup>(build_group("cyclic(36)"));
  GroupHom phi = GroupHom::from_generator_images(K, {CoordPerm::rotation(6, 1)});
  return build_semidirect(m, 6, K, phi);
}

}  // namespace

TEST_CASE("order is m^k times the acting group order") {
  CHECK(cyclic36_rotation_group(2).order() == 2304);  // 36 * 2^6
  CHECK(cyclic36_rotation_group(3).order() == 26244);
}

TEST_CASE("worked two-factor product rotates the left tuple") {
  // (0,0,0,0,0,x2; 1)(0,0,0,0,0,x1; 1) = (x2,0,0,0,0,x1; 2) for m >= 3
  auto g = cyclic36_rotation_group(3);
  unsigned x1 = 1, x2 = 2;
  elem_t a = g.encode({0, 0, 0, 0, 0, x2}, 1);
  elem_t b = g.encode({0, 0, 0, 0, 0, x1}, 1);
  CHECK(g.mul(a, b) == g.encode({x2, 0, 0, 0, 0, x1}, 2));
}

TEST_CASE("identity cases") {
  auto g = cyclic36_rotation_group(2);
  elem_t x = g.encode({1, 0, 1, 1, 0, 1}, 0);
  CHECK(g.mul(x, 0) == x);
  CHECK(g.mul(0, x) == x);
  CHECK(g.mul(x, g.inv(x)) == 0);
  CHECK(g.mul(g.inv(x), x) == 0);
}

TEST_CASE("small semidirect groups pass exhaustive associativity") {
  auto K = std::make_shared<TableGroup>(build_group("cyclic(12)"));
  // Z12 -> S3 sending 1 to a 3-cycle
  GroupHom phi =
      GroupHom::from_generator_images(K, {CoordPerm(std::vector<std::uint8_t>{1, 2, 0})});
  auto g = build_semidirect(2, 3, K, phi);  // order 96
  CHECK(g.order() == 96);
  check_identity_and_inverses(g);
  check_associativity_exhaustive(g);
}

TEST_CASE("medium semidirect groups pass the generated associativity check") {
  auto g = cyclic36_rotation_group(2);  // order 2304
  check_identity_and_inverses(g);
  auto gens = greedy_generating_set(g);
  check_associativity_generated(g, gens);
}

TEST_CASE("large semidirect groups pass sampled associativity") {
  auto g = cyclic36_rotation_group(3);  // order 26244
  check_associativity_sampled(g, 100'000, 0x5eed);
  // inverse axiom on a sample
  std::mt19937_64 rng(99);
  for (int i = 0; i < 1000; ++i) {
    elem_t e = static_cast<elem_t>(rng() % g.order());
    CHECK(g.mul(e, g.inv(e)) == 0);
  }
}

TEST_CASE("modulus below 2 is rejected") {
  auto K = std::make_shared<TableGroup>(build_group("cyclic(36)"));
  GroupHom phi = GroupHom::from_generator_images(K, {CoordPerm::rotation(6, 1)});
  CHECK_THROWS_AS(build_semidirect(1, 6, K, phi), error);
}
