#pragma once

#include <memory>

#include "cayley/engine.hpp"
#include "cayley/group_spec.hpp"
#include "cayley/hom.hpp"

namespace cayley {

/// Diameter-6 construction over K = Z_36: the cyclic generator acts by a
/// one-place right rotation of 6 coordinates, S = {1, -1, 4, -4} and the four
/// paired vectors below. Instantiates to graphs of order 36 m^6, degree 4m.
inline GeneratorSpec cyclic36_diameter6_spec() {
  auto K = std::make_shared<TableGroup>(build_group("cyclic(36)"));
  GeneratorSpec spec;
  spec.k = 6;
  spec.directed = false;
  spec.K = K;
  spec.group_spec_text = "cyclic(36)";
  spec.phi = GroupHom::from_generator_images(K, {CoordPerm::rotation(6, 1)});
  spec.S = {1, 35, 4, 32};
  spec.V = {bitvec_parse("000001"), bitvec_parse("000010"), bitvec_parse("011001"),
            bitvec_parse("010110")};
  validate_generator_spec(spec);
  return spec;
}

/// Diameter-4 construction over K = S_4 acting naturally on 4 coordinates,
/// with S = {(2 3 4), (2 4 3), (3 4), (1 2)} and V = {1010,1100,0100,1110}.
/// Instantiates to graphs of order 24 m^4, degree 4m.
inline GeneratorSpec sym4_diameter4_spec() {
  auto K = std::make_shared<TableGroup>(build_group("symmetric(4)"));
  GeneratorSpec spec;
  spec.k = 4;
  spec.directed = false;
  spec.K = K;
  spec.group_spec_text = "symmetric(4)";
  spec.phi = natural_hom(K);
  spec.S = {K->index_of_perm({0, 2, 3, 1}),   // (2 3 4)
            K->index_of_perm({0, 3, 1, 2}),   // (2 4 3)
            K->index_of_perm({0, 1, 3, 2}),   // (3 4)
            K->index_of_perm({1, 0, 2, 3})};  // (1 2)
  spec.V = {bitvec_parse("1010"), bitvec_parse("1100"), bitvec_parse("0100"),
            bitvec_parse("1110")};
  validate_generator_spec(spec);
  return spec;
}

}  // namespace cayley
