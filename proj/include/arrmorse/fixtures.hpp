#pragma once

#include "arrmorse/flag.hpp"

namespace arrmorse {
namespace fixtures {

// x = 0, y = 0
Arrangement e1();
// x = 0, y = 0, x + y = 1
Arrangement e2();
// braid arrangement on 4 strands, essentialized to rank 3
Arrangement e3();
// xyz(x+y+z) in R^3
Arrangement e4();
// reflection arrangement H_3 (15 planes over Q(sqrt 5))
Arrangement e5();
// central pencil of lines through the origin
Arrangement pencil(int lines = 3);
// x = 0, x = 1, y = 0, y = 1 (two incomparable sweep branches)
Arrangement grid();
// x = 0, y = 0, z = 0, x + y + z = 1
Arrangement simplex3();
// Boolean arrangement x = 0, y = 0, z = 0
Arrangement boolean3();

// flag V_1 = {x + 2y = -1}, V_0 = (-3, 1) for e2
std::vector<AffineSubspace> f2a();
// flag V_1 = {2x + y = -2}, V_0 = (-3, 4) for e2
std::vector<AffineSubspace> f2b();

// seeded small random essential arrangement (rejection sampled)
Arrangement random_arrangement(uint64_t seed, int dim, int count);

// generic planar section of a 3D central arrangement, seeded
Arrangement generic_section_2d(const Arrangement& arr, uint64_t seed);

}  // namespace fixtures
}  // namespace arrmorse
