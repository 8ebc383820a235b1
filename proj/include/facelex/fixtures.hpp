#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "facelex/disk_hull.hpp"
#include "facelex/polytope.hpp"

namespace facelex::fixtures {

/// conv{(0,0), (1,0), (1,1), (0,1)}, in that vertex order.
Polytope square();

/// conv{0, e_1, ..., e_n}.
Polytope simplex(std::size_t n);

/// {0,1}^n, vertices in binary counting order (coordinate 0 is the low bit).
Polytope cube(std::size_t n);

/// conv{+-e_1, +-e_2, +-e_3}.
Polytope octahedron();

/// Random subset of {0,1}^d for d in {2,3,4} with at most 10 points.
Polytope random_01(std::uint64_t seed);

struct Named {
  std::string name;
  Polytope polytope;
};

/// 2-, 3-, 4-simplex, square, 3-cube, 4-cube, octahedron and five seeded
/// random 0/1-polytopes.
std::vector<Named> polytope_suite();

/// Disk of radius 3 at the origin and the point (5, 0).
DiskBody cone();

/// Unit disks centered at (0, 0) and (4, 0).
DiskBody stadium();

}  // namespace facelex::fixtures
