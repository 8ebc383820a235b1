#include "facelex/fixtures.hpp"

#include "facelex/sampling.hpp"

namespace facelex::fixtures {

Polytope square() {
  return Polytope({Point{0, 0}, Point{1, 0}, Point{1, 1}, Point{0, 1}});
}

Polytope simplex(std::size_t n) {
  std::vector<Point> pts{Point(n)};
  for (std::size_t i = 0; i < n; ++i) {
    Point e(n);
    e[i] = 1;
    pts.push_back(std::move(e));
  }
  return Polytope(std::move(pts));
}

Polytope cube(std::size_t n) {
  std::vector<Point> pts;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    Point p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = (mask >> i) & 1u;
    pts.push_back(std::move(p));
  }
  return Polytope(std::move(pts));
}

Polytope octahedron() {
  std::vector<Point> pts;
  for (std::size_t i = 0; i < 3; ++i) {
    for (int sign : {1, -1}) {
      Point p(3);
      p[i] = sign;
      pts.push_back(std::move(p));
    }
  }
  return Polytope(std::move(pts));
}

Polytope random_01(std::uint64_t seed) {
  Sampler sampler(seed);
  const auto dim = static_cast<std::size_t>(sampler.integer(2, 4));
  const long corners = 1L << dim;
  const long count = sampler.integer(static_cast<long>(dim) + 1, std::min(10L, corners));
  std::vector<long> ids(static_cast<std::size_t>(corners));
  for (long i = 0; i < corners; ++i) ids[static_cast<std::size_t>(i)] = i;
  for (long i = 0; i < count; ++i) {
    std::swap(ids[static_cast<std::size_t>(i)], ids[static_cast<std::size_t>(sampler.integer(i, corners - 1))]);
  }
  std::vector<Point> pts;
  for (long k = 0; k < count; ++k) {
    Point p(dim);
    for (std::size_t i = 0; i < dim; ++i) p[i] = (ids[static_cast<std::size_t>(k)] >> i) & 1;
    pts.push_back(std::move(p));
  }
  return Polytope(std::move(pts));
}

std::vector<Named> polytope_suite() {
  std::vector<Named> suite{
      {"2-simplex", simplex(2)}, {"3-simplex", simplex(3)}, {"4-simplex", simplex(4)},   {"square", square()},
      {"3-cube", cube(3)},       {"4-cube", cube(4)},       {"octahedron", octahedron()},
  };
  for (std::uint64_t k = 0; k < 5; ++k) {
    suite.push_back({"random01-" + std::to_string(k), random_01(1000 + k)});
  }
  return suite;
}

DiskBody cone() { return DiskBody({Disk{Point{0, 0}, 3}, Disk{Point{5, 0}, 0}}); }

DiskBody stadium() { return DiskBody({Disk{Point{0, 0}, 1}, Disk{Point{4, 0}, 1}}); }

}  // namespace facelex::fixtures
