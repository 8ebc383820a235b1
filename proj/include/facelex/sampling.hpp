#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "facelex/exact.hpp"
#include "facelex/polytope.hpp"

namespace facelex {

/// Seeded source of exact rational samples. Not thread-safe; give each
/// thread its own instance.
class Sampler {
 public:
  static constexpr std::uint64_t kDefaultSeed = 20240917;

  explicit Sampler(std::uint64_t seed = kDefaultSeed) : rng_(seed) {}

  std::mt19937_64& engine() { return rng_; }

  long integer(long lo, long hi);
  bool coin() { return integer(0, 1) == 1; }

  /// num/den with num in [lo*den, hi*den] and den in [1, max_den].
  Rational rational(long lo, long hi, long max_den = 8);

  /// Uniformly drawn rational in the open interval (0, 1).
  Rational open_unit();

  Point point(std::size_t dim, long lo, long hi, long max_den = 8);

  /// Positive weights summing to one.
  std::vector<Rational> simplex_weights(std::size_t n);

  /// Convex combination of `points` with strictly positive random weights.
  Point convex_combination(std::span<const Point> points);

  /// Convex combination of a random nonempty subset of the points.
  Point sparse_convex_combination(std::span<const Point> points);

  Point in_polytope(const Polytope& p) { return sparse_convex_combination(p.vertices()); }

 private:
  Point combine(const std::vector<const Point*>& points);

  std::mt19937_64 rng_;
};

}  // namespace facelex
