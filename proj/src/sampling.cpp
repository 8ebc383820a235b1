#include "facelex/sampling.hpp"

namespace facelex {

long Sampler::integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

Rational Sampler::rational(long lo, long hi, long max_den) {
  const long den = integer(1, max_den);
  return make_rational(integer(lo * den, hi * den), den);
}

Rational Sampler::open_unit() {
  const long den = integer(2, 16);
  return make_rational(integer(1, den - 1), den);
}

Point Sampler::point(std::size_t dim, long lo, long hi, long max_den) {
  Point p(dim);
  for (std::size_t i = 0; i < dim; ++i) p[i] = rational(lo, hi, max_den);
  return p;
}

std::vector<Rational> Sampler::simplex_weights(std::size_t n) {
  std::vector<Rational> w(n);
  Rational total = 0;
  for (auto& x : w) {
    x = integer(1, 12);
    total += x;
  }
  for (auto& x : w) x /= total;
  return w;
}

Point Sampler::convex_combination(std::span<const Point> points) {
  std::vector<const Point*> all;
  for (const auto& p : points) all.push_back(&p);
  return combine(all);
}

Point Sampler::sparse_convex_combination(std::span<const Point> points) {
  std::vector<const Point*> chosen;
  while (chosen.empty()) {
    for (const auto& p : points) {
      if (coin()) chosen.push_back(&p);
    }
  }
  return combine(chosen);
}

// Integer weights in [1, 12], normalized once per coordinate.
Point Sampler::combine(const std::vector<const Point*>& points) {
  const std::size_t dim = points.front()->dim();
  std::vector<Rational> acc(dim);
  long total = 0;
  for (const Point* pt : points) {
    const long w = integer(1, 12);
    total += w;
    for (std::size_t k = 0; k < dim; ++k) {
      if (sgn((*pt)[k]) != 0) acc[k] += w * (*pt)[k];
    }
  }
  for (auto& c : acc) c /= total;
  return Point(std::move(acc));
}

}  // namespace facelex
