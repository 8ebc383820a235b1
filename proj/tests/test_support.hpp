#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "facelex/exact.hpp"
#include "facelex/polytope.hpp"
#include "facelex/sampling.hpp"
#include "facelex/step_affine.hpp"

namespace facelex::testing {

inline Rational Q(const char* text) { return parse_rational(text); }

inline LinearFunctional lin(std::initializer_list<Rational> c) { return LinearFunctional(std::vector<Rational>(c)); }

inline AffineFunctional aff(std::initializer_list<Rational> c, Rational offset) {
  return AffineFunctional{lin(c), std::move(offset)};
}

inline FaceDescriptor face(std::initializer_list<std::size_t> idx) { return FaceDescriptor{IndexSet(idx)}; }

/// Random validated cortege of the given rank; small integer coefficients so
/// that ties (and therefore later levels) actually occur.
inline Cortege random_cortege(Sampler& s, std::size_t dim, std::size_t rank, bool linear = false) {
  while (true) {
    std::vector<AffineFunctional> fs;
    for (std::size_t i = 0; i < rank; ++i) {
      std::vector<Rational> c(dim);
      for (auto& x : c) x = s.integer(-2, 2);
      fs.push_back(AffineFunctional{LinearFunctional(std::move(c)), linear ? Rational(0) : s.rational(-3, 3, 3)});
    }
    auto v = validate_cortege(std::move(fs));
    if (auto* c = std::get_if<Cortege>(&v)) return *c;
  }
}

/// Point that lies, with positive probability, on the zero sets of the
/// first k levels of the cortege; otherwise a generic point.
inline Point biased_point(Sampler& s, const Cortege& c) {
  const auto k = static_cast<std::size_t>(s.integer(0, static_cast<long>(c.size())));
  const auto prefix = std::span(c.functionals()).first(k);
  const auto m = solve_affine_zero_set(prefix, c.dim());
  std::vector<Rational> t(m->dim());
  for (auto& x : t) x = s.rational(-3, 3, 4);
  return m->from_local(t);
}

}  // namespace facelex::testing
