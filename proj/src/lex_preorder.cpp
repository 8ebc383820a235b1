#include "facelex/lex_preorder.hpp"

#include <algorithm>

namespace facelex {

namespace {

Cortege linear_cortege(const std::vector<LinearFunctional>& levels) {
  std::vector<AffineFunctional> fs;
  for (const auto& l : levels) fs.push_back(AffineFunctional{l, 0});
  return Cortege(std::move(fs));
}

}  // namespace

LexPreorder::LexPreorder(std::vector<LinearFunctional> levels)
    : levels_(std::move(levels)), step_(linear_cortege(levels_)) {}

Comparison LexPreorder::compare(const Point& x, const Point& y) const {
  const int s = sgn(step_.eval(y - x));
  return s > 0 ? Comparison::Less : s == 0 ? Comparison::Equivalent : Comparison::Greater;
}

bool LexPreorder::in_positive_cone(const Point& x) const { return sgn(step_.eval(x)) >= 0; }

FaceDescriptor min_set(const Polytope& p, const LexPreorder& order) {
  if (order.dim() != p.ambient_dim()) throw DimensionMismatch("min_set: preorder and polytope dimensions differ");
  IndexSet survivors = p.all_indices();
  for (const auto& level : order.levels()) {
    std::vector<Rational> values;
    values.reserve(survivors.size());
    for (auto i : survivors) values.push_back(level(p.vertex(i)));
    const Rational best = *std::min_element(values.begin(), values.end());
    IndexSet next;
    for (std::size_t k = 0; k < survivors.size(); ++k) {
      if (values[k] == best) next.push_back(survivors[k]);
    }
    survivors = std::move(next);
  }
  return FaceDescriptor{std::move(survivors)};
}

}  // namespace facelex
