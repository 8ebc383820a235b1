#pragma once

#include <vector>

#include "facelex/exact.hpp"
#include "facelex/polytope.hpp"
#include "facelex/step_affine.hpp"

namespace facelex {

enum class Comparison { Less, Equivalent, Greater };

/// Translation- and scaling-invariant total preorder of finite rank:
/// x <= y iff (l_1(y - x), ..., l_m(y - x)) is lexicographically >= 0.
class LexPreorder {
 public:
  /// Levels must form a valid linear cortege; throws CortegeError otherwise.
  explicit LexPreorder(std::vector<LinearFunctional> levels);

  const std::vector<LinearFunctional>& levels() const { return levels_; }
  std::size_t rank() const { return levels_.size(); }
  std::size_t dim() const { return levels_.front().dim(); }

  /// The step-linear function whose nonnegativity region is the positive cone.
  const StepAffineFunction& step_function() const { return step_; }

  Comparison compare(const Point& x, const Point& y) const;
  bool in_positive_cone(const Point& x) const;

 private:
  std::vector<LinearFunctional> levels_;
  StepAffineFunction step_;
};

/// Vertices surviving the sequential per-level argmin filter, starting from
/// all vertices of P.
FaceDescriptor min_set(const Polytope& p, const LexPreorder& order);

}  // namespace facelex
