#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "facelex/exact.hpp"

namespace facelex {

enum class CortegeDefect {
  EmptyManifold,      // f_1 = ... = f_{i-1} = 0 has no solution
  ConstantOnManifold  // f_i is constant on that solution set
};

struct InvalidCortege {
  CortegeDefect defect;
  std::size_t index;  // 1-based position of the first failing functional
};

class CortegeError : public Error {
 public:
  CortegeError(const InvalidCortege& why);
  const InvalidCortege& reason() const { return reason_; }

 private:
  InvalidCortege reason_;
};

class IrregularFunction : public Error {
 public:
  using Error::Error;
};

/// Finite ordered family of affine functionals f_1, ..., f_m such that each
/// f_i is nonconstant on the (nonempty) common zero set of its predecessors.
/// Instances only exist in validated form.
class Cortege {
 public:
  /// Throws CortegeError on invalid input.
  explicit Cortege(std::vector<AffineFunctional> functionals);

  std::size_t dim() const { return functionals_.front().dim(); }
  std::size_t size() const { return functionals_.size(); }
  const std::vector<AffineFunctional>& functionals() const { return functionals_; }
  const AffineFunctional& operator[](std::size_t i) const { return functionals_[i]; }
  std::vector<LinearFunctional> linear_parts() const;
  bool is_linear() const;

  friend bool operator==(const Cortege&, const Cortege&) = default;

 private:
  struct Trusted {};
  Cortege(Trusted, std::vector<AffineFunctional> functionals) : functionals_(std::move(functionals)) {}
  friend std::variant<Cortege, InvalidCortege> validate_cortege(std::vector<AffineFunctional>);

  std::vector<AffineFunctional> functionals_;
};

/// Checks the finite cortege conditions in order and reports the first
/// failure. Throws DimensionMismatch or Error (empty input) on malformed input.
std::variant<Cortege, InvalidCortege> validate_cortege(std::vector<AffineFunctional> functionals);

enum class Region { NegativeSide, ZeroManifold, PositiveSide };

/// u(x) = f_i(x) for the least i with f_i(x) != 0, else f_m(x).
class StepAffineFunction {
 public:
  explicit StepAffineFunction(Cortege cortege) : cortege_(std::move(cortege)) {}

  const Cortege& cortege() const { return cortege_; }
  std::size_t rank() const { return cortege_.size(); }
  std::size_t dim() const { return cortege_.dim(); }

  Rational operator()(const Point& x) const { return eval(x); }
  Rational eval(const Point& x) const;

  /// Same value computed from the set of non-vanishing levels: 0 when that
  /// set is empty, otherwise the value of its least element.
  Rational eval_by_least_nonvanishing(const Point& x) const;

  /// Common zero set of all levels; nullopt for an irregular function.
  std::optional<AffineManifold> zero_set() const;
  bool is_regular() const { return zero_set().has_value(); }

  /// Throws IrregularFunction when the zero set is empty.
  Region classify(const Point& x) const;

 private:
  Cortege cortege_;
};

struct RegularDecomposition {
  StepAffineFunction linear;  // same linear parts, zero offsets
  Point anchor;               // point of the zero set; u(x) = linear(x - anchor)
};

/// Throws IrregularFunction.
RegularDecomposition decompose_regular(const StepAffineFunction& u);

}  // namespace facelex
