#include "facelex/step_affine.hpp"

#include <algorithm>
#include <string>

namespace facelex {

namespace {

std::string describe(const InvalidCortege& why) {
  const char* what = why.defect == CortegeDefect::EmptyManifold ? "empty zero set of predecessors"
                                                                 : "constant on zero set of predecessors";
  return "invalid cortege at functional " + std::to_string(why.index) + ": " + what;
}

}  // namespace

CortegeError::CortegeError(const InvalidCortege& why) : Error(describe(why)), reason_(why) {}

std::variant<Cortege, InvalidCortege> validate_cortege(std::vector<AffineFunctional> functionals) {
  if (functionals.empty()) throw Error("cortege must contain at least one functional");
  const std::size_t dim = functionals.front().dim();
  require_dim(functionals, dim, "cortege functional");
  for (std::size_t i = 0; i < functionals.size(); ++i) {
    const auto prefix = std::span(functionals).first(i);
    const auto manifold = solve_affine_zero_set(prefix, dim);
    if (!manifold) return InvalidCortege{CortegeDefect::EmptyManifold, i + 1};
    const auto& l = functionals[i].linear;
    const bool varies = std::any_of(manifold->directions().begin(), manifold->directions().end(),
                                    [&](const Point& dir) { return sgn(l(dir)) != 0; });
    if (!varies) return InvalidCortege{CortegeDefect::ConstantOnManifold, i + 1};
  }
  return Cortege(Cortege::Trusted{}, std::move(functionals));
}

Cortege::Cortege(std::vector<AffineFunctional> functionals) {
  auto result = validate_cortege(std::move(functionals));
  if (auto* bad = std::get_if<InvalidCortege>(&result)) throw CortegeError(*bad);
  *this = std::move(std::get<Cortege>(result));
}

std::vector<LinearFunctional> Cortege::linear_parts() const {
  std::vector<LinearFunctional> out;
  for (const auto& f : functionals_) out.push_back(f.linear);
  return out;
}

bool Cortege::is_linear() const {
  return std::all_of(functionals_.begin(), functionals_.end(),
                     [](const AffineFunctional& f) { return sgn(f.offset) == 0; });
}

Rational StepAffineFunction::eval(const Point& x) const {
  const auto& fs = cortege_.functionals();
  for (std::size_t i = 0; i + 1 < fs.size(); ++i) {
    Rational v = fs[i](x);
    if (sgn(v) != 0) return v;
  }
  return fs.back()(x);
}

Rational StepAffineFunction::eval_by_least_nonvanishing(const Point& x) const {
  std::vector<std::size_t> nonvanishing;
  const auto& fs = cortege_.functionals();
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (sgn(fs[i](x)) != 0) nonvanishing.push_back(i);
  }
  if (nonvanishing.empty()) return 0;
  return fs[*std::min_element(nonvanishing.begin(), nonvanishing.end())](x);
}

std::optional<AffineManifold> StepAffineFunction::zero_set() const {
  return solve_affine_zero_set(cortege_.functionals(), dim());
}

Region StepAffineFunction::classify(const Point& x) const {
  if (!is_regular()) throw IrregularFunction("step-affine function has an empty zero set");
  const int s = sgn(eval(x));
  return s > 0 ? Region::PositiveSide : s < 0 ? Region::NegativeSide : Region::ZeroManifold;
}

RegularDecomposition decompose_regular(const StepAffineFunction& u) {
  auto zero = u.zero_set();
  if (!zero) throw IrregularFunction("step-affine function has an empty zero set");
  std::vector<AffineFunctional> linear;
  for (const auto& f : u.cortege().functionals()) linear.push_back(AffineFunctional{f.linear, 0});
  return RegularDecomposition{StepAffineFunction(Cortege(std::move(linear))), zero->base()};
}

}  // namespace facelex
