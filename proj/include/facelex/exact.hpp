#pragma once

// Exact rational scalars, points, functionals and affine manifolds.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace facelex {

using Rational = mpq_class;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// Canonical "p/q" (or "p") form of a rational in lowest terms.
std::string to_string(const Rational& q);

/// Parses "p", "-p" or "p/q". Decimal points and exponents are rejected.
Rational parse_rational(std::string_view text);

Rational make_rational(long num, long den = 1);

class Point {
 public:
  Point() = default;
  explicit Point(std::size_t dim) : coords_(dim, Rational(0)) {}
  explicit Point(std::vector<Rational> coords) : coords_(std::move(coords)) {
    for (auto& c : coords_) c.canonicalize();
  }
  Point(std::initializer_list<Rational> coords) : Point(std::vector<Rational>(coords)) {}

  std::size_t dim() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_zero() const;

  Point& operator+=(const Point& other);
  Point& operator-=(const Point& other);
  Point& operator*=(const Rational& s);

  friend Point operator+(Point a, const Point& b) { return a += b; }
  friend Point operator-(Point a, const Point& b) { return a -= b; }
  friend Point operator*(const Rational& s, Point a) { return a *= s; }
  friend Point operator*(Point a, const Rational& s) { return a *= s; }
  friend bool operator==(const Point& a, const Point& b) { return a.coords_ == b.coords_; }
  friend bool operator<(const Point& a, const Point& b) { return a.coords_ < b.coords_; }

 private:
  std::vector<Rational> coords_;
};

Point midpoint(const Point& a, const Point& b);

/// Barycenter with uniform weights; `points` must be nonempty.
Point barycenter(std::span<const Point> points);

class LinearFunctional {
 public:
  LinearFunctional() = default;
  explicit LinearFunctional(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c.canonicalize();
  }
  LinearFunctional(std::initializer_list<Rational> coeffs)
      : LinearFunctional(std::vector<Rational>(coeffs)) {}

  std::size_t dim() const { return coeffs_.size(); }
  const Rational& operator[](std::size_t i) const { return coeffs_[i]; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const;

  Rational operator()(const Point& x) const;

  friend LinearFunctional operator+(const LinearFunctional& a, const LinearFunctional& b);
  friend LinearFunctional operator*(const Rational& s, const LinearFunctional& a);
  LinearFunctional operator-() const;

  friend bool operator==(const LinearFunctional&, const LinearFunctional&) = default;
  friend bool operator<(const LinearFunctional& a, const LinearFunctional& b) {
    return a.coeffs_ < b.coeffs_;
  }

 private:
  std::vector<Rational> coeffs_;
};

/// f(x) = linear(x) + offset.
struct AffineFunctional {
  LinearFunctional linear;
  Rational offset;

  std::size_t dim() const { return linear.dim(); }
  Rational operator()(const Point& x) const { return linear(x) + offset; }

  friend bool operator==(const AffineFunctional&, const AffineFunctional&) = default;
};

/// Scales (coeffs, offset) by a positive rational so that all entries are
/// coprime integers. The zero functional is returned unchanged.
AffineFunctional normalize_integral(const AffineFunctional& f);

/// Same for a direction vector.
Point primitive_integral(const Point& v);

/// A nonempty affine manifold `base + span(directions)`.
///
/// Directions are kept in reduced row echelon form, each row scaled to a
/// primitive integer vector, so two manifolds with the same direction space
/// store identical direction lists. The base point is whatever the
/// constructing routine produced; use `same_as` for set equality.
class AffineManifold {
 public:
  AffineManifold(Point base, std::vector<Point> spanning);

  std::size_t ambient_dim() const { return base_.dim(); }
  std::size_t dim() const { return directions_.size(); }
  const Point& base() const { return base_; }
  const std::vector<Point>& directions() const { return directions_; }
  /// Pivot column of each direction row.
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const Point& x) const;
  bool same_as(const AffineManifold& other) const;

  /// Coordinates of x with respect to the directions, relative to base.
  /// Only meaningful when contains(x).
  std::vector<Rational> local_coords(const Point& x) const;
  Point from_local(std::span<const Rational> t) const;

 private:
  Point base_;
  std::vector<Point> directions_;
  std::vector<std::size_t> pivots_;
};

// ---- dense linear algebra over Q ----

using Matrix = std::vector<std::vector<Rational>>;

/// In-place reduced row echelon form. Returns pivot columns, in row order.
/// Columns at or beyond `ncols_to_reduce` are carried along but never pivoted.
std::vector<std::size_t> rref(Matrix& m, std::size_t ncols_to_reduce);

std::size_t rank(Matrix m);

/// Basis of {x : m x = 0}, with `ncols` unknowns.
std::vector<Point> null_space(const Matrix& m, std::size_t ncols);

bool linear_independent(std::span<const LinearFunctional> funcs);

/// Solution set of f_i(x) = 0 for all i in an ambient space of dimension
/// `dim`; nullopt when the system is inconsistent.
std::optional<AffineManifold> solve_affine_zero_set(std::span<const AffineFunctional> funcs,
                                                    std::size_t dim);

/// Smallest affine manifold containing all points; `points` must be nonempty.
AffineManifold affine_hull(std::span<const Point> points);

/// Throws DimensionMismatch unless every element has dimension `dim`.
template <class Range>
void require_dim(const Range& items, std::size_t dim, const char* what) {
  for (const auto& item : items) {
    if (item.dim() != dim) {
      throw DimensionMismatch(std::string(what) + ": expected dimension " + std::to_string(dim) +
                              ", got " + std::to_string(item.dim()));
    }
  }
}

}  // namespace facelex
