#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <vector>

#include "facelex/exact.hpp"

namespace facelex {

/// Sorted set of indices into a polytope's vertex list.
using IndexSet = std::vector<std::size_t>;

struct FaceDescriptor {
  IndexSet vertex_indices;

  friend bool operator==(const FaceDescriptor&, const FaceDescriptor&) = default;
  friend auto operator<=>(const FaceDescriptor&, const FaceDescriptor&) = default;
};

/// Facet inequality `functional(x) <= offset`, relative to aff(P).
/// (functional, offset) are coprime integers; the functional vanishes on
/// every coordinate that is not a pivot of aff(P).
struct Facet {
  LinearFunctional functional;
  Rational offset;
  IndexSet tight_vertices;

  /// offset - functional(x); nonnegative on P, zero exactly on the facet.
  Rational slack(const Point& x) const { return offset - functional(x); }
  AffineFunctional slack_functional() const;
};

class NotAMember : public Error {
 public:
  using Error::Error;
};

class InvalidFace : public Error {
 public:
  using Error::Error;
};

/// Convex hull of finitely many rational points.
///
/// The constructor canonicalizes its input: duplicates and points that are
/// not extreme are dropped (see `removed()`), the remaining vertices keep
/// their input order. Facets are computed once at construction by brute
/// force over affinely independent vertex subsets inside aff(P), so the
/// object is immutable afterwards and safe to share between threads.
class Polytope {
 public:
  explicit Polytope(std::vector<Point> points);

  std::size_t ambient_dim() const { return aff_->ambient_dim(); }
  std::size_t intrinsic_dim() const { return aff_->dim(); }
  std::size_t num_vertices() const { return vertices_.size(); }
  const std::vector<Point>& vertices() const { return vertices_; }
  const Point& vertex(std::size_t i) const { return vertices_[i]; }
  const std::vector<Point>& removed() const { return removed_; }
  const AffineManifold& affine_span() const { return *aff_; }

  /// Facets sorted ascending by (functional, offset). Empty for a single point.
  const std::vector<Facet>& facets() const { return facets_; }

  IndexSet all_indices() const;
  std::vector<Point> points_of(const IndexSet& indices) const;

  /// Convex hull of the indexed vertices as a polytope in the same ambient space.
  Polytope sub_polytope(const IndexSet& indices) const;

  bool contains(const Point& x) const;

  /// Facets whose inequality is tight at x.
  std::vector<std::size_t> tight_facets(const Point& x) const;

  /// Vertex set of the unique smallest face containing x. Throws NotAMember.
  FaceDescriptor smallest_face_containing(const Point& x) const;

  /// All nonempty faces (including P itself), sorted.
  std::vector<FaceDescriptor> all_faces() const;

  /// Whether conv(S) is a face. Throws InvalidFace for an empty S or
  /// out-of-range / unsorted / repeated indices.
  bool is_face(const FaceDescriptor& s) const;

  void validate_indices(const FaceDescriptor& s) const;

 private:
  std::vector<Point> vertices_;
  std::vector<Point> removed_;
  std::optional<AffineManifold> aff_;
  std::vector<Facet> facets_;
  std::vector<AffineFunctional> hull_equations_;  // aff(P) = common zero set
};

}  // namespace facelex
