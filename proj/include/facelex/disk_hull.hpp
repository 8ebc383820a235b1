#pragma once

// Convex hulls of finitely many rational disks in the plane.
//
// These bodies are not polyhedral: a tangency point where a straight hull
// edge meets a circle is a face that no linear functional exposes, yet a
// rank-2 cortege (edge slack, then position along the edge) certifies it.

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "facelex/exact.hpp"
#include "facelex/sampling.hpp"
#include "facelex/step_affine.hpp"

namespace facelex {

class UnsupportedConfiguration : public Error {
 public:
  using Error::Error;
};

class ZeroFunctional : public Error {
 public:
  using Error::Error;
};

class WholeBodyNotProper : public Error {
 public:
  using Error::Error;
};

class InvalidDiskFace : public Error {
 public:
  using Error::Error;
};

/// a + b * sqrt(s) with rational a, b and s >= 0.
class QuadScalar {
 public:
  QuadScalar(Rational a = 0) : a_(std::move(a)), b_(0), s_(0) {}
  QuadScalar(Rational a, Rational b, Rational radicand);

  const Rational& rational_part() const { return a_; }
  const Rational& surd_part() const { return b_; }
  const Rational& radicand() const { return s_; }

  /// Exact rational value when the surd vanishes or sqrt(s) is rational.
  std::optional<Rational> as_rational() const;

  int sign() const;

  friend QuadScalar operator+(const QuadScalar& x, const QuadScalar& y);
  friend QuadScalar operator-(const QuadScalar& x, const QuadScalar& y);
  friend QuadScalar operator*(const QuadScalar& x, const QuadScalar& y);
  QuadScalar operator-() const { return QuadScalar(-a_, -b_, s_); }

  friend bool operator==(const QuadScalar& x, const QuadScalar& y) { return (x - y).sign() == 0; }
  friend bool operator<(const QuadScalar& x, const QuadScalar& y) { return (x - y).sign() < 0; }
  friend bool operator<=(const QuadScalar& x, const QuadScalar& y) { return (x - y).sign() <= 0; }

 private:
  Rational a_, b_, s_;
};

/// sqrt(q) when q is the square of a rational.
std::optional<Rational> rational_sqrt(const Rational& q);

struct Disk {
  Point center;
  Rational radius;  // zero for a point
};

class DiskBody {
 public:
  explicit DiskBody(std::vector<Disk> disks);

  const std::vector<Disk>& disks() const { return disks_; }
  const Disk& disk(std::size_t i) const { return disks_.at(i); }
  std::size_t size() const { return disks_.size(); }

 private:
  std::vector<Disk> disks_;
};

/// One of the two outer bitangents of disks i < j. `side` is the sign of
/// n . perp(c_j - c_i) for the inward normal n, with perp(x, y) = (-y, x).
struct EdgeRef {
  std::size_t i = 0;
  std::size_t j = 0;
  int side = 1;

  friend bool operator==(const EdgeRef&, const EdgeRef&) = default;
};

/// Straight piece of the hull boundary: normal . x >= level on the body,
/// with equality on the segment [end_i, end_j].
struct HullEdge {
  EdgeRef ref;
  LinearFunctional normal;
  Rational level;
  Point end_i;
  Point end_j;

  const Point& end_at(std::size_t disk) const { return disk == ref.i ? end_i : end_j; }
  const Point& other_end(std::size_t disk) const { return disk == ref.i ? end_j : end_i; }
};

namespace diskface {

struct Whole {
  friend bool operator==(const Whole&, const Whole&) = default;
};
struct Edge {
  EdgeRef edge;
  friend bool operator==(const Edge&, const Edge&) = default;
};
/// The unique minimizer of `direction` over the body, on a positive-radius disk.
struct ArcPoint {
  std::size_t disk;
  LinearFunctional direction;
  friend bool operator==(const ArcPoint&, const ArcPoint&) = default;
};
/// A zero-radius disk that is a corner of the hull.
struct Apex {
  std::size_t disk;
  friend bool operator==(const Apex&, const Apex&) = default;
};
/// End of a hull edge on a positive-radius disk.
struct TangencyPoint {
  EdgeRef edge;
  std::size_t end;  // disk index of this end, edge.i or edge.j
  friend bool operator==(const TangencyPoint&, const TangencyPoint&) = default;
};

}  // namespace diskface

using DiskFace = std::variant<diskface::Whole, diskface::Edge, diskface::ArcPoint, diskface::Apex,
                              diskface::TangencyPoint>;

/// Exposed points of one disk, symbolically: the minimizing directions range
/// over the arc between two edge normals, or over all directions.
struct ArcFamily {
  std::size_t disk;
  std::optional<std::pair<LinearFunctional, LinearFunctional>> bounds;
};

struct DiskFaceList {
  std::vector<DiskFace> faces;  // Whole, edges, point faces
  std::vector<ArcFamily> arcs;
};

struct SupportMin {
  QuadScalar value;
  DiskFace face;
};

/// Bitangent edges of the hull boundary. Throws UnsupportedConfiguration
/// when a boundary edge is not a rational line with rational endpoints.
std::vector<HullEdge> hull_edges(const DiskBody& body);

/// min over the body of l, i.e. min_j (l . c_j - r_j |l|), compared exactly.
SupportMin dh_support_min(const DiskBody& body, const LinearFunctional& l);

bool dh_contains(const DiskBody& body, const Point& p);

DiskFaceList dh_faces(const DiskBody& body);

/// Cortege whose step-affine function is >= 0 on the body and vanishes
/// exactly on the face. Rank 2 for tangency points, rank 1 otherwise.
Cortege dh_certify(const DiskBody& body, const DiskFace& face);

/// Whether some linear functional has exactly this face as its argmin set.
bool dh_is_exposed(const DiskBody& body, const DiskFace& face);

/// The rational point of a point face (apex, tangency point, or an arc point
/// whose direction has rational length); nullopt otherwise.
std::optional<Point> face_point(const DiskBody& body, const DiskFace& face);

/// Whether a rational point belongs to the given face (edges, point faces).
bool face_contains(const DiskBody& body, const DiskFace& face, const Point& x);

/// Seeded rational sample of body points: all edge endpoints and midpoints,
/// plus random points inside and on the circles and inside the hull polygon.
std::vector<Point> sample_body(const DiskBody& body, Sampler& sampler, std::size_t count);

}  // namespace facelex
