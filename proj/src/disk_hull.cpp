#include "facelex/disk_hull.hpp"

#include <algorithm>
#include <type_traits>

#include "facelex/polytope.hpp"

namespace facelex {

// ---- QuadScalar ----

QuadScalar::QuadScalar(Rational a, Rational b, Rational radicand)
    : a_(std::move(a)), b_(std::move(b)), s_(std::move(radicand)) {
  if (sgn(s_) < 0) throw Error("negative radicand");
  if (sgn(b_) == 0 || sgn(s_) == 0) {
    b_ = 0;
    s_ = 0;
  }
}

std::optional<Rational> QuadScalar::as_rational() const {
  if (sgn(b_) == 0) return a_;
  if (auto root = rational_sqrt(s_)) return a_ + b_ * *root;
  return std::nullopt;
}

int QuadScalar::sign() const {
  const int sa = sgn(a_);
  const int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa >= 0 && sb > 0) return 1;
  if (sa <= 0 && sb < 0) return -1;
  // Opposite signs: compare a^2 with b^2 s.
  const int cmp = sgn(a_ * a_ - b_ * b_ * s_);
  return sa > 0 ? cmp : -cmp;
}

namespace {

Rational shared_radicand(const QuadScalar& x, const QuadScalar& y) {
  if (sgn(x.surd_part()) == 0) return y.radicand();
  if (sgn(y.surd_part()) == 0) return x.radicand();
  if (x.radicand() != y.radicand()) throw Error("QuadScalar operands with different radicands");
  return x.radicand();
}

}  // namespace

QuadScalar operator+(const QuadScalar& x, const QuadScalar& y) {
  return QuadScalar(x.a_ + y.a_, x.b_ + y.b_, shared_radicand(x, y));
}

QuadScalar operator-(const QuadScalar& x, const QuadScalar& y) {
  return QuadScalar(x.a_ - y.a_, x.b_ - y.b_, shared_radicand(x, y));
}

QuadScalar operator*(const QuadScalar& x, const QuadScalar& y) {
  const Rational s = shared_radicand(x, y);
  return QuadScalar(x.a_ * y.a_ + x.b_ * y.b_ * s, x.a_ * y.b_ + x.b_ * y.a_, s);
}

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  const mpz_class& num = q.get_num();
  const mpz_class& den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  Rational r(rn, rd);
  r.canonicalize();
  return r;
}

// ---- body ----

DiskBody::DiskBody(std::vector<Disk> disks) : disks_(std::move(disks)) {
  if (disks_.empty()) throw Error("disk body needs at least one disk");
  for (const auto& d : disks_) {
    if (d.center.dim() != 2) throw DimensionMismatch("disk centers must be 2D");
    if (sgn(d.radius) < 0) throw Error("negative disk radius");
  }
}

namespace {

Point perp(const Point& v) { return Point{-v[1], v[0]}; }

Rational dot(const Point& a, const Point& b) { return a[0] * b[0] + a[1] * b[1]; }

const HullEdge* find_edge(const std::vector<HullEdge>& edges, const EdgeRef& ref) {
  for (const auto& e : edges) {
    if (e.ref == ref) return &e;
  }
  return nullptr;
}

AffineFunctional slack_of(const HullEdge& e) { return normalize_integral(AffineFunctional{e.normal, -e.level}); }

}  // namespace

std::vector<HullEdge> hull_edges(const DiskBody& body) {
  const auto& disks = body.disks();
  std::vector<HullEdge> edges;
  for (std::size_t i = 0; i < disks.size(); ++i) {
    for (std::size_t j = i + 1; j < disks.size(); ++j) {
      const Point d = disks[j].center - disks[i].center;
      const Rational dist2 = dot(d, d);
      const Rational delta = disks[j].radius - disks[i].radius;
      const Rational s = dist2 - delta * delta;
      if (sgn(dist2) == 0 || sgn(s) <= 0) continue;  // one disk inside the other
      const Point dp = perp(d);
      for (int side : {1, -1}) {
        // Unit inward normal n = (delta d + side sqrt(s) perp(d)) / |d|^2.
        const QuadScalar nx(delta * d[0] / dist2, side * dp[0] / dist2, s);
        const QuadScalar ny(delta * d[1] / dist2, side * dp[1] / dist2, s);
        auto support = [&](const Disk& k) {
          return nx * QuadScalar(k.center[0]) + ny * QuadScalar(k.center[1]) - QuadScalar(k.radius);
        };
        const QuadScalar level = support(disks[i]);
        bool supporting = true;
        bool degenerate = false;
        for (std::size_t k = 0; k < disks.size(); ++k) {
          if (k == i || k == j) continue;
          const int sign = (support(disks[k]) - level).sign();
          supporting = supporting && sign >= 0;
          degenerate = degenerate || sign == 0;
        }
        if (!supporting) continue;
        if (degenerate) throw UnsupportedConfiguration("three disks tangent to one hull line");

        HullEdge e;
        e.ref = EdgeRef{i, j, side};
        if (auto root = rational_sqrt(s)) {
          const Point n = (1 / dist2) * (delta * d + (side * *root) * dp);
          e.normal = LinearFunctional(n.coords());
          e.level = dot(n, disks[i].center) - disks[i].radius;
          e.end_i = disks[i].center - disks[i].radius * n;
          e.end_j = disks[j].center - disks[j].radius * n;
        } else if (sgn(disks[i].radius) == 0 && sgn(disks[j].radius) == 0) {
          // Two points: the line is rational even though its unit normal is not.
          const Point n = Rational(side) * dp;
          e.normal = LinearFunctional(n.coords());
          e.level = dot(n, disks[i].center);
          e.end_i = disks[i].center;
          e.end_j = disks[j].center;
        } else {
          throw UnsupportedConfiguration("hull edge between disks " + std::to_string(i) + " and " +
                                         std::to_string(j) + " has irrational tangency points");
        }
        edges.push_back(std::move(e));
      }
    }
  }
  return edges;
}

SupportMin dh_support_min(const DiskBody& body, const LinearFunctional& l) {
  if (l.dim() != 2) throw DimensionMismatch("direction must be 2D");
  if (l.is_zero()) throw ZeroFunctional("support of the zero functional");
  const Point lv(l.coeffs());
  const Rational norm2 = dot(lv, lv);
  const auto& disks = body.disks();
  std::vector<QuadScalar> values;
  for (const auto& k : disks) values.emplace_back(l(k.center), -k.radius, norm2);
  const QuadScalar best = *std::min_element(values.begin(), values.end());
  std::vector<std::size_t> attained;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (values[k] == best) attained.push_back(k);
  }
  if (attained.size() == 1) {
    const std::size_t k = attained.front();
    if (sgn(disks[k].radius) == 0) return {best, diskface::Apex{k}};
    return {best, diskface::ArcPoint{k, LinearFunctional(primitive_integral(lv).coords())}};
  }
  if (attained.size() == 2) {
    const std::size_t i = attained[0], j = attained[1];
    if (disks[i].center == disks[j].center) throw UnsupportedConfiguration("coincident disks");
    const int side = sgn(dot(lv, perp(disks[j].center - disks[i].center)));
    return {best, diskface::Edge{EdgeRef{i, j, side}}};
  }
  throw UnsupportedConfiguration("more than two disks attain the minimum");
}

bool dh_contains(const DiskBody& body, const Point& p) {
  if (p.dim() != 2) throw DimensionMismatch("point must be 2D");
  for (const auto& k : body.disks()) {
    const Point off = p - k.center;
    if (dot(off, off) <= k.radius * k.radius) return true;
  }
  const auto edges = hull_edges(body);
  if (edges.empty()) return false;
  std::vector<Point> corners;
  for (const auto& e : edges) {
    corners.push_back(e.end_i);
    corners.push_back(e.end_j);
  }
  return Polytope(std::move(corners)).contains(p);
}

DiskFaceList dh_faces(const DiskBody& body) {
  const auto edges = hull_edges(body);
  const auto& disks = body.disks();
  DiskFaceList out;
  out.faces.push_back(diskface::Whole{});
  for (const auto& e : edges) out.faces.push_back(diskface::Edge{e.ref});
  std::vector<bool> apex_listed(disks.size(), false);
  for (const auto& e : edges) {
    for (std::size_t k : {e.ref.i, e.ref.j}) {
      if (sgn(disks[k].radius) > 0) {
        out.faces.push_back(diskface::TangencyPoint{e.ref, k});
      } else if (!apex_listed[k]) {
        apex_listed[k] = true;
        out.faces.push_back(diskface::Apex{k});
      }
    }
  }

  for (std::size_t k = 0; k < disks.size(); ++k) {
    if (sgn(disks[k].radius) == 0) continue;
    std::vector<LinearFunctional> incident;
    for (const auto& e : edges) {
      if (e.ref.i == k || e.ref.j == k) incident.push_back(e.normal);
    }
    if (incident.size() == 2) {
      out.arcs.push_back(ArcFamily{k, std::make_pair(incident[0], incident[1])});
    } else if (edges.empty()) {
      // Without edges the body is the largest disk; the others lie inside it.
      const bool largest = std::all_of(disks.begin(), disks.end(), [&](const Disk& o) {
        return o.radius < disks[k].radius || (o.radius == disks[k].radius && &o >= &disks[k]);
      });
      if (largest) out.arcs.push_back(ArcFamily{k, std::nullopt});
    }
  }
  return out;
}

namespace {

const HullEdge& require_edge(const std::vector<HullEdge>& edges, const EdgeRef& ref) {
  const HullEdge* e = find_edge(edges, ref);
  if (!e) throw InvalidDiskFace("edge is not on the hull boundary");
  return *e;
}

void require_tangency(const DiskBody& body, const std::vector<HullEdge>& edges, const diskface::TangencyPoint& t) {
  require_edge(edges, t.edge);
  if ((t.end != t.edge.i && t.end != t.edge.j) || sgn(body.disk(t.end).radius) == 0) {
    throw InvalidDiskFace("tangency end must be a positive-radius disk of its edge");
  }
}

std::vector<const HullEdge*> edges_at_apex(const DiskBody& body, const std::vector<HullEdge>& edges,
                                           std::size_t k) {
  if (k >= body.size() || sgn(body.disk(k).radius) != 0) throw InvalidDiskFace("apex must be a zero-radius disk");
  std::vector<const HullEdge*> incident;
  for (const auto& e : edges) {
    if (e.ref.i == k || e.ref.j == k) incident.push_back(&e);
  }
  if (incident.empty()) throw InvalidDiskFace("point is not a corner of the hull");
  return incident;
}

void require_arc_point(const DiskBody& body, const diskface::ArcPoint& a) {
  const auto found = dh_support_min(body, a.direction);
  const auto* arc = std::get_if<diskface::ArcPoint>(&found.face);
  if (!arc || arc->disk != a.disk) throw InvalidDiskFace("direction does not expose a point of that disk");
}

}  // namespace

Cortege dh_certify(const DiskBody& body, const DiskFace& face) {
  const auto edges = hull_edges(body);
  return std::visit(
      [&](const auto& f) -> Cortege {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, diskface::Whole>) {
          throw WholeBodyNotProper("the whole body is not a proper face");
        } else if constexpr (std::is_same_v<T, diskface::Edge>) {
          return Cortege({slack_of(require_edge(edges, f.edge))});
        } else if constexpr (std::is_same_v<T, diskface::Apex>) {
          const auto incident = edges_at_apex(body, edges, f.disk);
          LinearFunctional sum = incident.front()->normal;
          for (std::size_t k = 1; k < incident.size(); ++k) sum = sum + incident[k]->normal;
          if (sum.is_zero()) {
            // Both edges on one line (a segment body): point along the edge.
            const HullEdge& e = *incident.front();
            sum = LinearFunctional((e.other_end(f.disk) - e.end_at(f.disk)).coords());
          }
          const Point& apex = body.disk(f.disk).center;
          return Cortege({normalize_integral(AffineFunctional{sum, -sum(apex)})});
        } else if constexpr (std::is_same_v<T, diskface::ArcPoint>) {
          require_arc_point(body, f);
          const Point lv(f.direction.coeffs());
          const auto norm = rational_sqrt(dot(lv, lv));
          if (!norm) throw UnsupportedConfiguration("arc point direction has irrational length");
          const Disk& disk = body.disk(f.disk);
          const Rational minimum = f.direction(disk.center) - disk.radius * *norm;
          return Cortege({normalize_integral(AffineFunctional{f.direction, -minimum})});
        } else {
          require_tangency(body, edges, f);
          const HullEdge& e = require_edge(edges, f.edge);
          const Point& at = e.end_at(f.end);
          const LinearFunctional along(primitive_integral(e.other_end(f.end) - at).coords());
          return Cortege({slack_of(e), normalize_integral(AffineFunctional{along, -along(at)})});
        }
      },
      face);
}

bool dh_is_exposed(const DiskBody& body, const DiskFace& face) {
  const auto edges = hull_edges(body);
  return std::visit(
      [&](const auto& f) -> bool {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, diskface::Whole>) {
          throw WholeBodyNotProper("the whole body is not a proper face");
        } else if constexpr (std::is_same_v<T, diskface::Edge>) {
          require_edge(edges, f.edge);
          return true;
        } else if constexpr (std::is_same_v<T, diskface::Apex>) {
          edges_at_apex(body, edges, f.disk);
          return true;
        } else if constexpr (std::is_same_v<T, diskface::ArcPoint>) {
          require_arc_point(body, f);
          return true;
        } else {
          // The only supporting line at a tangency point contains its edge.
          require_tangency(body, edges, f);
          return false;
        }
      },
      face);
}

std::optional<Point> face_point(const DiskBody& body, const DiskFace& face) {
  if (const auto* a = std::get_if<diskface::Apex>(&face)) return body.disk(a->disk).center;
  if (const auto* t = std::get_if<diskface::TangencyPoint>(&face)) {
    const auto edges = hull_edges(body);
    return require_edge(edges, t->edge).end_at(t->end);
  }
  if (const auto* a = std::get_if<diskface::ArcPoint>(&face)) {
    const Point lv(a->direction.coeffs());
    const auto norm = rational_sqrt(dot(lv, lv));
    if (!norm) return std::nullopt;
    const Disk& disk = body.disk(a->disk);
    return disk.center - (disk.radius / *norm) * lv;
  }
  return std::nullopt;
}

bool face_contains(const DiskBody& body, const DiskFace& face, const Point& x) {
  if (std::holds_alternative<diskface::Whole>(face)) return dh_contains(body, x);
  if (const auto* e = std::get_if<diskface::Edge>(&face)) {
    const auto edges = hull_edges(body);
    const HullEdge& edge = require_edge(edges, e->edge);
    if (edge.normal(x) != edge.level) return false;
    return Polytope({edge.end_i, edge.end_j}).contains(x);
  }
  const auto p = face_point(body, face);
  if (!p) throw UnsupportedConfiguration("face point is irrational");
  return *p == x;
}

std::vector<Point> sample_body(const DiskBody& body, Sampler& sampler, std::size_t count) {
  std::vector<Point> out;
  const auto edges = hull_edges(body);
  std::vector<Point> corners;
  for (const auto& e : edges) {
    out.push_back(e.end_i);
    out.push_back(e.end_j);
    out.push_back(midpoint(e.end_i, e.end_j));
    corners.push_back(e.end_i);
    corners.push_back(e.end_j);
  }
  const auto& disks = body.disks();
  while (out.size() < count) {
    const long kind = sampler.integer(0, corners.empty() ? 1 : 2);
    if (kind == 2) {
      out.push_back(sampler.sparse_convex_combination(corners));
      continue;
    }
    const Disk& disk = disks[static_cast<std::size_t>(sampler.integer(0, static_cast<long>(disks.size()) - 1))];
    // Rational point of the unit circle: ((1 - t^2), 2t) / (1 + t^2).
    const Rational t = sampler.rational(-4, 4, 6);
    const Point unit{(1 - t * t) / (1 + t * t), 2 * t / (1 + t * t)};
    const Rational scale = kind == 0 ? Rational(1) : sampler.open_unit();
    out.push_back(disk.center + (disk.radius * scale) * unit);
  }
  return out;
}

}  // namespace facelex
