#include "facelex/polytope.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

namespace facelex {

AffineFunctional Facet::slack_functional() const { return AffineFunctional{-functional, offset}; }

namespace {

// Calls visit(subset) for every k-subset of {0..n-1} in lexicographic order.
template <class Visit>
void for_each_subset(std::size_t n, std::size_t k, Visit&& visit) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    visit(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Brute-force facet enumeration of conv(points) relative to `aff`.
std::vector<Facet> enumerate_facets(const std::vector<Point>& points, const AffineManifold& aff) {
  const std::size_t d = aff.dim();
  if (d == 0) return {};
  std::vector<std::vector<Rational>> local;
  local.reserve(points.size());
  for (const auto& p : points) local.push_back(aff.local_coords(p));

  std::map<std::pair<LinearFunctional, Rational>, IndexSet> found;
  for_each_subset(points.size(), d, [&](const std::vector<std::size_t>& subset) {
    Matrix diffs;
    for (std::size_t j = 1; j < subset.size(); ++j) {
      std::vector<Rational> row(d);
      for (std::size_t k = 0; k < d; ++k) row[k] = local[subset[j]][k] - local[subset[0]][k];
      diffs.push_back(std::move(row));
    }
    const auto normals = null_space(diffs, d);
    if (normals.size() != 1) return;  // affinely dependent subset
    const Point& n = normals.front();
    auto value = [&](std::size_t i) {
      Rational v = 0;
      for (std::size_t k = 0; k < d; ++k) v += n[k] * local[i][k];
      return v;
    };
    const Rational level = value(subset[0]);
    bool below = false, above = false;
    IndexSet tight;
    for (std::size_t i = 0; i < points.size(); ++i) {
      const int s = sgn(value(i) - level);
      below |= s < 0;
      above |= s > 0;
      if (s == 0) tight.push_back(i);
    }
    if (below && above) return;
    const Rational orient = above ? -1 : 1;

    // Lift local n.t <= level back to ambient coordinates: t_k is read off
    // pivot column k, so the ambient functional lives on pivot columns.
    std::vector<Rational> coeffs(aff.ambient_dim(), Rational(0));
    Rational offset = orient * level;
    for (std::size_t k = 0; k < d; ++k) {
      const std::size_t col = aff.pivots()[k];
      const Rational c = orient * n[k] / aff.directions()[k][col];
      coeffs[col] = c;
      offset += c * aff.base()[col];
    }
    auto f = normalize_integral(AffineFunctional{LinearFunctional(std::move(coeffs)), offset});
    found.emplace(std::make_pair(f.linear, f.offset), std::move(tight));
  });

  std::vector<Facet> facets;
  for (auto& [key, tight] : found) facets.push_back(Facet{key.first, key.second, std::move(tight)});
  return facets;
}

}  // namespace

Polytope::Polytope(std::vector<Point> points) {
  if (points.empty()) throw Error("polytope needs at least one point");
  require_dim(points, points.front().dim(), "polytope vertex");

  std::vector<Point> unique;
  for (auto& p : points) {
    if (std::find(unique.begin(), unique.end(), p) == unique.end()) {
      unique.push_back(std::move(p));
    } else {
      removed_.push_back(std::move(p));
    }
  }
  aff_ = affine_hull(unique);
  const std::size_t d = aff_->dim();
  auto facets = enumerate_facets(unique, *aff_);

  // A point is a vertex iff the normals of the facets tight there have rank d.
  std::vector<bool> keep(unique.size(), d == 0);
  if (d > 0) {
    std::vector<Matrix> normals(unique.size());
    for (const auto& f : facets) {
      for (auto i : f.tight_vertices) normals[i].push_back(f.functional.coeffs());
    }
    for (std::size_t i = 0; i < unique.size(); ++i) keep[i] = rank(normals[i]) == d;
  }
  std::vector<std::size_t> new_index(unique.size(), 0);
  for (std::size_t i = 0; i < unique.size(); ++i) {
    if (keep[i]) {
      new_index[i] = vertices_.size();
      vertices_.push_back(std::move(unique[i]));
    } else {
      removed_.push_back(std::move(unique[i]));
    }
  }
  for (auto& f : facets) {
    IndexSet tight;
    for (auto i : f.tight_vertices) {
      if (keep[i]) tight.push_back(new_index[i]);
    }
    f.tight_vertices = std::move(tight);
  }
  facets_ = std::move(facets);

  Matrix dirs;
  for (const auto& v : aff_->directions()) dirs.push_back(v.coords());
  for (auto& n : null_space(dirs, ambient_dim())) {
    LinearFunctional l(n.coords());
    const Rational at_base = l(aff_->base());
    hull_equations_.push_back(AffineFunctional{std::move(l), -at_base});
  }
}

IndexSet Polytope::all_indices() const {
  IndexSet all(vertices_.size());
  std::iota(all.begin(), all.end(), 0);
  return all;
}

std::vector<Point> Polytope::points_of(const IndexSet& indices) const {
  std::vector<Point> pts;
  pts.reserve(indices.size());
  for (auto i : indices) pts.push_back(vertices_.at(i));
  return pts;
}

Polytope Polytope::sub_polytope(const IndexSet& indices) const { return Polytope(points_of(indices)); }

bool Polytope::contains(const Point& x) const {
  if (x.dim() != ambient_dim()) throw DimensionMismatch("polytope membership");
  const bool inside = std::all_of(facets_.begin(), facets_.end(), [&](const Facet& f) { return sgn(f.slack(x)) >= 0; });
  return inside && std::all_of(hull_equations_.begin(), hull_equations_.end(),
                               [&](const AffineFunctional& e) { return sgn(e(x)) == 0; });
}

std::vector<std::size_t> Polytope::tight_facets(const Point& x) const {
  std::vector<std::size_t> tight;
  for (std::size_t i = 0; i < facets_.size(); ++i) {
    if (sgn(facets_[i].slack(x)) == 0) tight.push_back(i);
  }
  return tight;
}

FaceDescriptor Polytope::smallest_face_containing(const Point& x) const {
  if (!contains(x)) throw NotAMember("point is not in the polytope");
  IndexSet face = all_indices();
  for (auto fi : tight_facets(x)) {
    IndexSet next;
    std::set_intersection(face.begin(), face.end(), facets_[fi].tight_vertices.begin(),
                          facets_[fi].tight_vertices.end(), std::back_inserter(next));
    face = std::move(next);
  }
  return FaceDescriptor{std::move(face)};
}

std::vector<FaceDescriptor> Polytope::all_faces() const {
  // Closure of {P} under intersection with facets; equals the set of all
  // nonempty intersections of facet subsets.
  std::set<IndexSet> seen{all_indices()};
  std::vector<IndexSet> frontier{all_indices()};
  while (!frontier.empty()) {
    std::vector<IndexSet> next;
    for (const auto& face : frontier) {
      for (const auto& f : facets_) {
        IndexSet cut;
        std::set_intersection(face.begin(), face.end(), f.tight_vertices.begin(), f.tight_vertices.end(),
                              std::back_inserter(cut));
        if (!cut.empty() && seen.insert(cut).second) next.push_back(std::move(cut));
      }
    }
    frontier = std::move(next);
  }
  std::vector<FaceDescriptor> faces;
  for (const auto& s : seen) faces.push_back(FaceDescriptor{s});
  return faces;
}

void Polytope::validate_indices(const FaceDescriptor& s) const {
  const auto& idx = s.vertex_indices;
  if (idx.empty()) throw InvalidFace("empty vertex set");
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (idx[k] >= vertices_.size()) throw InvalidFace("vertex index " + std::to_string(idx[k]) + " out of range");
    if (k > 0 && idx[k] <= idx[k - 1]) throw InvalidFace("vertex indices must be strictly increasing");
  }
}

bool Polytope::is_face(const FaceDescriptor& s) const {
  validate_indices(s);
  const auto pts = points_of(s.vertex_indices);
  return smallest_face_containing(barycenter(pts)) == s;
}

}  // namespace facelex
