#include "facelex/oracle.hpp"

#include <algorithm>
#include <set>

namespace facelex {

namespace {

IndexSet argmin_vertices(const Polytope& p, const IndexSet& among, const LinearFunctional& l) {
  IndexSet best;
  Rational best_value;
  for (auto i : among) {
    Rational v = l(p.vertex(i));
    if (best.empty() || v < best_value) {
      best = {i};
      best_value = std::move(v);
    } else if (v == best_value) {
      best.push_back(i);
    }
  }
  return best;
}

// Nonempty subsets of facet normals; all of them for small facet counts,
// singletons and pairs otherwise.
std::vector<LinearFunctional> candidate_functionals(const std::vector<Facet>& facets) {
  constexpr std::size_t kAllSubsetsUpTo = 8;
  std::vector<LinearFunctional> inward;
  for (const auto& f : facets) inward.push_back(-f.functional);
  std::vector<LinearFunctional> out;
  if (inward.size() <= kAllSubsetsUpTo) {
    for (unsigned mask = 1; mask < (1u << inward.size()); ++mask) {
      std::optional<LinearFunctional> sum;
      for (std::size_t k = 0; k < inward.size(); ++k) {
        if (mask & (1u << k)) sum = sum ? *sum + inward[k] : inward[k];
      }
      out.push_back(*sum);
    }
    return out;
  }
  for (std::size_t i = 0; i < inward.size(); ++i) {
    out.push_back(inward[i]);
    for (std::size_t j = i + 1; j < inward.size(); ++j) out.push_back(inward[i] + inward[j]);
  }
  return out;
}

}  // namespace

std::vector<FaceDescriptor> oracle_faces(const Polytope& p) {
  if (p.num_vertices() > kOracleMaxVertices || p.ambient_dim() > kOracleMaxDim) {
    throw OracleSizeGuard("polytope too large for the face oracle");
  }
  std::set<IndexSet> known{p.all_indices()};
  std::vector<IndexSet> pending{p.all_indices()};
  while (!pending.empty()) {
    const IndexSet g = std::move(pending.back());
    pending.pop_back();
    if (g.size() == 1) continue;
    const Polytope face = p.sub_polytope(g);
    for (const auto& l : candidate_functionals(face.facets())) {
      IndexSet exposed = argmin_vertices(p, g, l);
      if (known.insert(exposed).second) pending.push_back(std::move(exposed));
    }
  }
  std::vector<FaceDescriptor> faces;
  for (const auto& s : known) faces.push_back(FaceDescriptor{s});
  return faces;
}

FaceDescriptor oracle_lex_argmin(const Polytope& p, std::span<const LinearFunctional> levels) {
  std::vector<std::vector<Rational>> tuples;
  for (const auto& v : p.vertices()) {
    std::vector<Rational> t;
    for (const auto& l : levels) t.push_back(l(v));
    tuples.push_back(std::move(t));
  }
  const auto least = *std::min_element(tuples.begin(), tuples.end());
  IndexSet out;
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    if (tuples[i] == least) out.push_back(i);
  }
  return FaceDescriptor{std::move(out)};
}

std::optional<RefutationPair> oracle_refute_face(const Polytope& p, const FaceDescriptor& s, int trials,
                                                 std::uint64_t seed) {
  if (trials < 1) throw Error("oracle_refute_face needs at least one trial");
  p.validate_indices(s);
  const Polytope face = p.sub_polytope(s.vertex_indices);
  Sampler sampler(seed);
  for (int trial = 0; trial < trials; ++trial) {
    Point u = sampler.in_polytope(p);
    const Rational alpha = sampler.open_unit();
    Point v(p.ambient_dim());
    if (trial % 2 == 0) {
      v = sampler.in_polytope(p);
    } else {
      // Aim the segment through a point of conv(S): solve for v.
      const Point target = sampler.sparse_convex_combination(face.vertices());
      v = (1 / (1 - alpha)) * (target - alpha * u);
      if (!p.contains(v)) continue;
    }
    if (!face.contains(alpha * u + (1 - alpha) * v)) continue;
    if (!face.contains(u) || !face.contains(v)) return RefutationPair{std::move(u), std::move(v), alpha};
  }
  return std::nullopt;
}

}  // namespace facelex
