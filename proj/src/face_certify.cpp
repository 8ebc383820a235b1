#include "facelex/face_certify.hpp"

#include <algorithm>

#include "facelex/lex_preorder.hpp"

namespace facelex {

namespace {

// Common argument checks for certify / chain_certificate / equivalence_report.
void require_proper(const Polytope& p, const FaceDescriptor& s) {
  if (s.vertex_indices.empty()) throw EmptyFace("cannot certify the empty face");
  p.validate_indices(s);
  if (s.vertex_indices.size() == p.num_vertices()) throw ImproperFace("the polytope itself is not a proper face");
}

bool is_subset(const IndexSet& a, const IndexSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

IndexSet intersect(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

NotAFace build_witness(const Polytope& p, const FaceDescriptor& s, const Point& b, const FaceDescriptor& g) {
  IndexSet outside;
  std::set_difference(g.vertex_indices.begin(), g.vertex_indices.end(), s.vertex_indices.begin(),
                      s.vertex_indices.end(), std::back_inserter(outside));
  const Point& w = p.vertex(outside.front());
  const Point dir = b - w;

  // Largest step along b - w that stays inside conv(G).
  const Polytope face = p.sub_polytope(g.vertex_indices);
  std::optional<Rational> bound;
  for (const auto& f : face.facets()) {
    const Rational rate = f.functional(dir);
    if (sgn(rate) <= 0) continue;
    const Rational t = f.slack(b) / rate;
    if (!bound || t < *bound) bound = t;
  }
  Rational t = 1;
  if (bound && *bound <= 1) t = *bound / 2;
  return NotAFace{w, b + t * dir, b};
}

}  // namespace

CertifyResult certify(const Polytope& p, const FaceDescriptor& s) {
  require_proper(p, s);
  const Point b = barycenter(p.points_of(s.vertex_indices));
  const FaceDescriptor g = p.smallest_face_containing(b);
  if (g != s) return build_witness(p, s, b, g);

  LinearFunctional sum(std::vector<Rational>(p.ambient_dim(), Rational(0)));
  Rational offset = 0;
  for (auto fi : p.tight_facets(b)) {
    const auto slack = p.facets()[fi].slack_functional();
    sum = sum + slack.linear;
    offset += slack.offset;
  }
  return FaceCertificate{Cortege({AffineFunctional{std::move(sum), offset}}), {p.all_indices(), s.vertex_indices}};
}

FaceCertificate chain_certificate(const Polytope& p, const FaceDescriptor& s) {
  require_proper(p, s);
  const Point b = barycenter(p.points_of(s.vertex_indices));
  if (p.smallest_face_containing(b) != s) throw NotAFaceError("vertex set does not span a face");

  std::vector<AffineFunctional> levels;
  std::vector<IndexSet> chain{p.all_indices()};
  for (auto fi : p.tight_facets(b)) {
    const Facet& facet = p.facets()[fi];
    // A facet containing the whole current face is constant on it.
    if (is_subset(chain.back(), facet.tight_vertices)) continue;
    levels.push_back(facet.slack_functional());
    chain.push_back(intersect(chain.back(), facet.tight_vertices));
    if (chain.back() == s.vertex_indices) break;
  }
  return FaceCertificate{Cortege(std::move(levels)), std::move(chain)};
}

Verdict verify_certificate(const Polytope& p, const FaceDescriptor& s, const FaceCertificate& cert) {
  const auto& fs = cert.cortege.functionals();
  if (cert.cortege.dim() != p.ambient_dim()) return Verdict::reject(1, "cortege dimension differs from the polytope");

  const auto& chain = cert.chain;
  if (chain.size() != fs.size() + 1) return Verdict::reject(3, "chain length must be rank + 1");
  if (chain.front() != p.all_indices()) return Verdict::reject(3, "chain must start with all vertices");
  for (const auto& link : chain) {
    try {
      p.validate_indices(FaceDescriptor{link});
    } catch (const InvalidFace& e) {
      return Verdict::reject(3, std::string("malformed chain element: ") + e.what());
    }
  }

  for (std::size_t i = 0; i < fs.size(); ++i) {
    IndexSet zeros;
    for (auto v : chain[i]) {
      const int sign = sgn(fs[i](p.vertex(v)));
      if (sign < 0) {
        return Verdict::reject(2, "level " + std::to_string(i + 1) + " is negative at vertex " + std::to_string(v));
      }
      if (sign == 0) zeros.push_back(v);
    }
    if (zeros != chain[i + 1]) {
      return Verdict::reject(2, "level " + std::to_string(i + 1) + " does not vanish exactly on chain element " +
                                    std::to_string(i + 1));
    }
  }

  if (chain.back() != s.vertex_indices) return Verdict::reject(4, "chain does not end at the requested face");
  return Verdict::accept();
}

Verdict verify_certificate(const Polytope& p, const FaceDescriptor& s,
                           const std::vector<AffineFunctional>& functionals, const std::vector<IndexSet>& chain) {
  if (functionals.empty()) return Verdict::reject(1, "empty cortege");
  for (const auto& f : functionals) {
    if (f.dim() != p.ambient_dim()) return Verdict::reject(1, "cortege dimension differs from the polytope");
  }
  auto validated = validate_cortege(functionals);
  if (auto* bad = std::get_if<InvalidCortege>(&validated)) return Verdict::reject(1, CortegeError(*bad).what());
  return verify_certificate(p, s, FaceCertificate{std::get<Cortege>(std::move(validated)), chain});
}

bool witness_is_valid(const Polytope& p, const FaceDescriptor& s, const NotAFace& witness) {
  const auto& [w, z, through] = witness;
  if (w.dim() != p.ambient_dim() || z.dim() != p.ambient_dim() || through.dim() != p.ambient_dim()) return false;
  if (w == z || !p.contains(w) || !p.contains(z)) return false;

  // through = lambda * w + (1 - lambda) * z with 0 < lambda < 1.
  const Point span = w - z;
  std::size_t k = 0;
  while (sgn(span[k]) == 0) ++k;
  const Rational lambda = (through[k] - z[k]) / span[k];
  if (sgn(lambda) <= 0 || lambda >= 1 || lambda * w + (1 - lambda) * z != through) return false;

  const Polytope face = p.sub_polytope(s.vertex_indices);
  return face.contains(through) && !face.contains(w);
}

bool EquivalenceReport::consistent() const {
  if (is_face != certified) return false;
  if (is_face) return semispace.value_or(false) && preorder.value_or(false);
  return !semispace && !preorder && witness_valid;
}

namespace {

// Zero manifold / positive side split of P induced by u.
bool semispace_leg(const Polytope& p, const FaceDescriptor& s, const StepAffineFunction& u, Sampler& sampler) {
  const auto manifold = u.zero_set();
  if (!manifold) return false;
  const auto& in_face = s.vertex_indices;
  for (std::size_t v = 0; v < p.num_vertices(); ++v) {
    const bool member = std::binary_search(in_face.begin(), in_face.end(), v);
    const Region expected = member ? Region::ZeroManifold : Region::PositiveSide;
    if (u.classify(p.vertex(v)) != expected || manifold->contains(p.vertex(v)) != member) return false;
  }
  const auto face_points = p.points_of(in_face);
  const IndexSet all = p.all_indices();
  IndexSet outside;
  std::set_difference(all.begin(), all.end(), in_face.begin(), in_face.end(), std::back_inserter(outside));
  for (int k = 0; k < 10; ++k) {
    const Point inner = sampler.sparse_convex_combination(face_points);
    if (u.classify(inner) != Region::ZeroManifold) return false;
    auto mixed = face_points;
    mixed.push_back(p.vertex(outside[static_cast<std::size_t>(sampler.integer(0, static_cast<long>(outside.size()) - 1))]));
    if (u.classify(sampler.convex_combination(mixed)) != Region::PositiveSide) return false;
  }
  return true;
}

bool preorder_leg(const Polytope& p, const FaceDescriptor& s, const StepAffineFunction& u) {
  const auto decomposition = decompose_regular(u);
  const LexPreorder order(decomposition.linear.cortege().linear_parts());
  return min_set(p, order) == s;
}

}  // namespace

EquivalenceReport equivalence_report(const Polytope& p, const FaceDescriptor& s, std::uint64_t seed) {
  require_proper(p, s);
  EquivalenceReport report;
  report.is_face = p.is_face(s);

  const auto result = certify(p, s);
  if (const auto* witness = std::get_if<NotAFace>(&result)) {
    report.certified = false;
    report.witness_valid = witness_is_valid(p, s, *witness);
    return report;
  }
  const auto& rank_one = std::get<FaceCertificate>(result);
  report.certified = static_cast<bool>(verify_certificate(p, s, rank_one));

  std::vector<StepAffineFunction> functions{rank_one.function()};
  if (report.is_face) functions.push_back(chain_certificate(p, s).function());

  Sampler sampler(seed);
  bool semispace = true;
  bool preorder = true;
  for (const auto& u : functions) {
    semispace = semispace && semispace_leg(p, s, u, sampler);
    preorder = preorder && preorder_leg(p, s, u);
  }
  report.semispace = semispace;
  report.preorder = preorder;
  return report;
}

}  // namespace facelex
