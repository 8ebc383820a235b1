#pragma once

// Step-affine certificates for faces of polytopes.
//
// A certificate for a proper face F of P is a cortege f_1, ..., f_m together
// with the chain P = F_0 >= F_1 >= ... >= F_m = F, where F_i is the set of
// points of F_{i-1} on which f_i vanishes and f_i >= 0 on F_{i-1}. The
// induced step-affine function u is then nonnegative on P and vanishes
// exactly on F.

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "facelex/polytope.hpp"
#include "facelex/sampling.hpp"
#include "facelex/step_affine.hpp"

namespace facelex {

class ImproperFace : public Error {
 public:
  using Error::Error;
};

class EmptyFace : public InvalidFace {
 public:
  using InvalidFace::InvalidFace;
};

class NotAFaceError : public Error {
 public:
  using Error::Error;
};

struct FaceCertificate {
  Cortege cortege;
  std::vector<IndexSet> chain;  // chain[0] = all vertices, chain.back() = the face

  std::size_t rank() const { return cortege.size(); }
  StepAffineFunction function() const { return StepAffineFunction(cortege); }
};

/// Literal violation of the face property: w, z in P, `through` lies in the
/// open segment (w, z) and in conv(S), while w is not in conv(S).
struct NotAFace {
  Point w;
  Point z;
  Point through;
};

using CertifyResult = std::variant<FaceCertificate, NotAFace>;

/// Rank-1 certificate (sum of the slacks of the facets tight at the
/// barycenter of S), or a witness when conv(S) is not a face.
/// Throws EmptyFace, InvalidFace (bad indices) or ImproperFace (S = P).
CertifyResult certify(const Polytope& p, const FaceDescriptor& s);

/// Nested certificate using one tight facet per step. Throws NotAFaceError
/// when conv(S) is not a face, plus the errors of `certify`.
FaceCertificate chain_certificate(const Polytope& p, const FaceDescriptor& s);

struct Verdict {
  bool accepted = true;
  int condition = 0;  // first failing check: 1 cortege, 2 levels, 3 chain shape, 4 final face
  std::string detail;

  explicit operator bool() const { return accepted; }
  static Verdict accept() { return {}; }
  static Verdict reject(int condition, std::string detail) { return {false, condition, std::move(detail)}; }
};

Verdict verify_certificate(const Polytope& p, const FaceDescriptor& s, const FaceCertificate& cert);

/// Same checks for an unvalidated functional list (for instance one parsed
/// from a file); an invalid cortege is rejected with condition 1.
Verdict verify_certificate(const Polytope& p, const FaceDescriptor& s,
                           const std::vector<AffineFunctional>& functionals, const std::vector<IndexSet>& chain);

/// Exact check of the invariants of a NotAFace witness.
bool witness_is_valid(const Polytope& p, const FaceDescriptor& s, const NotAFace& witness);

/// The four characterizations of a proper face, evaluated independently.
struct EquivalenceReport {
  bool is_face = false;         // (a) face test on the polytope
  std::optional<bool> semispace;  // (b) zero manifold / positive side split; skipped for non-faces
  std::optional<bool> preorder;   // (c) Min(P | preorder) == S; skipped for non-faces
  bool certified = false;       // (d) verified step-affine certificate exists
  bool witness_valid = false;   // non-faces only: the NotAFace witness checks out

  bool consistent() const;
};

EquivalenceReport equivalence_report(const Polytope& p, const FaceDescriptor& s,
                                     std::uint64_t seed = Sampler::kDefaultSeed);

}  // namespace facelex
