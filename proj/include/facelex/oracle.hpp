#pragma once

// Brute-force reference computations. They deliberately take different
// routes from the main algorithms and are used to cross-check them.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "facelex/polytope.hpp"
#include "facelex/sampling.hpp"

namespace facelex {

class OracleSizeGuard : public Error {
 public:
  using Error::Error;
};

inline constexpr std::size_t kOracleMaxVertices = 16;
inline constexpr std::size_t kOracleMaxDim = 4;

/// All nonempty faces as the fixpoint of repeated exposure: every known face
/// G contributes the vertex argmin sets of sums of its facet normals.
/// Throws OracleSizeGuard above kOracleMaxVertices / kOracleMaxDim.
std::vector<FaceDescriptor> oracle_faces(const Polytope& p);

/// Vertices whose value tuple (l_1(v), ..., l_m(v)) is lexicographically least.
FaceDescriptor oracle_lex_argmin(const Polytope& p, std::span<const LinearFunctional> levels);

struct RefutationPair {
  Point u;
  Point v;
  Rational alpha;  // alpha*u + (1-alpha)*v lies in conv(S)
};

/// Randomized search for u, v in P with a point of the open segment in
/// conv(S) but u or v outside conv(S). Never refutes an actual face.
std::optional<RefutationPair> oracle_refute_face(const Polytope& p, const FaceDescriptor& s, int trials,
                                                 std::uint64_t seed = Sampler::kDefaultSeed);

}  // namespace facelex
