#pragma once

// JSON documents read and written by the command-line tool. Rationals are
// strings "p/q" (or "p") in lowest terms; objects serialize with sorted keys.

#include <json.hpp>

#include <string>
#include <vector>

#include "facelex/disk_hull.hpp"
#include "facelex/face_certify.hpp"
#include "facelex/lex_preorder.hpp"
#include "facelex/polytope.hpp"
#include "facelex/step_affine.hpp"

namespace facelex::json {

using Json = nlohmann::json;

Json rational(const Rational& q);
Rational rational(const Json& j);

Json point(const Point& p);
Point point(const Json& j);

Json functional(const LinearFunctional& l);
LinearFunctional functional(const Json& j);

Json affine(const AffineFunctional& f);
AffineFunctional affine(const Json& j);

/// {"functionals": [{"coeffs": [...], "offset": "..."}, ...]}
Json cortege(const Cortege& c);
/// Raw functional list; validate with validate_cortege.
std::vector<AffineFunctional> cortege_functionals(const Json& j);

/// {"ambient_dim": n, "vertices": [[...], ...]}
Json polytope(const Polytope& p);
Polytope polytope(const Json& j);

Json face(const FaceDescriptor& f);
FaceDescriptor face(const Json& j);

Json facet(const Facet& f);

/// {"chain": [[...], ...], "cortege": {...}}
Json certificate(const FaceCertificate& c);
std::vector<IndexSet> certificate_chain(const Json& j);

Json not_a_face(const NotAFace& w);

/// {"levels": [[...], ...]}
Json preorder(const LexPreorder& r);
LexPreorder preorder(const Json& j);

/// Legs "a" to "d" (null when skipped) plus "consistent" and "witness_valid".
Json report(const EquivalenceReport& r);

Json disk_body(const DiskBody& b);
DiskBody disk_body(const Json& j);

Json disk_face(const DiskFace& f);
DiskFace disk_face(const Json& j);

Json quad(const QuadScalar& q);

/// Parses text, converting library exceptions into ParseError.
Json parse(const std::string& text);

/// Canonical text form: two-space indent, sorted keys, trailing newline.
std::string dump(const Json& j);

}  // namespace facelex::json
