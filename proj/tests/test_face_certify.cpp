#include <gtest/gtest.h>

#include <algorithm>

#include "facelex/batch.hpp"
#include "facelex/face_certify.hpp"
#include "facelex/fixtures.hpp"
#include "test_support.hpp"

using namespace facelex;
using namespace facelex::testing;

namespace {

FaceCertificate as_certificate(const CertifyResult& r) {
  EXPECT_TRUE(std::holds_alternative<FaceCertificate>(r));
  return std::get<FaceCertificate>(r);
}

}  // namespace

TEST(Certify, SquareVertex) {
  const auto sq = fixtures::square();
  const auto c = as_certificate(certify(sq, face({0})));
  ASSERT_EQ(c.rank(), 1u);
  EXPECT_EQ(c.cortege[0].linear, lin({1, 1}));
  EXPECT_EQ(c.cortege[0].offset, Rational(0));
  EXPECT_EQ(c.chain, (std::vector<IndexSet>{{0, 1, 2, 3}, {0}}));
  const auto u = c.function();
  EXPECT_EQ(u.eval(Point{0, 0}), Rational(0));
  for (std::size_t i = 1; i < 4; ++i) EXPECT_GT(sgn(u.eval(sq.vertex(i))), 0);
}

TEST(Certify, SquareEdge) {
  const auto c = as_certificate(certify(fixtures::square(), face({0, 1})));
  ASSERT_EQ(c.rank(), 1u);
  EXPECT_EQ(c.cortege[0].linear, lin({0, 1}));
  EXPECT_EQ(c.cortege[0].offset, Rational(0));
}

TEST(Certify, DiagonalIsNotAFace) {
  const auto sq = fixtures::square();
  const auto r = certify(sq, face({0, 2}));
  ASSERT_TRUE(std::holds_alternative<NotAFace>(r));
  const auto& w = std::get<NotAFace>(r);
  EXPECT_TRUE(w.w == sq.vertex(1) || w.w == sq.vertex(3));
  EXPECT_TRUE(witness_is_valid(sq, face({0, 2}), w));
}

TEST(Certify, Errors) {
  const auto sq = fixtures::square();
  EXPECT_THROW(certify(sq, face({0, 1, 2, 3})), ImproperFace);
  EXPECT_THROW(certify(sq, face({})), EmptyFace);
  EXPECT_THROW(certify(sq, face({7})), InvalidFace);
  EXPECT_THROW(chain_certificate(sq, face({0, 2})), NotAFaceError);
  EXPECT_THROW(chain_certificate(sq, face({0, 1, 2, 3})), ImproperFace);
}

TEST(ChainCertificate, SquareVertex) {
  const auto c = chain_certificate(fixtures::square(), face({0}));
  ASSERT_EQ(c.rank(), 2u);
  // facets in ascending functional order: -x <= 0 comes before -y <= 0
  EXPECT_EQ(c.cortege[0].linear, lin({1, 0}));
  EXPECT_EQ(c.cortege[1].linear, lin({0, 1}));
  EXPECT_EQ(c.chain, (std::vector<IndexSet>{{0, 1, 2, 3}, {0, 3}, {0}}));
}

TEST(ChainCertificate, CubeVertexAndSquareEdge) {
  const auto cube = fixtures::cube(3);
  const auto c = chain_certificate(cube, face({0}));
  ASSERT_EQ(c.rank(), 3u);
  ASSERT_EQ(c.chain.size(), 4u);
  EXPECT_EQ(c.chain[1].size(), 4u);
  EXPECT_EQ(c.chain[2].size(), 2u);
  EXPECT_EQ(c.chain[3], IndexSet{0});

  const auto e = chain_certificate(fixtures::square(), face({0, 1}));
  EXPECT_EQ(e.rank(), 1u);
  EXPECT_EQ(e.chain, (std::vector<IndexSet>{{0, 1, 2, 3}, {0, 1}}));
}

TEST(ChainCertificate, OctahedronVertexSkipsDependentFacets) {
  // four facets meet at each vertex of the octahedron, but the chain needs three
  const auto p = fixtures::octahedron();
  for (std::size_t v = 0; v < p.num_vertices(); ++v) {
    const auto c = chain_certificate(p, face({v}));
    EXPECT_LE(c.rank(), 3u);
    EXPECT_TRUE(verify_certificate(p, face({v}), c));
  }
}

TEST(Verify, Examples) {
  const auto sq = fixtures::square();
  const auto good = as_certificate(certify(sq, face({0})));
  EXPECT_TRUE(verify_certificate(sq, face({0}), good));

  const FaceCertificate bad{Cortege({aff({1, -1}, 0)}), {{0, 1, 2, 3}, {0}}};
  const auto v2 = verify_certificate(sq, face({0}), bad);
  EXPECT_FALSE(v2);
  EXPECT_EQ(v2.condition, 2);

  const FaceCertificate no_root{good.cortege, {{0}}};
  const auto v3 = verify_certificate(sq, face({0}), no_root);
  EXPECT_FALSE(v3);
  EXPECT_EQ(v3.condition, 3);

  const auto v4 = verify_certificate(sq, face({1}), good);
  EXPECT_FALSE(v4);
  EXPECT_EQ(v4.condition, 4);
}

TEST(Verify, RawInput) {
  const auto sq = fixtures::square();
  const std::vector<AffineFunctional> dependent{aff({1, 0}, 0), aff({2, 0}, 0)};
  const auto v1 = verify_certificate(sq, face({0}), dependent, {{0, 1, 2, 3}, {0, 3}, {0}});
  EXPECT_FALSE(v1);
  EXPECT_EQ(v1.condition, 1);

  const std::vector<AffineFunctional> fine{aff({1, 0}, 0), aff({0, 1}, 0)};
  EXPECT_TRUE(verify_certificate(sq, face({0}), fine, {{0, 1, 2, 3}, {0, 3}, {0}}));
  // zero set of f_1 on the chain must be exactly chain[1]
  const auto vz = verify_certificate(sq, face({0}), fine, {{0, 1, 2, 3}, {0}, {0}});
  EXPECT_FALSE(vz);
  EXPECT_EQ(vz.condition, 2);
}

TEST(Certificates, EveryProperFaceOfEveryFixture) {
  for (const auto& [name, p] : fixtures::polytope_suite()) {
    SCOPED_TRACE(name);
    for (const auto& f : proper_faces(p)) {
      const auto one = as_certificate(certify(p, f));
      EXPECT_EQ(one.rank(), 1u);
      EXPECT_TRUE(verify_certificate(p, f, one));

      const auto ch = chain_certificate(p, f);
      EXPECT_TRUE(verify_certificate(p, f, ch));
      const std::size_t fdim = affine_hull(p.points_of(f.vertex_indices)).dim();
      EXPECT_GE(ch.rank(), 1u);
      EXPECT_LE(ch.rank(), p.intrinsic_dim() - fdim);
      EXPECT_TRUE(linear_independent(ch.cortege.linear_parts()));
      EXPECT_TRUE(linear_independent(one.cortege.linear_parts()));
      EXPECT_EQ(ch.chain.back(), f.vertex_indices);
      EXPECT_EQ(one.chain.back(), f.vertex_indices);

      // each step is the argmin of its level over the previous chain element
      for (std::size_t i = 1; i < ch.chain.size(); ++i) {
        const auto& fi = ch.cortege[i - 1];
        std::optional<Rational> best;
        for (auto v : ch.chain[i - 1]) {
          const Rational val = fi(p.vertex(v));
          if (!best || val < *best) best = val;
        }
        EXPECT_EQ(*best, Rational(0));
        IndexSet argmin;
        for (auto v : ch.chain[i - 1])
          if (fi(p.vertex(v)) == *best) argmin.push_back(v);
        EXPECT_EQ(argmin, ch.chain[i]);
        EXPECT_TRUE(std::includes(ch.chain[i - 1].begin(), ch.chain[i - 1].end(), ch.chain[i].begin(), ch.chain[i].end()));
      }
    }
  }
}

TEST(Certificates, NonNegativeOnSampledPoints) {
  Sampler s(404);
  for (const auto& [name, p] : fixtures::polytope_suite()) {
    SCOPED_TRACE(name);
    for (const auto& f : proper_faces(p)) {
      const auto u = chain_certificate(p, f).function();
      const Polytope sub = p.sub_polytope(f.vertex_indices);
      for (int k = 0; k < 20; ++k) {
        const Point x = s.in_polytope(p);
        const int sign = sgn(u.eval(x));
        EXPECT_GE(sign, 0);
        EXPECT_EQ(sign == 0, sub.contains(x));
      }
    }
  }
}

TEST(Witness, ValidForEveryNonFaceSubset) {
  for (const auto& [name, p] : fixtures::polytope_suite()) {
    if (p.num_vertices() > 8) continue;
    SCOPED_TRACE(name);
    const std::size_t n = p.num_vertices();
    for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << n); ++mask) {
      FaceDescriptor s;
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1) s.vertex_indices.push_back(i);
      const auto r = certify(p, s);
      EXPECT_EQ(std::holds_alternative<FaceCertificate>(r), p.is_face(s));
      if (const auto* w = std::get_if<NotAFace>(&r)) EXPECT_TRUE(witness_is_valid(p, s, *w));
    }
  }
}

TEST(Witness, RejectsTamperedWitness) {
  const auto sq = fixtures::square();
  auto w = std::get<NotAFace>(certify(sq, face({0, 2})));
  EXPECT_TRUE(witness_is_valid(sq, face({0, 2}), w));
  auto outside = w;
  outside.z = Point{2, 2};
  EXPECT_FALSE(witness_is_valid(sq, face({0, 2}), outside));
  auto inside = w;
  inside.w = sq.vertex(0);
  EXPECT_FALSE(witness_is_valid(sq, face({0, 2}), inside));
}

TEST(Equivalence, Examples) {
  const auto sq = fixtures::square();
  const auto good = equivalence_report(sq, face({0}));
  EXPECT_TRUE(good.is_face);
  EXPECT_EQ(good.semispace, std::optional<bool>(true));
  EXPECT_EQ(good.preorder, std::optional<bool>(true));
  EXPECT_TRUE(good.certified);
  EXPECT_TRUE(good.consistent());

  const auto bad = equivalence_report(sq, face({0, 2}));
  EXPECT_FALSE(bad.is_face);
  EXPECT_FALSE(bad.certified);
  EXPECT_FALSE(bad.semispace.has_value());
  EXPECT_FALSE(bad.preorder.has_value());
  EXPECT_TRUE(bad.witness_valid);
  EXPECT_TRUE(bad.consistent());

  EXPECT_THROW(equivalence_report(sq, face({0, 1, 2, 3})), ImproperFace);
}

TEST(Equivalence, SimplexAllProperFaces) {
  const auto p = fixtures::simplex(3);
  const auto faces = proper_faces(p);
  EXPECT_EQ(faces.size(), 14u);
  for (const auto& f : faces) {
    const auto r = equivalence_report(p, f);
    EXPECT_TRUE(r.is_face && r.semispace.value_or(false) && r.preorder.value_or(false) && r.certified);
    EXPECT_TRUE(r.consistent());
  }
}
