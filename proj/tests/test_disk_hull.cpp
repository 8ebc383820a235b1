#include <gtest/gtest.h>

#include "facelex/disk_hull.hpp"
#include "facelex/fixtures.hpp"
#include "test_support.hpp"

using namespace facelex;
using namespace facelex::testing;
namespace df = facelex::diskface;

namespace {

std::vector<df::TangencyPoint> tangency_points(const DiskFaceList& list) {
  std::vector<df::TangencyPoint> out;
  for (const auto& f : list.faces)
    if (const auto* t = std::get_if<df::TangencyPoint>(&f)) out.push_back(*t);
  return out;
}

}  // namespace

TEST(QuadScalar, SignRule) {
  EXPECT_EQ(QuadScalar(1, -1, 2).sign(), -1);   // 1 - sqrt 2
  EXPECT_EQ(QuadScalar(-1, 1, 2).sign(), 1);
  EXPECT_EQ(QuadScalar(3, -1, 9).sign(), 0);
  EXPECT_EQ(QuadScalar(Q("3/2"), -1, 2).sign(), 1);  // 1.5 - 1.414
  EXPECT_EQ(QuadScalar(Q("7/5"), -1, 2).sign(), -1);
  EXPECT_EQ(QuadScalar(0, 0, 5).sign(), 0);
  EXPECT_TRUE(QuadScalar(1, 1, 2) * QuadScalar(1, -1, 2) == QuadScalar(-1));
  EXPECT_EQ(QuadScalar(2, 3, 4).as_rational(), std::optional<Rational>(8));
  EXPECT_FALSE(QuadScalar(2, 3, 5).as_rational());
  EXPECT_EQ(rational_sqrt(Q("9/16")), std::optional<Rational>(Q("3/4")));
  EXPECT_FALSE(rational_sqrt(2));
}

TEST(QuadScalar, AgreesWithFloatingPointAwayFromZero) {
  Sampler s(8);
  for (int k = 0; k < 500; ++k) {
    const QuadScalar q(s.rational(-5, 5, 7), s.rational(-5, 5, 7), s.rational(0, 9, 5));
    const double approx = q.rational_part().get_d() + q.surd_part().get_d() * std::sqrt(q.radicand().get_d());
    if (std::abs(approx) > 1e-9) EXPECT_EQ(q.sign(), approx > 0 ? 1 : -1);
  }
}

TEST(SupportMin, ConeExamples) {
  const auto cone = fixtures::cone();
  auto r = dh_support_min(cone, lin({1, 0}));
  EXPECT_TRUE(r.value == QuadScalar(-3));
  ASSERT_TRUE(std::holds_alternative<df::ArcPoint>(r.face));
  EXPECT_EQ(std::get<df::ArcPoint>(r.face).disk, 0u);
  EXPECT_EQ(face_point(cone, r.face), std::optional<Point>(Point{-3, 0}));

  r = dh_support_min(cone, lin({-1, 0}));
  EXPECT_TRUE(r.value == QuadScalar(-5));
  EXPECT_EQ(r.face, DiskFace(df::Apex{1}));

  r = dh_support_min(cone, lin({3, 4}));
  EXPECT_TRUE(r.value == QuadScalar(-15));
  ASSERT_TRUE(std::holds_alternative<df::ArcPoint>(r.face));
  EXPECT_EQ(face_point(cone, r.face), std::optional<Point>(Point{Q("-9/5"), Q("-12/5")}));

  EXPECT_THROW(dh_support_min(cone, lin({0, 0})), ZeroFunctional);
}

TEST(SupportMin, EdgeWhenTwoDisksTie) {
  const auto st = fixtures::stadium();
  const auto r = dh_support_min(st, lin({0, 1}));
  EXPECT_TRUE(r.value == QuadScalar(-1));
  ASSERT_TRUE(std::holds_alternative<df::Edge>(r.face));
  const auto irr = dh_support_min(st, lin({1, 1}));
  EXPECT_TRUE(irr.value == QuadScalar(0, -1, 2));
}

TEST(Contains, ConeExamples) {
  const auto cone = fixtures::cone();
  EXPECT_TRUE(dh_contains(cone, Point{0, 0}));
  EXPECT_TRUE(dh_contains(cone, Point{5, 0}));
  EXPECT_FALSE(dh_contains(cone, Point{6, 0}));
  EXPECT_TRUE(dh_contains(cone, Point{4, Q("1/2")}));
  EXPECT_FALSE(dh_contains(cone, Point{4, 1}));
  EXPECT_FALSE(dh_contains(cone, Point{-3, Q("1/100")}));
}

TEST(Faces, Cone) {
  const auto cone = fixtures::cone();
  const auto list = dh_faces(cone);
  EXPECT_EQ(hull_edges(cone).size(), 2u);
  std::vector<Point> tangency;
  for (const auto& t : tangency_points(list)) tangency.push_back(*face_point(cone, t));
  std::sort(tangency.begin(), tangency.end());
  EXPECT_EQ(tangency, (std::vector<Point>{Point{Q("9/5"), Q("-12/5")}, Point{Q("9/5"), Q("12/5")}}));
  EXPECT_EQ(std::count(list.faces.begin(), list.faces.end(), DiskFace(df::Apex{1})), 1);
  EXPECT_EQ(std::count(list.faces.begin(), list.faces.end(), DiskFace(df::Whole{})), 1);
  ASSERT_EQ(list.arcs.size(), 1u);
  EXPECT_EQ(list.arcs[0].disk, 0u);
  EXPECT_TRUE(list.arcs[0].bounds.has_value());
}

TEST(Faces, Stadium) {
  const auto st = fixtures::stadium();
  const auto edges = hull_edges(st);
  ASSERT_EQ(edges.size(), 2u);
  for (const auto& e : edges) {
    EXPECT_EQ(sgn(e.normal[0]), 0);
    EXPECT_EQ(e.end_i[1], e.end_j[1]);
    EXPECT_EQ(abs(e.end_i[1]), Rational(1));
  }
  std::vector<Point> tangency;
  for (const auto& t : tangency_points(dh_faces(st))) tangency.push_back(*face_point(st, t));
  std::sort(tangency.begin(), tangency.end());
  EXPECT_EQ(tangency, (std::vector<Point>{Point{0, -1}, Point{0, 1}, Point{4, -1}, Point{4, 1}}));
  EXPECT_EQ(dh_faces(st).arcs.size(), 2u);
}

TEST(Faces, SingleDisk) {
  const DiskBody one({Disk{Point{1, 1}, 2}});
  const auto list = dh_faces(one);
  EXPECT_EQ(list.faces, std::vector<DiskFace>{df::Whole{}});
  ASSERT_EQ(list.arcs.size(), 1u);
  EXPECT_FALSE(list.arcs[0].bounds.has_value());
}

TEST(Faces, IrrationalTangentIsUnsupported) {
  const DiskBody odd({Disk{Point{0, 0}, 1}, Disk{Point{3, 0}, 0}});
  EXPECT_THROW(hull_edges(odd), UnsupportedConfiguration);
}

TEST(Certify, ConeTangencyPoint) {
  const auto cone = fixtures::cone();
  for (const auto& t : tangency_points(dh_faces(cone))) {
    if (face_point(cone, t) != Point{Q("9/5"), Q("12/5")}) continue;
    const auto c = dh_certify(cone, t);
    ASSERT_EQ(c.size(), 2u);
    EXPECT_EQ(c[0].linear, lin({-3, -4}));
    EXPECT_EQ(c[0].offset, Rational(15));
    EXPECT_EQ(c[1].linear, lin({4, -3}));
    EXPECT_EQ(c[1].offset, Rational(0));
    EXPECT_EQ(StepAffineFunction(c).eval(Point{5, 0}), Rational(20));
    return;
  }
  FAIL() << "tangency point (9/5, 12/5) not found";
}

TEST(Certify, ConeApexAndStadiumTangency) {
  const auto cone = fixtures::cone();
  const auto apex = dh_certify(cone, df::Apex{1});
  ASSERT_EQ(apex.size(), 1u);
  EXPECT_EQ(apex[0].linear, lin({-1, 0}));
  EXPECT_EQ(apex[0].offset, Rational(5));

  const auto st = fixtures::stadium();
  for (const auto& t : tangency_points(dh_faces(st))) {
    if (face_point(st, t) != Point{0, 1}) continue;
    const auto c = dh_certify(st, t);
    ASSERT_EQ(c.size(), 2u);
    EXPECT_EQ(c[0].linear, lin({0, -1}));
    EXPECT_EQ(c[0].offset, Rational(1));
    EXPECT_EQ(c[1].linear, lin({1, 0}));
    EXPECT_EQ(c[1].offset, Rational(0));
    return;
  }
  FAIL() << "tangency point (0, 1) not found";
}

TEST(Certify, WholeBodyIsRejected) { EXPECT_THROW(dh_certify(fixtures::cone(), df::Whole{}), WholeBodyNotProper); }

TEST(Exposed, Examples) {
  const auto cone = fixtures::cone();
  for (const auto& t : tangency_points(dh_faces(cone))) EXPECT_FALSE(dh_is_exposed(cone, t));
  EXPECT_TRUE(dh_is_exposed(cone, df::Apex{1}));
  const auto st = fixtures::stadium();
  for (const auto& e : hull_edges(st)) EXPECT_TRUE(dh_is_exposed(st, df::Edge{e.ref}));
}

TEST(Certify, EveryFaceOnSampledPoints) {
  Sampler s(606);
  for (const auto& body : {fixtures::cone(), fixtures::stadium()}) {
    const auto pts = sample_body(body, s, 300);
    for (const auto& x : pts) EXPECT_TRUE(dh_contains(body, x));
    for (const auto& f : dh_faces(body).faces) {
      if (std::holds_alternative<df::Whole>(f)) continue;
      const StepAffineFunction u(dh_certify(body, f));
      for (const auto& x : pts) {
        const int sign = sgn(u.eval(x));
        EXPECT_GE(sign, 0);
        EXPECT_EQ(sign == 0, face_contains(body, f, x));
      }
    }
  }
}
