#include <gtest/gtest.h>

#include "facelex/exact.hpp"
#include "test_support.hpp"

using namespace facelex;
using namespace facelex::testing;

TEST(Rational, SerializesInLowestTerms) {
  EXPECT_EQ(to_string(make_rational(6, 4)), "3/2");
  EXPECT_EQ(to_string(make_rational(-4, 2)), "-2");
  EXPECT_EQ(to_string(make_rational(0, 5)), "0");
  EXPECT_EQ(to_string(parse_rational("10/4")), "5/2");
}

TEST(Rational, ParsesOnlyDecimalFreeForms) {
  EXPECT_EQ(parse_rational("-6/8"), make_rational(-3, 4));
  EXPECT_EQ(parse_rational("+7"), Rational(7));
  EXPECT_THROW(parse_rational("0.5"), ParseError);
  EXPECT_THROW(parse_rational("1e3"), ParseError);
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational(""), ParseError);
  EXPECT_THROW(parse_rational("1/"), ParseError);
  EXPECT_THROW(parse_rational("/2"), ParseError);
}

TEST(Rational, ArithmeticIsExact) {
  Sampler s(7);
  for (int k = 0; k < 500; ++k) {
    const Rational a = s.rational(-1000, 1000, 997);
    Rational b = s.rational(-1000, 1000, 991);
    if (sgn(b) == 0) b = 1;
    EXPECT_EQ(Rational((a + b) - b), a);
    EXPECT_EQ(Rational((a * b) / b), a);
  }
}

TEST(LinearIndependent, Examples) {
  const std::vector<LinearFunctional> basis{lin({1, 0}), lin({0, 1})};
  const std::vector<LinearFunctional> multiples{lin({1, 2}), lin({2, 4})};
  EXPECT_TRUE(linear_independent(basis));
  EXPECT_FALSE(linear_independent(multiples));
  EXPECT_TRUE(linear_independent(std::vector<LinearFunctional>{}));
}

TEST(LinearIndependent, RejectsMixedDimensions) {
  const std::vector<LinearFunctional> mixed{lin({1, 0}), lin({0, 1, 0})};
  EXPECT_THROW(linear_independent(mixed), DimensionMismatch);
}

TEST(SolveAffineZeroSet, OneEquationLine) {
  const std::vector<AffineFunctional> fs{aff({1, 1}, -1)};
  const auto m = solve_affine_zero_set(fs, 2);
  ASSERT_TRUE(m);
  EXPECT_EQ(m->base(), (Point{1, 0}));
  ASSERT_EQ(m->dim(), 1u);
  EXPECT_EQ(m->directions()[0], (Point{1, -1}));
}

TEST(SolveAffineZeroSet, ContradictorySystem) {
  const std::vector<AffineFunctional> fs{aff({1}, 0), aff({1}, -1)};
  EXPECT_FALSE(solve_affine_zero_set(fs, 1));
}

TEST(SolveAffineZeroSet, EmptySystemIsWholeSpace) {
  const auto m = solve_affine_zero_set({}, 2);
  ASSERT_TRUE(m);
  EXPECT_EQ(m->base(), (Point{0, 0}));
  EXPECT_EQ(m->dim(), 2u);
}

TEST(SolveAffineZeroSet, DimensionMismatch) {
  const std::vector<AffineFunctional> fs{aff({1, 1}, 0)};
  EXPECT_THROW(solve_affine_zero_set(fs, 3), DimensionMismatch);
}

TEST(SolveAffineZeroSet, SolutionsSatisfyEverySystem) {
  Sampler s(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t dim = static_cast<std::size_t>(s.integer(1, 4));
    const std::size_t count = static_cast<std::size_t>(s.integer(0, 4));
    std::vector<AffineFunctional> fs;
    for (std::size_t i = 0; i < count; ++i) {
      std::vector<Rational> c(dim);
      for (auto& x : c) x = s.integer(-2, 2);
      fs.push_back(AffineFunctional{LinearFunctional(std::move(c)), s.rational(-2, 2, 3)});
    }
    const auto m = solve_affine_zero_set(fs, dim);
    if (!m) continue;
    for (const auto& f : fs) {
      EXPECT_EQ(sgn(f(m->base())), 0);
      for (const auto& d : m->directions()) EXPECT_EQ(sgn(f.linear(d)), 0);
      std::vector<Rational> t(m->dim());
      for (auto& x : t) x = s.rational(-5, 5, 7);
      EXPECT_EQ(sgn(f(m->from_local(t))), 0);
    }
  }
}

TEST(AffineHull, Examples) {
  const std::vector<Point> single{Point{0, 0}};
  EXPECT_EQ(affine_hull(single).dim(), 0u);
  EXPECT_EQ(affine_hull(single).base(), (Point{0, 0}));

  const std::vector<Point> square{Point{0, 0}, Point{1, 0}, Point{0, 1}, Point{1, 1}};
  EXPECT_EQ(affine_hull(square).dim(), 2u);

  const std::vector<Point> segment{Point{0, 0}, Point{2, 2}};
  const auto line = affine_hull(segment);
  ASSERT_EQ(line.dim(), 1u);
  EXPECT_EQ(line.directions()[0], (Point{1, 1}));
  EXPECT_TRUE(line.contains(Point{-3, -3}));
  EXPECT_FALSE(line.contains(Point{1, 0}));
}

TEST(AffineHull, RejectsEmptyInput) { EXPECT_THROW(affine_hull(std::vector<Point>{}), Error); }

TEST(AffineHull, IdempotentOnSampledPoints) {
  Sampler s(5);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t dim = static_cast<std::size_t>(s.integer(1, 4));
    std::vector<Point> pts;
    const long n = s.integer(1, 5);
    for (long i = 0; i < n; ++i) pts.push_back(s.point(dim, -3, 3, 2));
    const auto m = affine_hull(pts);
    std::vector<Point> samples;
    for (std::size_t k = 0; k <= m.dim(); ++k) {
      std::vector<Rational> t(m.dim());
      for (auto& x : t) x = s.rational(-4, 4, 5);
      samples.push_back(m.from_local(t));
    }
    samples.push_back(m.base());
    const auto again = affine_hull(samples);
    EXPECT_LE(again.dim(), m.dim());
    EXPECT_TRUE(again.contains(m.base()));
    for (const auto& p : pts) EXPECT_TRUE(m.contains(p));
  }
}

TEST(AffineFunctional, IntegralNormalization) {
  const auto f = normalize_integral(aff({Q("1/2"), Q("-3/4")}, Q("3/2")));
  EXPECT_EQ(f.linear, lin({2, -3}));
  EXPECT_EQ(f.offset, Rational(6));
  EXPECT_EQ(primitive_integral(Point{6, -4, 0}), (Point{3, -2, 0}));
}
