#include "facelex/exact.hpp"

#include <algorithm>
#include <cctype>

namespace facelex {

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char ch) { return std::isdigit(ch); });
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den))) {
    throw ParseError("not a rational: \"" + std::string(text) + "\"");
  }
  if (slash != std::string_view::npos && std::all_of(den.begin(), den.end(), [](char c) { return c == '0'; })) {
    throw ParseError("zero denominator: \"" + std::string(text) + "\"");
  }
  std::string canonical(text.front() == '+' ? text.substr(1) : text);
  Rational q(canonical, 10);
  q.canonicalize();
  return q;
}

Rational make_rational(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

bool Point::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return sgn(c) == 0; });
}

Point& Point::operator+=(const Point& other) {
  if (other.dim() != dim()) throw DimensionMismatch("point addition");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

Point& Point::operator-=(const Point& other) {
  if (other.dim() != dim()) throw DimensionMismatch("point subtraction");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

Point& Point::operator*=(const Rational& s) {
  for (auto& c : coords_) c *= s;
  return *this;
}

Point midpoint(const Point& a, const Point& b) { return Rational(1, 2) * (a + b); }

Point barycenter(std::span<const Point> points) {
  if (points.empty()) throw Error("barycenter of an empty set");
  Point sum(points.front().dim());
  for (const auto& p : points) sum += p;
  return Rational(1, static_cast<long>(points.size())) * sum;
}

bool LinearFunctional::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return sgn(c) == 0; });
}

Rational LinearFunctional::operator()(const Point& x) const {
  if (x.dim() != dim()) {
    throw DimensionMismatch("functional of dimension " + std::to_string(dim()) +
                            " applied to point of dimension " + std::to_string(x.dim()));
  }
  Rational acc = 0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) acc += coeffs_[i] * x[i];
  return acc;
}

LinearFunctional operator+(const LinearFunctional& a, const LinearFunctional& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("functional addition");
  std::vector<Rational> c(a.dim());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] + b[i];
  return LinearFunctional(std::move(c));
}

LinearFunctional operator*(const Rational& s, const LinearFunctional& a) {
  std::vector<Rational> c(a.coeffs());
  for (auto& v : c) v *= s;
  return LinearFunctional(std::move(c));
}

LinearFunctional LinearFunctional::operator-() const { return Rational(-1) * *this; }

namespace {

// Positive factor turning every entry into a coprime integer.
Rational integral_scale(const std::vector<const Rational*>& entries) {
  mpz_class lcm_den = 1;
  for (const auto* q : entries) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), q->get_den_mpz_t());
  mpz_class g = 0;
  for (const auto* q : entries) {
    mpz_class num = q->get_num() * (lcm_den / q->get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
  }
  if (g == 0) return 1;
  Rational s(lcm_den, g);
  s.canonicalize();
  return s;
}

}  // namespace

AffineFunctional normalize_integral(const AffineFunctional& f) {
  std::vector<const Rational*> entries;
  for (const auto& c : f.linear.coeffs()) entries.push_back(&c);
  entries.push_back(&f.offset);
  const Rational s = integral_scale(entries);
  return AffineFunctional{s * f.linear, s * f.offset};
}

Point primitive_integral(const Point& v) {
  std::vector<const Rational*> entries;
  for (const auto& c : v.coords()) entries.push_back(&c);
  return integral_scale(entries) * v;
}

std::vector<std::size_t> rref(Matrix& m, std::size_t ncols_to_reduce) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols_to_reduce && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && sgn(m[sel][col]) == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    const Rational inv = 1 / m[row][col];
    for (auto& v : m[row]) v *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || sgn(m[r][col]) == 0) continue;
      const Rational factor = m[r][col];
      for (std::size_t c = col; c < m[r].size(); ++c) m[r][c] -= factor * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(Matrix m) {
  if (m.empty()) return 0;
  const std::size_t cols = m.front().size();
  return rref(m, cols).size();
}

std::vector<Point> null_space(const Matrix& m, std::size_t ncols) {
  Matrix r = m;
  const auto pivots = rref(r, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Point> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    Point v(ncols);
    v[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r[k][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

bool linear_independent(std::span<const LinearFunctional> funcs) {
  if (funcs.empty()) return true;
  require_dim(funcs, funcs.front().dim(), "linear_independent");
  Matrix m;
  for (const auto& f : funcs) m.push_back(f.coeffs());
  return rank(std::move(m)) == funcs.size();
}

AffineManifold::AffineManifold(Point base, std::vector<Point> spanning) : base_(std::move(base)) {
  require_dim(spanning, base_.dim(), "affine manifold direction");
  Matrix m;
  for (const auto& d : spanning) m.push_back(d.coords());
  pivots_ = rref(m, base_.dim());
  for (std::size_t k = 0; k < pivots_.size(); ++k) directions_.push_back(primitive_integral(Point(m[k])));
}

std::vector<Rational> AffineManifold::local_coords(const Point& x) const {
  std::vector<Rational> t(directions_.size());
  for (std::size_t k = 0; k < directions_.size(); ++k) {
    t[k] = (x[pivots_[k]] - base_[pivots_[k]]) / directions_[k][pivots_[k]];
  }
  return t;
}

Point AffineManifold::from_local(std::span<const Rational> t) const {
  if (t.size() != directions_.size()) throw DimensionMismatch("manifold local coordinates");
  Point x = base_;
  for (std::size_t k = 0; k < t.size(); ++k) x += t[k] * directions_[k];
  return x;
}

bool AffineManifold::contains(const Point& x) const {
  if (x.dim() != ambient_dim()) throw DimensionMismatch("manifold membership");
  return from_local(local_coords(x)) == x;
}

bool AffineManifold::same_as(const AffineManifold& other) const {
  return other.ambient_dim() == ambient_dim() && other.directions_ == directions_ && contains(other.base_);
}

std::optional<AffineManifold> solve_affine_zero_set(std::span<const AffineFunctional> funcs,
                                                    std::size_t dim) {
  require_dim(funcs, dim, "solve_affine_zero_set");
  // Augmented rows [l | -alpha] for l(x) = -alpha.
  Matrix m;
  for (const auto& f : funcs) {
    auto row = f.linear.coeffs();
    row.push_back(-f.offset);
    m.push_back(std::move(row));
  }
  const auto pivots = rref(m, dim);
  for (std::size_t r = pivots.size(); r < m.size(); ++r) {
    if (sgn(m[r][dim]) != 0) return std::nullopt;
  }
  Point base(dim);
  for (std::size_t k = 0; k < pivots.size(); ++k) base[pivots[k]] = m[k][dim];
  Matrix coeffs;
  for (std::size_t k = 0; k < pivots.size(); ++k) coeffs.emplace_back(m[k].begin(), m[k].begin() + dim);
  return AffineManifold(std::move(base), null_space(coeffs, dim));
}

AffineManifold affine_hull(std::span<const Point> points) {
  if (points.empty()) throw Error("affine_hull of an empty set");
  require_dim(points, points.front().dim(), "affine_hull");
  std::vector<Point> diffs;
  for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(points[i] - points.front());
  return AffineManifold(points.front(), std::move(diffs));
}

}  // namespace facelex
