// Copyright 2026 The wignerlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "wignerlab/geometry.hpp"

#include <cmath>
#include <sstream>

#include "wignerlab/errors.hpp"

namespace wignerlab {

AffineFunctional AffineFunctional::constant_function(std::size_t dim, Rational c) {
  return {zeros(dim), std::move(c)};
}

AffineFunctional AffineFunctional::coordinate(std::size_t dim, std::size_t i) {
  return {unit_vector(dim, i), 0};
}

Rational AffineFunctional::operator()(const Vector& x) const { return dot(linear, x) + constant; }

AffineFunctional operator+(const AffineFunctional& f, const AffineFunctional& g) {
  return {f.linear + g.linear, f.constant + g.constant};
}

AffineFunctional operator-(const AffineFunctional& f, const AffineFunctional& g) {
  return {f.linear - g.linear, f.constant - g.constant};
}

AffineFunctional operator*(const Rational& s, const AffineFunctional& f) {
  return {s * f.linear, s * f.constant};
}

AffineMap AffineMap::identity(std::size_t dim) { return {Matrix::identity(dim), zeros(dim)}; }

Vector AffineMap::operator()(const Vector& x) const { return matrix * x + offset; }

AffineMap compose(const AffineMap& outer, const AffineMap& inner) {
  return {outer.matrix * inner.matrix, outer.matrix * inner.offset + outer.offset};
}

AffineFunctional compose(const AffineFunctional& f, const AffineMap& map) {
  return {map.matrix.transpose() * f.linear, dot(f.linear, map.offset) + f.constant};
}

// ---------------------------------------------------------------------------
// State spaces

LinearProgram hull_membership_program(const std::vector<Vector>& points, const Vector& x) {
  LinearProgram lp;
  lp.variables = points.size();
  for (std::size_t c = 0; c < x.size(); ++c) {
    Vector row(points.size());
    for (std::size_t v = 0; v < points.size(); ++v) row[v] = points[v].at(c);
    lp.add_equality(std::move(row), x[c]);
  }
  lp.add_equality(Vector(points.size(), Rational(1)), 1);
  for (std::size_t v = 0; v < points.size(); ++v) lp.add_inequality(unit_vector(points.size(), v), 0);
  return lp;
}

namespace {

bool in_hull(const std::vector<Vector>& points, const Vector& x) {
  if (points.empty()) return false;
  return lp_feasible(hull_membership_program(points, x)).feasible();
}

}  // namespace

StateSpace StateSpace::polytope(std::vector<Vector> vertices) {
  if (vertices.empty()) throw PreconditionError("polytope needs at least one vertex");
  const std::size_t dim = vertices.front().size();
  for (const auto& v : vertices)
    if (v.size() != dim) throw PreconditionError("polytope vertices have differing lengths");
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    std::vector<Vector> others;
    for (std::size_t j = 0; j < vertices.size(); ++j) {
      if (j == i) continue;
      if (vertices[j] == vertices[i])
        throw PreconditionError("polytope vertex " + std::to_string(i) + " is listed twice");
      others.push_back(vertices[j]);
    }
    if (in_hull(others, vertices[i]))
      throw PreconditionError("polytope point " + std::to_string(i) + " is not extreme");
  }
  return StateSpace(Polytope{std::move(vertices)}, dim);
}

StateSpace StateSpace::ball(Vector center, Rational radius) {
  if (radius <= 0) throw PreconditionError("ball radius must be positive");
  const std::size_t dim = center.size();
  return StateSpace(Ball{std::move(center), std::move(radius)}, dim);
}

std::size_t dimension(const StateSpace& k) {
  if (k.is_ball()) return k.ambient_dimension();
  const auto& vs = k.vertices();
  std::vector<Vector> diffs;
  for (std::size_t i = 1; i < vs.size(); ++i) diffs.push_back(vs[i] - vs[0]);
  return rank(Matrix::from_rows(diffs, k.ambient_dimension()));
}

bool contains(const StateSpace& k, const Vector& x) {
  if (x.size() != k.ambient_dimension()) throw PreconditionError("contains: dimension mismatch");
  if (k.is_ball()) {
    const Ball& b = k.as_ball();
    Vector d = x - b.center;
    return dot(d, d) <= b.radius * b.radius;
  }
  return in_hull(k.vertices(), x);
}

// ---------------------------------------------------------------------------
// Extremal values

namespace {

// Splits n >= 0 as square^2 * rest, stripping square factors below 10^5 and
// recognising a perfect-square remainder.
void split_square(mpz_class n, mpz_class& square, mpz_class& rest) {
  square = 1;
  if (n == 0) {
    rest = 0;
    return;
  }
  for (unsigned long d = 2; d < 100000; ++d) {
    mpz_class dd = d * d;
    if (dd > n) break;
    while (n % dd == 0) {
      n /= dd;
      square *= d;
    }
  }
  if (mpz_perfect_square_p(n.get_mpz_t()) != 0) {
    mpz_class r = sqrt(n);
    square *= r;
    n = 1;
  }
  rest = n;
}

int sign(const Rational& q) { return sgn(q); }

}  // namespace

ExtremalValue::ExtremalValue(Rational rational_part, Rational radical_part, Rational radicand)
    : rational_(std::move(rational_part)) {
  if (radicand < 0) throw PreconditionError("negative radicand");
  if (radical_part == 0 || radicand == 0) return;
  // sqrt(p/q) = sqrt(p*q) / q
  mpz_class pq = radicand.get_num() * radicand.get_den();
  mpz_class square, rest;
  split_square(pq, square, rest);
  Rational scale(square, radicand.get_den());
  scale.canonicalize();
  Rational coefficient = radical_part * scale;
  if (rest == 1) {
    rational_ += coefficient;
    return;
  }
  radical_ = coefficient;
  radicand_ = Rational(rest);
}

int ExtremalValue::compare(const Rational& t) const {
  Rational d = rational_ - t;
  if (radical_ == 0) return sign(d);
  int sd = sign(d);
  int sb = sign(radical_);
  if (sd == 0) return sb;
  if (sd == sb) return sd;
  Rational lhs = d * d;
  Rational rhs = radical_ * radical_ * radicand_;
  if (lhs > rhs) return sd;
  if (lhs < rhs) return sb;
  return 0;
}

double ExtremalValue::to_double() const {
  return rational_.get_d() + radical_.get_d() * std::sqrt(radicand_.get_d());
}

std::string ExtremalValue::to_string() const {
  std::ostringstream out;
  if (radical_ == 0) return wignerlab::to_string(rational_);
  if (rational_ != 0) out << wignerlab::to_string(rational_) << (radical_ < 0 ? " - " : " + ");
  else if (radical_ < 0) out << "-";
  Rational mag = abs(radical_);
  if (mag != 1) out << wignerlab::to_string(mag) << "*";
  out << "sqrt(" << wignerlab::to_string(radicand_) << ")";
  return out.str();
}

ExtremalRange extremal_range(const StateSpace& k, const AffineFunctional& f) {
  if (f.dimension() != k.ambient_dimension())
    throw PreconditionError("extremal_range: dimension mismatch");
  if (k.is_ball()) {
    const Ball& b = k.as_ball();
    Rational at_center = f(b.center);
    Rational norm2 = dot(f.linear, f.linear);
    return {ExtremalValue(at_center, -b.radius, norm2), ExtremalValue(at_center, b.radius, norm2)};
  }
  const auto& vs = k.vertices();
  Rational lo = f(vs[0]), hi = lo;
  for (std::size_t i = 1; i < vs.size(); ++i) {
    Rational v = f(vs[i]);
    if (v < lo) lo = v;
    if (v > hi) hi = v;
  }
  return {ExtremalValue(lo), ExtremalValue(hi)};
}

namespace {

Extremizer extremizer(const StateSpace& k, const AffineFunctional& f, int direction) {
  Extremizer out;
  if (k.is_ball()) {
    out.ball_direction = Rational(direction) * f.linear;
    return out;
  }
  const auto& vs = k.vertices();
  std::size_t best = 0;
  Rational best_value = f(vs[0]);
  for (std::size_t i = 1; i < vs.size(); ++i) {
    Rational v = f(vs[i]);
    if (direction * sign(v - best_value) > 0) {
      best = i;
      best_value = v;
    }
  }
  out.vertex = best;
  return out;
}

}  // namespace

Extremizer minimizer(const StateSpace& k, const AffineFunctional& f) { return extremizer(k, f, -1); }
Extremizer maximizer(const StateSpace& k, const AffineFunctional& f) { return extremizer(k, f, 1); }

// ---------------------------------------------------------------------------
// Image containment

namespace {

using DVec = std::vector<double>;

DVec to_doubles(const Vector& v) {
  DVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].get_d();
  return out;
}

// Rational approximation of u scaled so that |u| <= 1 holds exactly.
Vector into_unit_ball(const DVec& u) {
  Vector q(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) q[i] = from_double(u[i]);
  Rational norm2 = dot(q, q);
  if (norm2 <= 1) return q;
  Rational bound = from_double(std::sqrt(norm2.get_d()));
  const Rational bump(1 + std::ldexp(1.0, -40));
  while (bound * bound < norm2) bound *= bump;
  return Rational(1) / bound * q;
}

DVec apply_double(const Matrix& a, const DVec& x) {
  DVec out(a.rows(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j).get_d() * x[j];
  return out;
}

double norm(const DVec& x) {
  double s = 0;
  for (double v : x) s += v * v;
  return std::sqrt(s);
}

// Numerically maximises |A u + d| over the unit sphere by the fixed-point
// ascent u <- grad / |grad| from several starts; returns the best u.
DVec sphere_maximizer(const Matrix& a, const Vector& d_exact) {
  const std::size_t n = a.cols();
  const DVec d = to_doubles(d_exact);
  const Matrix at = a.transpose();
  std::vector<DVec> starts;
  for (std::size_t i = 0; i < n; ++i) {
    DVec e(n, 0.0);
    e[i] = 1;
    starts.push_back(e);
    e[i] = -1;
    starts.push_back(e);
  }
  DVec atd = apply_double(at, d);
  if (norm(atd) > 0) starts.push_back(atd);

  DVec best;
  double best_value = -1;
  for (DVec u : starts) {
    double nu = norm(u);
    for (double& x : u) x /= nu;
    for (int iter = 0; iter < 2000; ++iter) {
      DVec au = apply_double(a, u);
      for (std::size_t i = 0; i < au.size(); ++i) au[i] += d[i];
      DVec grad = apply_double(at, au);
      double ng = norm(grad);
      if (ng == 0) break;
      for (double& x : grad) x /= ng;
      double change = 0;
      for (std::size_t i = 0; i < n; ++i) change = std::max(change, std::abs(grad[i] - u[i]));
      u = grad;
      if (change < 1e-15) break;
    }
    DVec au = apply_double(a, u);
    for (std::size_t i = 0; i < au.size(); ++i) au[i] += d[i];
    double value = norm(au);
    if (value > best_value) {
      best_value = value;
      best = u;
    }
  }
  return best;
}

ContainmentResult ball_into_ball(const Ball& src, const AffineMap& m, const Ball& dst) {
  ContainmentResult out;
  // Centered coordinates: x = c1 + r1 u, |u| <= 1, and M x + t - c2 = A u + d.
  const Matrix a = src.radius * m.matrix;
  const Vector d = m(src.center) - dst.center;
  const Rational r2 = dst.radius * dst.radius;

  auto try_witness = [&](const Vector& u) -> bool {
    Vector x = src.center + src.radius * u;
    Vector y = m(x);
    Vector diff = y - dst.center;
    if (dot(diff, diff) <= r2) return false;
    out.witness = std::move(x);
    out.image = std::move(y);
    return true;
  };

  if (is_zero(d)) {
    Matrix gram = a.transpose() * a;
    Matrix slack = r2 * Matrix::identity(gram.rows());
    slack = slack - gram;
    if (is_positive_semidefinite(slack)) return out;
    out.contained = false;
    DVec u = sphere_maximizer(a, d);
    if (!try_witness(into_unit_ball(u)))
      for (std::size_t i = 0; i < a.cols() && !out.witness; ++i) try_witness(unit_vector(a.cols(), i));
    return out;
  }

  // Sufficient exact bound: |A|_F + |d| <= R.
  Rational frob = 0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) frob += a(i, j) * a(i, j);
  const Rational dd = dot(d, d);
  const Rational gap = r2 - frob - dd;
  if (gap >= 0 && gap * gap >= 4 * frob * dd) return out;

  DVec u = sphere_maximizer(a, d);
  Vector uq = into_unit_ball(u);
  if (try_witness(uq)) {
    out.contained = false;
    return out;
  }
  DVec au = apply_double(a, u);
  DVec dv = to_doubles(d);
  for (std::size_t i = 0; i < au.size(); ++i) au[i] += dv[i];
  out.exact = false;
  out.contained = norm(au) <= dst.radius.get_d() + 1e-12;
  return out;
}

}  // namespace

ContainmentResult map_into(const StateSpace& k1, const AffineMap& m, const StateSpace& k2) {
  if (m.source_dimension() != k1.ambient_dimension() ||
      m.target_dimension() != k2.ambient_dimension() || m.offset.size() != m.target_dimension())
    throw PreconditionError("map_into: dimension mismatch");
  if (k1.is_polytope()) {
    ContainmentResult out;
    const auto& vs = k1.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i) {
      Vector y = m(vs[i]);
      if (!contains(k2, y)) {
        out.contained = false;
        out.witness = vs[i];
        out.image = std::move(y);
        out.witness_vertex = i;
        return out;
      }
    }
    return out;
  }
  if (k2.is_ball()) return ball_into_ball(k1.as_ball(), m, k2.as_ball());
  throw UnsupportedGeometry("unsupported geometry: ball source with polytope target");
}

// ---------------------------------------------------------------------------
// Chart

AffineChart::AffineChart(const StateSpace& k) : ambient_dim_(k.ambient_dimension()) {
  if (k.is_ball()) {
    const Ball& b = k.as_ball();
    points_.push_back(b.center);
    for (std::size_t i = 0; i < ambient_dim_; ++i)
      points_.push_back(b.center + b.radius * unit_vector(ambient_dim_, i));
    return;
  }
  const auto& vs = k.vertices();
  points_.push_back(vs[0]);
  std::vector<Vector> diffs;
  for (std::size_t i = 1; i < vs.size(); ++i) {
    diffs.push_back(vs[i] - vs[0]);
    if (rank(Matrix::from_rows(diffs)) == diffs.size())
      points_.push_back(vs[i]);
    else
      diffs.pop_back();
  }
}

Vector AffineChart::coordinates(const AffineFunctional& f) const {
  Vector out(points_.size());
  for (std::size_t i = 0; i < points_.size(); ++i) out[i] = f(points_[i]);
  return out;
}

namespace {

Matrix homogeneous_rows(const std::vector<Vector>& points, std::size_t dim) {
  Matrix p(points.size(), dim + 1);
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = 0; j < dim; ++j) p(i, j) = points[i][j];
    p(i, dim) = 1;
  }
  return p;
}

}  // namespace

AffineFunctional AffineChart::functional(const Vector& values) const {
  if (values.size() != points_.size()) throw PreconditionError("chart: wrong number of values");
  auto sol = solve_affine(homogeneous_rows(points_, ambient_dim_), values);
  // Chart points are affinely independent, so the system is always consistent.
  if (!sol) throw Error("chart: inconsistent interpolation");
  AffineFunctional f;
  f.linear.assign(sol->particular.begin(), sol->particular.begin() + static_cast<std::ptrdiff_t>(ambient_dim_));
  f.constant = sol->particular[ambient_dim_];
  return f;
}

std::optional<Vector> AffineChart::barycentric(const Vector& x) const {
  if (x.size() != ambient_dim_) throw PreconditionError("chart: dimension mismatch");
  const std::size_t d = points_.size() - 1;
  Matrix dirs(ambient_dim_, d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < ambient_dim_; ++i) dirs(i, j) = points_[j + 1][i] - points_[0][i];
  auto sol = solve_affine(dirs, x - points_[0]);
  if (!sol) return std::nullopt;
  Vector out(points_.size());
  out[0] = 1;
  for (std::size_t j = 0; j < d; ++j) {
    out[j + 1] = sol->particular[j];
    out[0] -= sol->particular[j];
  }
  return out;
}

AffineMap AffineChart::map_from_images(const std::vector<Vector>& images) const {
  if (images.size() != points_.size()) throw PreconditionError("chart: wrong number of images");
  const std::size_t target = images.empty() ? 0 : images.front().size();
  Matrix p = homogeneous_rows(points_, ambient_dim_);
  AffineMap out{Matrix(target, ambient_dim_), zeros(target)};
  for (std::size_t k = 0; k < target; ++k) {
    Vector rhs(points_.size());
    for (std::size_t i = 0; i < points_.size(); ++i) rhs[i] = images[i].at(k);
    auto sol = solve_affine(p, rhs);
    if (!sol) throw Error("chart: inconsistent map interpolation");
    for (std::size_t j = 0; j < ambient_dim_; ++j) out.matrix(k, j) = sol->particular[j];
    out.offset[k] = sol->particular[ambient_dim_];
  }
  return out;
}

}  // namespace wignerlab
