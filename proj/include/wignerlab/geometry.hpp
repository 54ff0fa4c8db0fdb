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

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "wignerlab/linalg.hpp"
#include "wignerlab/lp.hpp"
#include "wignerlab/rational.hpp"

namespace wignerlab {

/// x |-> linear . x + constant.
struct AffineFunctional {
  Vector linear;
  Rational constant;

  static AffineFunctional constant_function(std::size_t dim, Rational c);
  static AffineFunctional coordinate(std::size_t dim, std::size_t i);

  std::size_t dimension() const { return linear.size(); }
  Rational operator()(const Vector& x) const;

  friend bool operator==(const AffineFunctional&, const AffineFunctional&) = default;
};

AffineFunctional operator+(const AffineFunctional& f, const AffineFunctional& g);
AffineFunctional operator-(const AffineFunctional& f, const AffineFunctional& g);
AffineFunctional operator*(const Rational& s, const AffineFunctional& f);

/// x |-> matrix * x + offset.
struct AffineMap {
  Matrix matrix;
  Vector offset;

  static AffineMap identity(std::size_t dim);

  std::size_t source_dimension() const { return matrix.cols(); }
  std::size_t target_dimension() const { return matrix.rows(); }
  Vector operator()(const Vector& x) const;

  friend bool operator==(const AffineMap&, const AffineMap&) = default;
};

/// (outer o inner)(x) = outer(inner(x)).
AffineMap compose(const AffineMap& outer, const AffineMap& inner);

/// f o map.
AffineFunctional compose(const AffineFunctional& f, const AffineMap& map);

struct Polytope {
  std::vector<Vector> vertices;
};

struct Ball {
  Vector center;
  Rational radius;
};

/// A compact convex state space: the convex hull of listed extreme points, or a
/// Euclidean ball. Construction validates the invariants.
class StateSpace {
 public:
  /// Throws PreconditionError on empty, ragged, duplicate or non-extreme input.
  static StateSpace polytope(std::vector<Vector> vertices);
  /// Throws PreconditionError unless radius > 0.
  static StateSpace ball(Vector center, Rational radius);

  bool is_polytope() const { return std::holds_alternative<Polytope>(shape_); }
  bool is_ball() const { return std::holds_alternative<Ball>(shape_); }
  const Polytope& as_polytope() const { return std::get<Polytope>(shape_); }
  const Ball& as_ball() const { return std::get<Ball>(shape_); }
  const std::vector<Vector>& vertices() const { return as_polytope().vertices; }

  std::size_t ambient_dimension() const { return ambient_dim_; }

 private:
  StateSpace(std::variant<Polytope, Ball> shape, std::size_t dim)
      : shape_(std::move(shape)), ambient_dim_(dim) {}

  std::variant<Polytope, Ball> shape_;
  std::size_t ambient_dim_;
};

/// Dimension of the affine hull.
std::size_t dimension(const StateSpace& k);

bool contains(const StateSpace& k, const Vector& x);

/// Membership program for a polytope: weights lambda >= 0 over the vertices with
/// sum 1 and sum lambda_v v = x. Infeasible iff x lies outside.
LinearProgram hull_membership_program(const std::vector<Vector>& points, const Vector& x);

/// rational_part + radical_part * sqrt(radicand), with radicand a square-free
/// integer (or 0). Values with a perfect-square radicand collapse to rationals.
class ExtremalValue {
 public:
  ExtremalValue(Rational value = 0) : rational_(std::move(value)) {}  // NOLINT
  ExtremalValue(Rational rational_part, Rational radical_part, Rational radicand);

  const Rational& rational_part() const { return rational_; }
  const Rational& radical_part() const { return radical_; }
  const Rational& radicand() const { return radicand_; }
  bool is_rational() const { return radical_ == 0; }

  /// Exact sign of (*this - t).
  int compare(const Rational& t) const;
  double to_double() const;
  /// "1/4 - 1/4*sqrt(3)"-style rendering.
  std::string to_string() const;

  friend bool operator==(const ExtremalValue&, const ExtremalValue&) = default;

 private:
  Rational rational_;
  Rational radical_ = 0;
  Rational radicand_ = 0;
};

struct ExtremalRange {
  ExtremalValue min;
  ExtremalValue max;
};

ExtremalRange extremal_range(const StateSpace& k, const AffineFunctional& f);

/// Minimizer of f over K: a vertex for polytopes. For balls the minimizer is
/// generally irrational, so the exact direction -linear (unnormalized) is given.
struct Extremizer {
  std::optional<std::size_t> vertex;
  Vector ball_direction;
};

Extremizer minimizer(const StateSpace& k, const AffineFunctional& f);
Extremizer maximizer(const StateSpace& k, const AffineFunctional& f);

/// Result of an image-containment test. On failure `witness` is a point of the
/// source whose image lies outside the target.
struct ContainmentResult {
  bool contained = true;
  bool exact = true;
  std::optional<Vector> witness;
  std::optional<Vector> image;
  std::optional<std::size_t> witness_vertex;
};

/// Decides M(K1) subset K2. Supported: polytope source with any target, and
/// ball to ball. Throws UnsupportedGeometry for ball to polytope.
ContainmentResult map_into(const StateSpace& k1, const AffineMap& m, const StateSpace& k2);

/// Coordinates for affine functions on aff(K): an affinely independent set of
/// points of K spanning aff(K). A functional restricted to K is determined by
/// its values at these points.
class AffineChart {
 public:
  explicit AffineChart(const StateSpace& k);

  const std::vector<Vector>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  std::size_t ambient_dimension() const { return ambient_dim_; }

  /// Values of f at the chart points.
  Vector coordinates(const AffineFunctional& f) const;
  /// An ambient functional taking the given values at the chart points.
  AffineFunctional functional(const Vector& values) const;
  /// Barycentric coordinates of x with respect to the chart points, or nullopt
  /// when x is not in aff(K).
  std::optional<Vector> barycentric(const Vector& x) const;
  /// Affine map sending chart point i to images[i].
  AffineMap map_from_images(const std::vector<Vector>& images) const;

 private:
  std::vector<Vector> points_;
  std::size_t ambient_dim_;
};

}  // namespace wignerlab
