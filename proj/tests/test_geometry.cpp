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

#include <doctest.h>

#include <cmath>
#include <random>

#include "support.hpp"
#include "wignerlab/catalog.hpp"
#include "wignerlab/errors.hpp"
#include "wignerlab/geometry.hpp"

using namespace wignerlab;
using testsupport::pick;

namespace {

StateSpace square() { return StateSpace::polytope({{0, 0}, {0, 1}, {1, 0}, {1, 1}}); }

std::vector<Vector> cube_vertices() {
  std::vector<Vector> vs;
  for (long i = 0; i < 2; ++i)
    for (long j = 0; j < 2; ++j)
      for (long k = 0; k < 2; ++k) vs.push_back({i, j, k});
  return vs;
}

}  // namespace

TEST_CASE("dimension") {
  CHECK(dimension(square()) == 2);
  CHECK(dimension(StateSpace::polytope({{3, 4}})) == 0);
  CHECK(dimension(StateSpace::polytope(cube_vertices())) == 3);
  CHECK(dimension(StateSpace::polytope({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}})) == 2);
  CHECK(dimension(StateSpace::ball({0, 0, 0}, 1)) == 3);
}

TEST_CASE("state space construction rejects bad input") {
  CHECK_THROWS_AS(StateSpace::polytope({}), PreconditionError);
  CHECK_THROWS_AS(StateSpace::polytope({{0, 0}, {1}}), PreconditionError);
  CHECK_THROWS_AS(StateSpace::polytope({{0, 0}, {0, 0}}), PreconditionError);
  CHECK_THROWS_AS(StateSpace::polytope({{0, 0}, {2, 0}, {1, 0}}), PreconditionError);
  CHECK_THROWS_AS(StateSpace::ball({0, 0}, 0), PreconditionError);
}

TEST_CASE("contains") {
  CHECK(contains(square(), {frac(1, 2), frac(1, 2)}));
  CHECK_FALSE(contains(square(), {2, 0}));
  CHECK(contains(StateSpace::ball({0, 0}, 1), {frac(3, 5), frac(4, 5)}));
  CHECK_FALSE(contains(StateSpace::ball({0, 0}, 1), {frac(3, 5), frac(81, 100)}));
}

TEST_CASE("extremal ranges") {
  auto r = extremal_range(square(), AffineFunctional::coordinate(2, 0));
  CHECK(r.min == ExtremalValue(0));
  CHECK(r.max == ExtremalValue(1));

  const Rational h = frac(1, 4);
  AffineFunctional w00{{h, h, h}, h};
  auto b = extremal_range(StateSpace::ball({0, 0, 0}, 1), w00);
  CHECK(b.min == ExtremalValue(h, -h, 3));
  CHECK(b.min.to_string() == "1/4 - 1/4*sqrt(3)");
  CHECK(b.min.compare(0) < 0);
  CHECK(b.max.to_string() == "1/4 + 1/4*sqrt(3)");
  // Oracle: dense sampling of the sphere approaches the same value from above.
  double best = 1;
  for (int i = 0; i <= 200; ++i)
    for (int j = 0; j <= 400; ++j) {
      double th = M_PI * i / 200, ph = 2 * M_PI * j / 400;
      double x = std::sin(th) * std::cos(ph), y = std::sin(th) * std::sin(ph), z = std::cos(th);
      best = std::min(best, 0.25 * (1 + x + y + z));
    }
  CHECK(best >= b.min.to_double() - 1e-12);
  CHECK(best - b.min.to_double() < 1e-3);

  for (const auto& k : {square(), StateSpace::ball({1, 2}, frac(1, 3))}) {
    auto c = extremal_range(k, AffineFunctional::constant_function(2, frac(2, 7)));
    CHECK(c.min == ExtremalValue(frac(2, 7)));
    CHECK(c.max == ExtremalValue(frac(2, 7)));
  }
}

TEST_CASE("extremal value comparison is exact") {
  ExtremalValue v(frac(1, 4), frac(-1, 4), 3);  // about -0.183
  CHECK(v.compare(frac(-183, 1000)) < 0);
  CHECK(v.compare(frac(-182, 1000)) < 0);
  CHECK(v.compare(frac(-184, 1000)) > 0);
  CHECK(ExtremalValue(0, 1, 2).compare(frac(141421, 100000)) > 0);
  CHECK(ExtremalValue(0, 1, 2).compare(frac(141422, 100000)) < 0);
  CHECK(ExtremalValue(1, 2, 4) == ExtremalValue(5));
}

TEST_CASE("map_into") {
  for (const auto& k : {square(), StateSpace::ball({0, 0}, 2)})
    CHECK(map_into(k, AffineMap::identity(2), k).contained);

  CatalogEntry d = load_catalog("deformed_12gon");
  AffineMap flip{Matrix::from_rows({{1, 0}, {0, -1}}), {0, 0}};
  auto r = map_into(d.theory.state_space, flip, d.theory.state_space);
  CHECK_FALSE(r.contained);
  CHECK(*r.witness == Vector{frac(3, 5), frac(-4, 5)});
  CHECK(*r.image == Vector{frac(3, 5), frac(4, 5)});

  const StateSpace bloch = StateSpace::ball({0, 0, 0}, 1);
  AffineMap perm{Matrix::from_rows({{0, -1, 0}, {-1, 0, 0}, {0, 0, 1}}), {0, 0, 0}};
  auto p = map_into(bloch, perm, bloch);
  CHECK(p.contained);
  CHECK(p.exact);

  AffineMap stretch{Matrix::from_rows({{2, 0, 0}, {0, 1, 0}, {0, 0, 1}}), {0, 0, 0}};
  auto s = map_into(bloch, stretch, bloch);
  CHECK_FALSE(s.contained);
  CHECK_FALSE(contains(bloch, stretch(*s.witness)));

  AffineMap shrink_shift{Matrix::from_rows({{frac(1, 2), 0, 0}, {0, frac(1, 2), 0}, {0, 0, frac(1, 2)}}),
                         {frac(1, 3), 0, 0}};
  CHECK(map_into(bloch, shrink_shift, bloch).contained);

  CHECK_THROWS_AS(map_into(StateSpace::ball({0, 0}, 1), AffineMap::identity(2), square()),
                  UnsupportedGeometry);
  // Polytope into ball goes through the vertices.
  CHECK(map_into(square(), AffineMap::identity(2), StateSpace::ball({frac(1, 2), frac(1, 2)}, 1)).contained);
}

TEST_CASE("affine chart round trips") {
  const StateSpace k = StateSpace::polytope({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}});
  AffineChart chart(k);
  CHECK(chart.size() == 3);
  AffineFunctional f{{1, 2, 5}, 3};
  AffineFunctional g = chart.functional(chart.coordinates(f));
  for (const auto& v : k.vertices()) CHECK(f(v) == g(v));
  CHECK_FALSE(chart.barycentric({0, 0, 1}).has_value());
  auto beta = chart.barycentric({frac(1, 2), frac(1, 2), 0});
  REQUIRE(beta);
  Vector x = zeros(3);
  for (std::size_t i = 0; i < chart.size(); ++i) x = x + (*beta)[i] * chart.points()[i];
  CHECK(x == Vector{frac(1, 2), frac(1, 2), 0});
}

// ---------------------------------------------------------------------------
// Properties

TEST_CASE("property: vertices and centers are members") {
  std::mt19937 rng(11);
  for (int c = 0; c < 200; ++c) {
    StateSpace k = testsupport::random_polygon(rng, static_cast<std::size_t>(pick(rng, 3, 7)));
    for (const auto& v : k.vertices()) CHECK(contains(k, v));
    Vector center{frac(pick(rng, -5, 5), 3), frac(pick(rng, -5, 5), 2)};
    CHECK(contains(StateSpace::ball(center, frac(pick(rng, 1, 9), 4)), center));
  }
}

TEST_CASE("property: minimum of a convex combination dominates the combination of minima") {
  std::mt19937 rng(12);
  for (int c = 0; c < 200; ++c) {
    StateSpace k = testsupport::random_polygon(rng, static_cast<std::size_t>(pick(rng, 3, 7)));
    AffineFunctional g = testsupport::random_functional(rng, 2), h = testsupport::random_functional(rng, 2);
    Rational a = frac(pick(rng, 0, 8), 8);
    AffineFunctional f = a * g + (1 - a) * h;
    Rational mf = extremal_range(k, f).min.rational_part();
    Rational mg = extremal_range(k, g).min.rational_part();
    Rational mh = extremal_range(k, h).min.rational_part();
    CHECK(mf >= a * mg + (1 - a) * mh);
  }
}

TEST_CASE("property: identity maps into itself") {
  std::mt19937 rng(13);
  for (int c = 0; c < 200; ++c) {
    StateSpace k = (c % 2 == 0)
                       ? testsupport::random_polygon(rng, static_cast<std::size_t>(pick(rng, 3, 6)))
                       : StateSpace::ball({frac(pick(rng, -3, 3), 2), frac(pick(rng, -3, 3), 5)},
                                          frac(pick(rng, 1, 7), 3));
    CHECK(map_into(k, AffineMap::identity(2), k).contained);
  }
}

TEST_CASE("property: polytope containment matches brute-force vertex membership") {
  std::mt19937 rng(14);
  int outside = 0;
  for (int c = 0; c < 200; ++c) {
    StateSpace k1 = testsupport::random_polygon(rng, static_cast<std::size_t>(pick(rng, 3, 5)));
    StateSpace k2 = testsupport::random_polygon(rng, static_cast<std::size_t>(pick(rng, 3, 7)));
    AffineMap m{Matrix(2, 2), {frac(pick(rng, -2, 2), 8), frac(pick(rng, -2, 2), 8)}};
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) m.matrix(i, j) = frac(pick(rng, -3, 3), 4);
    // Oracle: each image tested against a half-plane description of k2 built
    // from its cyclically ordered vertices.
    std::vector<Vector> vs = k2.vertices();
    std::sort(vs.begin(), vs.end(), [](const Vector& a, const Vector& b) {
      return std::atan2(to_double(a[1]), to_double(a[0])) < std::atan2(to_double(b[1]), to_double(b[0]));
    });
    auto inside = [&](const Vector& y) {
      for (std::size_t i = 0; i < vs.size(); ++i) {
        const Vector& p = vs[i];
        const Vector& q = vs[(i + 1) % vs.size()];
        Rational cross = (q[0] - p[0]) * (y[1] - p[1]) - (q[1] - p[1]) * (y[0] - p[0]);
        if (cross < 0) return false;
      }
      return true;
    };
    bool brute = true;
    for (const auto& v : k1.vertices()) brute = brute && inside(m(v));
    auto r = map_into(k1, m, k2);
    CHECK(r.contained == brute);
    if (!r.contained) {
      ++outside;
      CHECK_FALSE(inside(*r.image));
    }
  }
  CHECK(outside > 20);
  CHECK(outside < 190);
}
