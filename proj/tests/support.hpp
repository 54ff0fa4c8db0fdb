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

// Random generators shared by the property suites. Everything is seeded by
// the caller so runs are reproducible.

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "wignerlab/geometry.hpp"
#include "wignerlab/theory.hpp"

namespace testsupport {

using namespace wignerlab;

inline long pick(std::mt19937& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

// Rational point on the unit circle from the slope parameter t.
inline Vector circle_point(const Rational& t) {
  Rational d = 1 + t * t;
  return {Rational((1 - t * t) / d), Rational(2 * t / d)};
}

// Polygon with n distinct vertices on the unit circle, so all are extreme.
inline StateSpace random_polygon(std::mt19937& rng, std::size_t n) {
  std::set<Rational> ts;
  while (ts.size() < n) ts.insert(frac(pick(rng, -12, 12), pick(rng, 1, 4)));
  std::vector<Vector> vs;
  for (const auto& t : ts) vs.push_back(circle_point(t));
  return StateSpace::polytope(vs);
}

// Octagon (+-a, +-b), (+-b, +-a) with a^2 + b^2 = 1: invariant under both axis
// reflections and the diagonal swap.
inline StateSpace symmetric_octagon(std::mt19937& rng) {
  Vector p;
  do p = circle_point(frac(pick(rng, 1, 9), pick(rng, 2, 10)));
  while (p[0] <= 0 || p[1] <= 0 || p[0] == p[1]);
  const Rational a = p[0], b = p[1];
  std::vector<Vector> vs;
  for (int sx : {1, -1})
    for (int sy : {1, -1}) {
      vs.push_back({sx * a, sy * b});
      vs.push_back({sx * b, sy * a});
    }
  return StateSpace::polytope(vs);
}

inline AffineFunctional random_functional(std::mt19937& rng, std::size_t dim, long range = 3) {
  AffineFunctional f = AffineFunctional::constant_function(dim, frac(pick(rng, -range, range), pick(rng, 1, 3)));
  for (auto& c : f.linear) c = frac(pick(rng, -range, range), pick(rng, 1, 3));
  return f;
}

// A valid observable with n outcomes: the first n-1 effects are rescaled into
// [0, 1/(n-1)] on K, the last one completes the sum to 1.
inline Observable random_observable(std::mt19937& rng, const StateSpace& k, std::size_t n,
                                    std::string name) {
  const std::size_t dim = k.ambient_dimension();
  Observable obs{std::move(name), {}, {}};
  AffineFunctional rest = AffineFunctional::constant_function(dim, 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    AffineFunctional g = random_functional(rng, dim);
    ExtremalRange r = extremal_range(k, g);
    AffineFunctional e;
    if (!r.min.is_rational() || !r.max.is_rational() || r.min == r.max) {
      e = AffineFunctional::constant_function(dim, frac(1, 2 * static_cast<long>(n - 1)));
    } else {
      Rational lo = r.min.rational_part(), hi = r.max.rational_part();
      Rational scale = 1 / ((hi - lo) * static_cast<long>(n - 1));
      e = scale * (g - AffineFunctional::constant_function(dim, lo));
    }
    obs.effects.push_back(e);
    rest = rest - e;
  }
  obs.effects.push_back(rest);
  for (std::size_t i = 0; i < n; ++i) obs.outcomes.push_back(std::to_string(i));
  return obs;
}

// Random point of a polytope as a convex combination of its vertices.
inline Vector random_point(std::mt19937& rng, const StateSpace& k) {
  const auto& vs = k.vertices();
  std::vector<Rational> w;
  Rational total = 0;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    w.push_back(pick(rng, 0, 4));
    total += w.back();
  }
  if (total == 0) return vs[0];
  Vector x = zeros(k.ambient_dimension());
  for (std::size_t i = 0; i < vs.size(); ++i) x = x + Rational(w[i] / total) * vs[i];
  return x;
}

}  // namespace testsupport
