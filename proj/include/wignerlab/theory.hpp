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
#include <vector>

#include "wignerlab/geometry.hpp"
#include "wignerlab/lp.hpp"

namespace wignerlab {

/// A finite-outcome observable given by one effect per outcome.
struct Observable {
  std::string name;
  std::vector<std::string> outcomes;
  std::vector<AffineFunctional> effects;

  std::size_t size() const { return effects.size(); }
};

/// Outcome probabilities, one per outcome.
using Distribution = std::vector<Rational>;

/// A state space with named observables. Wigner operations use the first two
/// observables unless told otherwise.
struct Theory {
  StateSpace state_space;
  std::vector<Observable> observables;

  const Observable& observable(const std::string& name) const;
};

/// An affine map certified to send K1 into K2.
class Channel {
 public:
  /// Throws PreconditionError unless map_into(k1, map, k2) holds.
  static Channel certify(const StateSpace& k1, const AffineMap& map, const StateSpace& k2);
  /// Wraps a map whose containment was established elsewhere.
  static Channel trusted(AffineMap map) { return Channel(std::move(map)); }

  const AffineMap& map() const { return map_; }

 private:
  explicit Channel(AffineMap map) : map_(std::move(map)) {}
  AffineMap map_;
};

// ---------------------------------------------------------------------------
// Validation

struct Violation {
  enum class Kind { wrong_dimension, below_zero, above_one, not_normalized, no_outcomes };
  Kind kind;
  std::string observable;
  std::optional<std::size_t> outcome;
  /// Exact offending point (polytopes) or the direction from the ball center.
  std::optional<Vector> witness;
  bool witness_is_direction = false;
  ExtremalValue value;
  std::string message;
};

/// Empty when every observable is a valid tuple of effects on K.
std::vector<Violation> validate(const Theory& theory);
std::vector<Violation> validate(const StateSpace& k, const Observable& obs);

/// (f_a(x))_a. Throws DomainError when x is not in K.
Distribution measure(const Observable& obs, const StateSpace& k, const Vector& x);

/// True iff f and g agree on K (equal chart coordinates).
bool equal_on(const StateSpace& k, const AffineFunctional& f, const AffineFunctional& g);

// ---------------------------------------------------------------------------
// Compatibility

/// |A| x |B| grid of affine functionals, row index first.
using FunctionalGrid = std::vector<std::vector<AffineFunctional>>;

struct CompatibilityResult {
  LinearProgram program;
  std::optional<FunctionalGrid> joint;
  std::optional<InfeasibilityCertificate> certificate;
  bool compatible() const { return joint.has_value(); }
};

/// Searches a joint observable with marginals A and B. Unknowns are the chart
/// coordinates (dim K + 1 numbers) of each m_ab; nonnegativity is imposed at
/// every vertex. Throws UnsupportedGeometry for balls.
/// The joint-observable feasibility program in chart coordinates; built
/// without solving so certificates can be replayed.
LinearProgram compatibility_program(const Observable& a, const Observable& b,
                                    const StateSpace& k);

CompatibilityResult are_compatible(const Observable& a, const Observable& b, const StateSpace& k);

/// Rank of the effect coefficients restricted to aff(K).
std::size_t effect_span_rank(const Observable& a, const Observable& b, const StateSpace& k);

bool jointly_info_complete(const Observable& a, const Observable& b, const StateSpace& k);

/// Symmetric complementarity: a certain outcome of either observable forces the
/// other one to be uniform. Throws UnsupportedGeometry for a ball face that is
/// not a single point.
bool are_complementary(const Observable& a, const Observable& b, const StateSpace& k);

/// True iff every outcome is attained with probability 1 somewhere in K.
bool is_surjective(const Observable& obs, const StateSpace& k);

// ---------------------------------------------------------------------------
// Channels

/// Requirement g(Phi(x)) == h(x) for x in K1, with g on K2 and h on K1.
struct ChannelEquation {
  AffineFunctional on_target;
  AffineFunctional on_source;
};

struct ChannelSearch {
  LinearProgram program;
  std::optional<Channel> channel;
  std::optional<InfeasibilityCertificate> certificate;
  /// When the equations alone pin down a unique affine map that leaves K2,
  /// the vertex it sends outside and its image.
  std::optional<Vector> escaping_vertex;
  std::optional<Vector> escaping_image;
  std::optional<AffineMap> forced_map;

  bool found() const { return channel.has_value(); }
};

/// Finds an affine Phi with Phi(K1) in K2 satisfying every equation. The map is
/// parametrised by the images of K1's chart points. Polytope K1 and K2 only.
LinearProgram channel_program(const StateSpace& k1, const StateSpace& k2,
                              const std::vector<ChannelEquation>& equations);

ChannelSearch find_channel(const StateSpace& k1, const StateSpace& k2,
                           const std::vector<ChannelEquation>& equations);

/// Checks a candidate map against equations (on K1) and containment; the
/// route for ball state spaces.
bool verify_channel(const StateSpace& k1, const StateSpace& k2, const AffineMap& map,
                    const std::vector<ChannelEquation>& equations);

}  // namespace wignerlab
