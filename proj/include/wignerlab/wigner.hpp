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
#include "wignerlab/theory.hpp"

namespace wignerlab {

/// An affine map from states to signed distributions on the phase space
/// Omega_A x Omega_B, stored as the grid of functionals q_ab.
struct WignerRep {
  std::string name;
  Observable a;
  Observable b;
  FunctionalGrid grid;

  std::size_t rows() const { return grid.size(); }
  std::size_t cols() const { return grid.empty() ? 0 : grid.front().size(); }
  std::size_t phase_points() const { return rows() * cols(); }
  /// Row-major position of (a, b).
  std::size_t index(std::size_t i, std::size_t j) const { return i * cols() + j; }
  const AffineFunctional& entry(std::size_t flat) const { return grid[flat / cols()][flat % cols()]; }
};

/// Values of the grid at one state; entries sum to 1.
using SignedGrid = std::vector<std::vector<Rational>>;

Vector flatten(const SignedGrid& g);
SignedGrid unflatten(const Vector& v, std::size_t rows, std::size_t cols);

/// W(x). Throws DomainError when x is not in K.
SignedGrid evaluate(const WignerRep& w, const StateSpace& k, const Vector& x);

/// W(x) flattened row-major, without the membership check.
Vector evaluate_flat(const WignerRep& w, const Vector& x);

struct MarginalViolation {
  enum class Kind { shape, row, column };
  Kind kind;
  std::size_t index = 0;
  std::string message;
};

/// Checks the row sums against A and column sums against B as functionals on
/// aff(K) (chart coordinates), not at sample points.
std::optional<MarginalViolation> check_marginals(const WignerRep& w, const StateSpace& k);

/// The fixed outcome pair (alpha, beta) whose row and column absorb the
/// marginal constraints.
struct Anchor {
  std::size_t a = 0;
  std::size_t b = 0;
};

/// Last outcome of each observable.
Anchor default_anchor(const Observable& a, const Observable& b);

/// Number of freely choosable entries, (|A| - 1)(|B| - 1).
std::size_t free_parameter_count(const Observable& a, const Observable& b);

/// Completes a grid from the free entries q'_ab (a != alpha, b != beta), given
/// row-major over the non-anchored rows and columns:
///   q_{a,beta}    = f_a - sum_b q'_ab
///   q_{alpha,b}   = f_b - sum_a q'_ab
///   q_{alpha,beta} = 1 - sum_{a != alpha} f_a - sum_{b != beta} f_b + sum q'_ab
WignerRep construct_family(const Observable& a, const Observable& b, Anchor anchor,
                           const std::vector<AffineFunctional>& free, std::string name = {});

/// Adds t on (a1,b1),(a2,b2) and -t on (a1,b2),(a2,b1); marginals are unchanged.
WignerRep perturb(const WignerRep& w, std::size_t a1, std::size_t a2, std::size_t b1,
                  std::size_t b2, const Rational& t);

struct PositivityResult {
  bool positive = true;
  /// Offending phase point (row, column).
  std::optional<std::pair<std::size_t, std::size_t>> entry;
  /// Vertex index (polytopes) or the minimizing direction from the center (balls).
  std::optional<std::size_t> vertex;
  std::optional<Vector> witness;
  bool witness_is_direction = false;
  ExtremalValue value;
};

/// Reports the first negative entry in row-major order, at its minimum.
PositivityResult is_positive(const WignerRep& w, const StateSpace& k);

struct FaithfulnessResult {
  bool faithful = false;
  std::size_t rank = 0;
  std::size_t required = 0;
};

/// Faithful iff the q_ab span all affine functions on K.
FaithfulnessResult is_faithful(const WignerRep& w, const StateSpace& k);

struct FaithfulChoice {
  long free_parameters = 0;  // (|A|-1)(|B|-1)
  long deficit = 0;          // dim K + 1 - rank(effects)
  bool possible = false;
};

FaithfulChoice faithful_choice_possible(const Observable& a, const Observable& b,
                                        const StateSpace& k);

/// Fills the free block greedily with chart coordinate functionals, keeping
/// each one only if it raises the rank. Faithful whenever that is possible.
WignerRep faithful_completion(const Observable& a, const Observable& b, const StateSpace& k,
                              Anchor anchor, std::string name = {});

/// The member with every free entry zero; not faithful unless A and B are
/// jointly info-complete.
WignerRep degenerate_rep(const Observable& a, const Observable& b, Anchor anchor,
                         std::string name = {});

struct PositiveMemberSearch {
  LinearProgram program;
  std::optional<WignerRep> rep;
  std::optional<InfeasibilityCertificate> certificate;
};

/// LP over the free block for a member that is nonnegative at every vertex.
/// Polytope K only.
/// Feasibility of a nonnegative member of the family, over the chart values of
/// the free block.
LinearProgram positive_member_program(const Observable& a, const Observable& b,
                                      const StateSpace& k, Anchor anchor);

PositiveMemberSearch find_positive_member(const Observable& a, const Observable& b,
                                          const StateSpace& k, Anchor anchor);

/// The point x in aff(K) with W(x) = grid, for faithful W; nullopt when the
/// grid lies outside aff(W(K)).
std::optional<Vector> preimage(const WignerRep& w, const StateSpace& k, const Vector& grid);

/// Affine map R^n1 -> R^n2 sending src[i] to dst[i], acting on the orthogonal
/// complement of the source directions as the coordinate identity (truncated
/// or zero-padded when n1 != n2). nullopt if the correspondence is not affine.
std::optional<AffineMap> extend_affine(const std::vector<Vector>& src,
                                       const std::vector<Vector>& dst, std::size_t n1,
                                       std::size_t n2);

/// Lambda with Lambda(W1(x)) = W2(x) on K. Throws PreconditionError unless
/// both are faithful.
AffineMap isomorphism(const WignerRep& w1, const WignerRep& w2, const StateSpace& k);

}  // namespace wignerlab
