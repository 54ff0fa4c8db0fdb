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
#include <utility>
#include <vector>

#include "wignerlab/geometry.hpp"
#include "wignerlab/lp.hpp"
#include "wignerlab/theory.hpp"
#include "wignerlab/wigner.hpp"

namespace wignerlab {

/// A map on the phase space Omega_A x Omega_B, stored on flat indices
/// a * |B| + b.
struct PhasePointMap {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::size_t> table;

  static PhasePointMap identity(std::size_t rows, std::size_t cols);
  /// Swaps two phase points, given as flat indices.
  static PhasePointMap swap(std::size_t rows, std::size_t cols, std::size_t p, std::size_t q);

  std::size_t size() const { return table.size(); }
  std::size_t operator()(std::size_t j) const { return table.at(j); }
  bool is_permutation() const;

  friend bool operator==(const PhasePointMap&, const PhasePointMap&) = default;
};

/// (phi o psi)(j) = phi(psi(j)).
PhasePointMap compose(const PhasePointMap& phi, const PhasePointMap& psi);

/// Linear map on signed distributions moving the weight at j to phi(j).
AffineMap lift(const PhasePointMap& phi);

struct SymmetryCheck {
  bool symmetric = true;
  /// A state x of K whose image Lambda(W(x)) is not of the form W(y).
  std::optional<Vector> witness;
  std::optional<std::size_t> witness_vertex;
  std::optional<Vector> image;
  /// Polytopes: the hull-membership program that failed and its certificate.
  std::optional<LinearProgram> program;
  std::optional<InfeasibilityCertificate> certificate;
};

/// Lambda(W(K)) subset W(K). `lambda` acts on flattened grids.
SymmetryCheck is_symmetry(const WignerRep& w, const StateSpace& k, const AffineMap& lambda);

/// All phase-point permutations whose lift is a symmetry of W(K). Guarded to
/// at most 8 phase points.
std::vector<PhasePointMap> enumerate_lifted_symmetries(const WignerRep& w, const StateSpace& k);

/// A channel Phi on K with q_i o Phi = sum_j Psi_ij q_j + t_i. Polytope K.
/// Equations W o Phi = psi o W, one per phase point.
std::vector<ChannelEquation> transported_equations(const WignerRep& w, const StateSpace& k,
                                                   const AffineMap& psi);

ChannelSearch find_transported_channel(const WignerRep& w, const StateSpace& k,
                                       const AffineMap& psi);

struct SymmetryForChannel {
  std::optional<AffineMap> map;
  /// Two states with W(x) == W(y) but W(Phi(x)) != W(Phi(y)).
  std::optional<std::pair<Vector, Vector>> witness;
  std::optional<std::pair<std::size_t, std::size_t>> witness_vertices;
  bool found() const { return map.has_value(); }
};

/// Psi with Psi o W = W o Phi on K, if any.
SymmetryForChannel find_symmetry_for_channel(const WignerRep& w, const StateSpace& k,
                                             const Channel& phi);

/// Phi = W^-1 o lift(phi) o W. Requires W faithful and lift(phi) a symmetry.
Channel induced_action(const WignerRep& w, const StateSpace& k, const PhasePointMap& phi);

// ---------------------------------------------------------------------------
// Covariance under S_A x S_B

/// (g1, g2) acting by (a, b) |-> (g1[a], g2[b]).
struct ProductPermutation {
  std::vector<std::size_t> g1;
  std::vector<std::size_t> g2;

  static ProductPermutation identity(std::size_t na, std::size_t nb);
  ProductPermutation inverse() const;
  friend bool operator==(const ProductPermutation&, const ProductPermutation&) = default;
  friend auto operator<=>(const ProductPermutation&, const ProductPermutation&) = default;
};

/// (g o h)(a, b) = g(h(a, b)).
ProductPermutation compose(const ProductPermutation& g, const ProductPermutation& h);

/// Adjacent transpositions of each factor.
std::vector<ProductPermutation> product_generators(std::size_t na, std::size_t nb);

PhasePointMap phase_map(const ProductPermutation& g);

struct GroupSymmetry {
  bool symmetric = true;
  std::size_t group_size = 0;
  std::optional<PhasePointMap> failing;
  SymmetryCheck detail;
};

/// Closes the generators under composition (at most 10^4 elements) and tests
/// every lifted element.
GroupSymmetry is_group_symmetric(const WignerRep& w, const StateSpace& k,
                                 const std::vector<PhasePointMap>& generators);

/// A channel for a group element, satisfying f_a o Phi = f_{g1^-1 a} and
/// likewise for B.
struct GroupChannel {
  ProductPermutation element;
  AffineMap map;
};

struct PermutationChannels {
  std::vector<GroupChannel> channels;  // closure of the generators
  /// Set when a generator admits no channel.
  std::optional<ProductPermutation> failing;
  std::optional<ChannelSearch> search;
  bool found() const { return !failing.has_value(); }
};

/// Channels realising every element of S_A x S_B. Polytope K searches by LP;
/// a ball K needs `supplied` maps for the generators, which are verified.
/// Equations f o Phi = f' tying a channel to the outcome permutation g.
std::vector<ChannelEquation> permutation_equations(const Observable& a, const Observable& b,
                                                   const ProductPermutation& g);

PermutationChannels find_permutation_channels(const Observable& a, const Observable& b,
                                              const StateSpace& k,
                                              const std::vector<GroupChannel>& supplied = {});

struct CovariantHypotheses {
  bool info_complete = false;
  std::optional<bool> complementary;  // unset when undecidable on this geometry
  bool surjective_a = false;
  bool surjective_b = false;
};

struct CovariantSolution {
  enum class Status { unique, none, family, hypothesis_failure };
  Status status = Status::none;
  CovariantHypotheses hypotheses;
  std::string message;
  PermutationChannels channels;
  std::optional<WignerRep> rep;
  /// Directions of the solution set when it is not a single point.
  std::vector<FunctionalGrid> directions;
  /// Linear system in the chart coordinates of the q_ab.
  LinearProgram system;
  std::optional<InfeasibilityCertificate> certificate;
  /// Every lifted generator was re-checked as a symmetry of W(K).
  bool verified = false;
};

/// Marginal and covariance equalities over the chart values of every q_ab.
/// `channels` must contain each adjacent-transposition generator.
LinearProgram covariant_system(const Observable& a, const Observable& b, const StateSpace& k,
                               const std::vector<GroupChannel>& channels);

CovariantSolution solve_covariant(const Observable& a, const Observable& b, const StateSpace& k,
                                  const std::vector<GroupChannel>& supplied = {});

}  // namespace wignerlab
