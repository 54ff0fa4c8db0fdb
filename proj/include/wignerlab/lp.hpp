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
#include <variant>
#include <vector>

#include "wignerlab/rational.hpp"

namespace wignerlab {

/// One linear constraint `row . x (= or >=) rhs`.
struct LinearConstraint {
  Vector row;
  Rational rhs;
};

/// Feasibility problem over free real variables:
///   equalities:   row . x == rhs
///   inequalities: row . x >= rhs
struct LinearProgram {
  std::size_t variables = 0;
  std::vector<LinearConstraint> equalities;
  std::vector<LinearConstraint> inequalities;

  void add_equality(Vector row, Rational rhs);
  void add_inequality(Vector row, Rational rhs);
  /// Throws PreconditionError if a row has the wrong length.
  void check_well_formed() const;
};

/// Farkas multipliers: free on equalities, nonnegative on inequalities, such
/// that the combined rows vanish while the combined right-hand side `gap` is
/// positive, i.e. the program implies 0 >= gap > 0.
struct InfeasibilityCertificate {
  Vector equality_multipliers;
  Vector inequality_multipliers;
  Rational gap;
};

class FeasibilityResult {
 public:
  explicit FeasibilityResult(Vector witness) : value_(std::move(witness)) {}
  explicit FeasibilityResult(InfeasibilityCertificate cert) : value_(std::move(cert)) {}

  bool feasible() const { return std::holds_alternative<Vector>(value_); }
  const Vector& witness() const { return std::get<Vector>(value_); }
  const InfeasibilityCertificate& certificate() const {
    return std::get<InfeasibilityCertificate>(value_);
  }

 private:
  std::variant<Vector, InfeasibilityCertificate> value_;
};

/// Exact phase-one simplex with Bland's rule. The returned witness or
/// certificate has already been checked against the program.
FeasibilityResult lp_feasible(const LinearProgram& program);

bool satisfies(const LinearProgram& program, const Vector& x);

/// Pure arithmetic check of a Farkas certificate; no solver involved.
bool verifies(const LinearProgram& program, const InfeasibilityCertificate& cert);

}  // namespace wignerlab
