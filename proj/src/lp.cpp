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

#include "wignerlab/lp.hpp"

#include "wignerlab/errors.hpp"
#include "wignerlab/linalg.hpp"

namespace wignerlab {

void LinearProgram::add_equality(Vector row, Rational rhs) {
  equalities.push_back({std::move(row), std::move(rhs)});
}

void LinearProgram::add_inequality(Vector row, Rational rhs) {
  inequalities.push_back({std::move(row), std::move(rhs)});
}

void LinearProgram::check_well_formed() const {
  for (const auto& c : equalities)
    if (c.row.size() != variables) throw PreconditionError("equality row has wrong length");
  for (const auto& c : inequalities)
    if (c.row.size() != variables) throw PreconditionError("inequality row has wrong length");
}

bool satisfies(const LinearProgram& program, const Vector& x) {
  if (x.size() != program.variables) return false;
  for (const auto& c : program.equalities)
    if (dot(c.row, x) != c.rhs) return false;
  for (const auto& c : program.inequalities)
    if (dot(c.row, x) < c.rhs) return false;
  return true;
}

bool verifies(const LinearProgram& program, const InfeasibilityCertificate& cert) {
  if (cert.equality_multipliers.size() != program.equalities.size() ||
      cert.inequality_multipliers.size() != program.inequalities.size())
    return false;
  Vector combined = zeros(program.variables);
  Rational rhs = 0;
  for (std::size_t i = 0; i < program.equalities.size(); ++i) {
    const Rational& y = cert.equality_multipliers[i];
    if (y == 0) continue;
    if (program.equalities[i].row.size() != program.variables) return false;
    combined = combined + y * program.equalities[i].row;
    rhs += y * program.equalities[i].rhs;
  }
  for (std::size_t i = 0; i < program.inequalities.size(); ++i) {
    const Rational& y = cert.inequality_multipliers[i];
    if (y < 0) return false;
    if (y == 0) continue;
    if (program.inequalities[i].row.size() != program.variables) return false;
    combined = combined + y * program.inequalities[i].row;
    rhs += y * program.inequalities[i].rhs;
  }
  return is_zero(combined) && rhs == cert.gap && cert.gap > 0;
}

namespace {

// Phase-one tableau for  M z + a = c,  z, a >= 0,  minimize sum(a).
// Column layout: x+ (n) | x- (n) | slack (inequalities) | artificial (rows) | rhs.
// Inequalities of the form `c x_j >= 0` (c > 0) become sign restrictions on x_j
// instead of rows; x-_j is then left empty.
class Tableau {
 public:
  explicit Tableau(const LinearProgram& p)
      : n_(p.variables), eq_(p.equalities.size()), in_(p.inequalities.size()), bound_of_(in_, n_),
        nonneg_(n_, false) {
    for (std::size_t i = 0; i < in_; ++i) {
      const LinearConstraint& c = p.inequalities[i];
      if (c.rhs != 0) continue;
      std::size_t nz = n_, count = 0;
      for (std::size_t j = 0; j < n_; ++j)
        if (c.row[j] != 0) {
          nz = j;
          ++count;
        }
      if (count == 1 && c.row[nz] > 0 && !nonneg_[nz]) {
        nonneg_[nz] = true;
        bound_of_[i] = nz;
      }
    }
    for (std::size_t i = 0; i < eq_; ++i) origin_.push_back(i);
    for (std::size_t i = 0; i < in_; ++i)
      if (bound_of_[i] == n_) origin_.push_back(eq_ + i);
    rows_ = origin_.size();
    art_begin_ = 2 * n_ + in_;
    cols_ = art_begin_ + rows_;
    t_ = Matrix(rows_, cols_ + 1);
    cost_ = zeros(cols_ + 1);
    sign_.assign(rows_, 1);
    basis_.assign(rows_, 0);

    for (std::size_t i = 0; i < rows_; ++i) {
      const std::size_t o = origin_[i];
      const LinearConstraint& c = o < eq_ ? p.equalities[o] : p.inequalities[o - eq_];
      int s = c.rhs < 0 ? -1 : 1;
      sign_[i] = s;
      for (std::size_t j = 0; j < n_; ++j) {
        if (c.row[j] == 0) continue;
        t_(i, j) = s * c.row[j];
        if (!nonneg_[j]) t_(i, n_ + j) = -s * c.row[j];
      }
      if (o >= eq_) t_(i, 2 * n_ + (o - eq_)) = -s;
      t_(i, art_begin_ + i) = 1;
      t_(i, cols_) = s * c.rhs;
      basis_[i] = art_begin_ + i;
    }
    // Reduced costs: artificial columns cost 1, so r_j = -sum_i t_ij off the basis.
    for (std::size_t j = 0; j <= cols_; ++j) {
      if (j >= art_begin_ && j < cols_) continue;
      Rational s = 0;
      for (std::size_t i = 0; i < rows_; ++i) s += t_(i, j);
      cost_[j] = -s;
    }
  }

  void run() {
    for (;;) {
      std::size_t entering = cols_;
      for (std::size_t j = 0; j < cols_; ++j)
        if (cost_[j] < 0) {
          entering = j;
          break;
        }
      if (entering == cols_) return;

      std::size_t leaving = rows_;
      Rational best;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (t_(i, entering) <= 0) continue;
        Rational ratio = t_(i, cols_) / t_(i, entering);
        if (leaving == rows_ || ratio < best || (ratio == best && basis_[i] < basis_[leaving])) {
          leaving = i;
          best = ratio;
        }
      }
      // Phase one is bounded below by zero, so some row always qualifies.
      if (leaving == rows_) throw Error("simplex: unbounded phase-one problem");
      pivot(leaving, entering);
    }
  }

  Rational objective() const { return -cost_[cols_]; }

  Vector witness() const {
    Vector z = zeros(cols_);
    for (std::size_t i = 0; i < rows_; ++i) z[basis_[i]] = t_(i, cols_);
    Vector x = zeros(n_);
    for (std::size_t j = 0; j < n_; ++j) x[j] = z[j] - z[n_ + j];
    return x;
  }

  InfeasibilityCertificate certificate(const LinearProgram& p) const {
    InfeasibilityCertificate cert;
    cert.equality_multipliers = zeros(eq_);
    cert.inequality_multipliers = zeros(in_);
    Vector combined = zeros(n_);
    for (std::size_t i = 0; i < rows_; ++i) {
      // Dual value of row i recovered from the reduced cost of its artificial column.
      Rational u = sign_[i] * (1 - cost_[art_begin_ + i]);
      const std::size_t o = origin_[i];
      if (u == 0) continue;
      if (o < eq_) {
        cert.equality_multipliers[o] = u;
        combined = combined + u * p.equalities[o].row;
      } else {
        cert.inequality_multipliers[o - eq_] = u;
        combined = combined + u * p.inequalities[o - eq_].row;
      }
    }
    // Sign restrictions absorb what is left on their variable.
    for (std::size_t i = 0; i < in_; ++i) {
      const std::size_t j = bound_of_[i];
      if (j == n_) continue;
      cert.inequality_multipliers[i] = -combined[j] / p.inequalities[i].row[j];
    }
    cert.gap = objective();
    return cert;
  }

 private:
  void pivot(std::size_t r, std::size_t c) {
    Rational inv = 1 / t_(r, c);
    for (std::size_t j = 0; j <= cols_; ++j)
      if (t_(r, j) != 0) t_(r, j) *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || t_(i, c) == 0) continue;
      Rational f = t_(i, c);
      for (std::size_t j = 0; j <= cols_; ++j)
        if (t_(r, j) != 0) t_(i, j) -= f * t_(r, j);
    }
    if (cost_[c] != 0) {
      Rational f = cost_[c];
      for (std::size_t j = 0; j <= cols_; ++j)
        if (t_(r, j) != 0) cost_[j] -= f * t_(r, j);
    }
    basis_[r] = c;
  }

  std::size_t n_, eq_, in_;
  std::vector<std::size_t> bound_of_;  // variable restricted by inequality i, or n_
  std::vector<bool> nonneg_;
  std::vector<std::size_t> origin_;    // constraint index (equalities first) of each row
  std::size_t rows_ = 0, art_begin_ = 0, cols_ = 0;
  Matrix t_{0, 0};
  Vector cost_;
  std::vector<int> sign_;
  std::vector<std::size_t> basis_;
};

}  // namespace

FeasibilityResult lp_feasible(const LinearProgram& program) {
  program.check_well_formed();
  Tableau tableau(program);
  tableau.run();
  if (tableau.objective() == 0) {
    Vector x = tableau.witness();
    if (!satisfies(program, x)) throw Error("simplex: witness failed verification");
    return FeasibilityResult(std::move(x));
  }
  InfeasibilityCertificate cert = tableau.certificate(program);
  if (!verifies(program, cert)) throw Error("simplex: certificate failed verification");
  return FeasibilityResult(std::move(cert));
}

}  // namespace wignerlab
