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
#include <vector>

#include "wignerlab/rational.hpp"

namespace wignerlab {

/// Dense row-major rational matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  /// Builds from a list of equally long rows; `cols` is used when `rows` is empty.
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols = 0);
  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector col(std::size_t c) const;
  Matrix transpose() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Vector operator*(const Matrix& a, const Vector& x);
Matrix operator*(const Rational& s, const Matrix& m);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);

/// Reduced row echelon form together with the pivot column of each nonzero row.
struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

RowEchelon row_reduce(Matrix m);

std::size_t rank(const Matrix& m);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

/// Determinant of a square matrix.
Rational determinant(const Matrix& m);

/// Solution set {particular + span(nullspace)} of A x = b.
struct AffineSolution {
  Vector particular;
  std::vector<Vector> nullspace;
};

/// Solves A x = b exactly. Free variables of the particular solution are zero.
/// Returns nullopt when rank(A) < rank([A|b]).
std::optional<AffineSolution> solve_affine(const Matrix& a, const Vector& b);

/// Basis of ker(A).
std::vector<Vector> nullspace(const Matrix& a);

/// True iff the symmetric matrix is positive semidefinite; checks every
/// principal minor, which is exact but exponential in the size.
bool is_positive_semidefinite(const Matrix& symmetric);

}  // namespace wignerlab
