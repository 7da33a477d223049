// Copyright 2026 The Authors.
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

#ifndef BLOCKDM_LINALG_HPP_
#define BLOCKDM_LINALG_HPP_

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "blockdm/field.hpp"

namespace blockdm {

// A vector over a field. Used both as a row vector (hyperplane normals) and
// as a column vector (kernel and basis vectors); orientation is contextual.
class Vector {
 public:
  Vector(const FieldSpec& field, std::size_t size);
  Vector(const FieldSpec& field, std::vector<FieldElement> entries);
  // Convenience for tests and literals: integers mapped into `field`.
  static Vector FromIntegers(const FieldSpec& field, std::initializer_list<std::int64_t> values);

  const FieldSpec& field() const { return field_; }
  std::size_t size() const { return entries_.size(); }
  const FieldElement& operator[](std::size_t i) const { return entries_[i]; }
  FieldElement& operator[](std::size_t i) { return entries_[i]; }
  std::span<const FieldElement> entries() const { return entries_; }

  bool IsZero() const;
  // Index of the first nonzero entry, or size() for the zero vector.
  std::size_t LeadingIndex() const;
  // Scales so the first nonzero entry is 1. Zero vectors are returned as is.
  Vector Monic() const;
  bool IsMonic() const;

  FieldElement Dot(const Vector& other) const;

  std::string ToString() const;

  friend bool operator==(const Vector&, const Vector&) = default;
  // Lexicographic over entries; both sides must share field and size.
  friend std::strong_ordering operator<=>(const Vector& a, const Vector& b);

 private:
  FieldSpec field_;
  std::vector<FieldElement> entries_;
};

// Dense row-major matrix over a field.
class Matrix {
 public:
  Matrix(const FieldSpec& field, std::size_t rows, std::size_t cols);
  static Matrix Identity(const FieldSpec& field, std::size_t n);
  static Matrix FromIntegers(const FieldSpec& field,
                             std::initializer_list<std::initializer_list<std::int64_t>> rows);
  static Matrix FromRows(const FieldSpec& field, std::size_t cols, std::span<const Vector> rows);
  static Matrix FromColumns(const FieldSpec& field, std::size_t rows, std::span<const Vector> cols);

  const FieldSpec& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const FieldElement& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  FieldElement& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

  Vector Row(std::size_t r) const;
  Vector Column(std::size_t c) const;
  Matrix Transpose() const;
  Matrix Submatrix(std::size_t row0, std::size_t col0, std::size_t rows, std::size_t cols) const;
  bool IsZero() const;
  bool IsIdentity() const;
  bool IsUpperTriangular() const;
  bool IsLowerTriangular() const;

  std::string ToString() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& x);

 private:
  FieldSpec field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<FieldElement> entries_;
};

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

// Reduced row echelon form. Pivots are the first nonzero entry in column
// order; arithmetic is exact so no magnitude pivoting is done.
RrefResult Rref(const Matrix& m);

std::size_t Rank(const Matrix& m);
std::size_t Rank(const FieldSpec& field, std::size_t dim, std::span<const Vector> vectors);

// Basis of {y : M y = 0}, one vector per free column of rref(M), with the
// free coordinate set to 1.
std::vector<Vector> KernelBasis(const Matrix& m);

// Throws UsageError for non-square input and SingularMatrixError when
// singular.
Matrix Invert(const Matrix& m);

struct ZeroBlock {};
// M = c * u^T v with u, v monic.
struct RankOneBlock {
  Vector u;
  Vector v;
  FieldElement c;
};
struct HigherRankBlock {
  std::size_t rank = 0;
};
using Rank1Factorization = std::variant<ZeroBlock, RankOneBlock, HigherRankBlock>;

Rank1Factorization Rank1Factor(const Matrix& m);

// Extends linearly independent `rows` (each of length `dim`) to a basis of
// F^dim with standard unit vectors picked greedily by coordinate index.
// Returns only the added vectors. Throws PreconditionError if `rows` are
// dependent or too many.
std::vector<Vector> CompleteToBasis(const FieldSpec& field, std::span<const Vector> rows,
                                    std::size_t dim);

enum class Triangle { kUpper, kLower };

// Returns a nonsingular T such that R*T is upper (resp. lower) triangular.
// The choice is T = R^{-1}, so R*T = I satisfies both orientations.
Matrix TriangularizingTransform(const Matrix& r, Triangle orientation);

// Incremental span membership over F^dim, kept in reduced echelon form.
class SpanBuilder {
 public:
  SpanBuilder(const FieldSpec& field, std::size_t dim);

  // Adds `v` if it is outside the current span; returns whether it was added.
  bool Add(const Vector& v);
  bool Contains(const Vector& v) const;
  std::size_t rank() const { return basis_.size(); }

 private:
  Vector Reduce(Vector v) const;

  FieldSpec field_;
  std::size_t dim_;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace blockdm

#endif  // BLOCKDM_LINALG_HPP_
