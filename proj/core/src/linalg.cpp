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

#include "blockdm/linalg.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "blockdm/errors.hpp"

namespace blockdm {

Vector::Vector(const FieldSpec& field, std::size_t size)
    : field_(field), entries_(size, FieldElement::Zero(field)) {}

Vector::Vector(const FieldSpec& field, std::vector<FieldElement> entries)
    : field_(field), entries_(std::move(entries)) {
  for (const auto& e : entries_) {
    if (!(e.field() == field_)) throw UsageError("vector entry from a different field");
  }
}

Vector Vector::FromIntegers(const FieldSpec& field, std::initializer_list<std::int64_t> values) {
  std::vector<FieldElement> entries;
  entries.reserve(values.size());
  for (std::int64_t v : values) entries.push_back(FieldElement::FromInteger(field, v));
  return Vector(field, std::move(entries));
}

bool Vector::IsZero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const FieldElement& e) { return e.IsZero(); });
}

std::size_t Vector::LeadingIndex() const {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (!entries_[i].IsZero()) return i;
  }
  return entries_.size();
}

Vector Vector::Monic() const {
  std::size_t lead = LeadingIndex();
  if (lead == entries_.size()) return *this;
  FieldElement scale = entries_[lead].Inverse();
  Vector out = *this;
  for (auto& e : out.entries_) e *= scale;
  return out;
}

bool Vector::IsMonic() const {
  std::size_t lead = LeadingIndex();
  return lead < entries_.size() && entries_[lead].IsOne();
}

FieldElement Vector::Dot(const Vector& other) const {
  if (other.size() != size()) throw UsageError("dot product of vectors of different length");
  FieldElement sum = FieldElement::Zero(field_);
  for (std::size_t i = 0; i < entries_.size(); ++i) sum += entries_[i] * other.entries_[i];
  return sum;
}

std::string Vector::ToString() const {
  std::string out = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i > 0) out += ' ';
    out += entries_[i].ToString();
  }
  return out + ")";
}

std::strong_ordering operator<=>(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) return a.size() <=> b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (auto c = a[i] <=> b[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

Matrix::Matrix(const FieldSpec& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, FieldElement::Zero(field)) {}

Matrix Matrix::Identity(const FieldSpec& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = FieldElement::One(field);
  return m;
}

Matrix Matrix::FromIntegers(const FieldSpec& field,
                            std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  std::size_t cols = rows.size() == 0 ? 0 : rows.begin()->size();
  Matrix m(field, rows.size(), cols);
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != cols) throw UsageError("ragged matrix literal");
    std::size_t c = 0;
    for (std::int64_t v : row) m(r, c++) = FieldElement::FromInteger(field, v);
    ++r;
  }
  return m;
}

Matrix Matrix::FromRows(const FieldSpec& field, std::size_t cols, std::span<const Vector> rows) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw UsageError("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::FromColumns(const FieldSpec& field, std::size_t rows, std::span<const Vector> cols) {
  Matrix m(field, rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw UsageError("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Vector Matrix::Row(std::size_t r) const {
  return Vector(field_, std::vector<FieldElement>(entries_.begin() + r * cols_,
                                                  entries_.begin() + (r + 1) * cols_));
}

Vector Matrix::Column(std::size_t c) const {
  Vector v(field_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::Transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

Matrix Matrix::Submatrix(std::size_t row0, std::size_t col0, std::size_t rows, std::size_t cols) const {
  if (row0 + rows > rows_ || col0 + cols > cols_) throw UsageError("submatrix out of range");
  Matrix s(field_, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) s(r, c) = (*this)(row0 + r, col0 + c);
  }
  return s;
}

bool Matrix::IsZero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const FieldElement& e) { return e.IsZero(); });
}

bool Matrix::IsIdentity() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      const FieldElement& e = (*this)(r, c);
      if (r == c ? !e.IsOne() : !e.IsZero()) return false;
    }
  }
  return true;
}

bool Matrix::IsUpperTriangular() const {
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < std::min(r, cols_); ++c) {
      if (!(*this)(r, c).IsZero()) return false;
    }
  }
  return true;
}

bool Matrix::IsLowerTriangular() const { return Transpose().IsUpperTriangular(); }

std::string Matrix::ToString() const {
  std::ostringstream out;
  for (std::size_t r = 0; r < rows_; ++r) {
    out << '[';
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c > 0) out << ' ';
      out << (*this)(r, c).ToString();
    }
    out << "]\n";
  }
  return out.str();
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw UsageError("matrix product shape mismatch");
  if (!(a.field_ == b.field_)) throw UsageError("matrix product over different fields");
  Matrix p(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const FieldElement& aik = a(i, k);
      if (aik.IsZero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b(k, j).IsZero()) p(i, j) += aik * b(k, j);
      }
    }
  }
  return p;
}

Vector operator*(const Matrix& a, const Vector& x) {
  if (a.cols_ != x.size()) throw UsageError("matrix-vector shape mismatch");
  Vector y(a.field_, a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (!a(i, k).IsZero() && !x[k].IsZero()) y[i] += a(i, k) * x[k];
    }
  }
  return y;
}

RrefResult Rref(const Matrix& m) {
  Matrix r = m;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < r.cols() && row < r.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < r.rows() && r(pivot, col).IsZero()) ++pivot;
    if (pivot == r.rows()) continue;
    if (pivot != row) {
      for (std::size_t c = 0; c < r.cols(); ++c) std::swap(r(pivot, c), r(row, c));
    }
    FieldElement scale = r(row, col).Inverse();
    for (std::size_t c = col; c < r.cols(); ++c) r(row, c) *= scale;
    for (std::size_t other = 0; other < r.rows(); ++other) {
      if (other == row || r(other, col).IsZero()) continue;
      FieldElement factor = r(other, col);
      for (std::size_t c = col; c < r.cols(); ++c) {
        if (!r(row, c).IsZero()) r(other, c) -= factor * r(row, c);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  std::size_t rank = pivots.size();
  return RrefResult{std::move(r), std::move(pivots), rank};
}

std::size_t Rank(const Matrix& m) { return Rref(m).rank; }

std::size_t Rank(const FieldSpec& field, std::size_t dim, std::span<const Vector> vectors) {
  SpanBuilder span(field, dim);
  for (const auto& v : vectors) span.Add(v);
  return span.rank();
}

std::vector<Vector> KernelBasis(const Matrix& m) {
  RrefResult rref = Rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : rref.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.field(), m.cols());
    v[free] = FieldElement::One(m.field());
    for (std::size_t r = 0; r < rref.rank; ++r) v[rref.pivots[r]] = -rref.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Matrix Invert(const Matrix& m) {
  if (m.rows() != m.cols()) throw UsageError("cannot invert a non-square matrix");
  std::size_t n = m.rows();
  Matrix augmented(m.field(), n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) augmented(r, c) = m(r, c);
    augmented(r, n + r) = FieldElement::One(m.field());
  }
  RrefResult rref = Rref(augmented);
  if (rref.rank < n || (n > 0 && rref.pivots[n - 1] != n - 1)) {
    throw SingularMatrixError("matrix is singular");
  }
  return rref.reduced.Submatrix(0, n, n, n);
}

Rank1Factorization Rank1Factor(const Matrix& m) {
  std::size_t rank = Rank(m);
  if (rank == 0) return ZeroBlock{};
  if (rank >= 2) return HigherRankBlock{rank};
  std::size_t row = 0;
  while (m.Row(row).IsZero()) ++row;
  Vector v = m.Row(row).Monic();
  std::size_t lead_col = v.LeadingIndex();
  Vector u = m.Column(lead_col).Monic();
  // u and v both have a 1 at their leading index, so c is the entry there.
  FieldElement c = m(u.LeadingIndex(), lead_col);
  return RankOneBlock{std::move(u), std::move(v), std::move(c)};
}

std::vector<Vector> CompleteToBasis(const FieldSpec& field, std::span<const Vector> rows,
                                    std::size_t dim) {
  if (rows.size() > dim) throw PreconditionError("more rows than the dimension");
  SpanBuilder span(field, dim);
  for (const auto& r : rows) {
    if (r.size() != dim) throw UsageError("row length does not match the dimension");
    if (!span.Add(r)) throw PreconditionError("rows to complete are linearly dependent");
  }
  std::vector<Vector> added;
  for (std::size_t i = 0; i < dim && span.rank() < dim; ++i) {
    Vector unit(field, dim);
    unit[i] = FieldElement::One(field);
    if (span.Add(unit)) added.push_back(std::move(unit));
  }
  return added;
}

Matrix TriangularizingTransform(const Matrix& r, Triangle /*orientation*/) { return Invert(r); }

SpanBuilder::SpanBuilder(const FieldSpec& field, std::size_t dim) : field_(field), dim_(dim) {}

Vector SpanBuilder::Reduce(Vector v) const {
  if (v.size() != dim_) throw UsageError("vector length does not match the span dimension");
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    FieldElement coef = v[pivots_[i]];
    if (coef.IsZero()) continue;
    for (std::size_t c = 0; c < dim_; ++c) {
      if (!basis_[i][c].IsZero()) v[c] -= coef * basis_[i][c];
    }
  }
  return v;
}

bool SpanBuilder::Add(const Vector& v) {
  Vector reduced = Reduce(v);
  std::size_t lead = reduced.LeadingIndex();
  if (lead == dim_) return false;
  basis_.push_back(reduced.Monic());
  pivots_.push_back(lead);
  return true;
}

bool SpanBuilder::Contains(const Vector& v) const { return Reduce(v).IsZero(); }

}  // namespace blockdm
