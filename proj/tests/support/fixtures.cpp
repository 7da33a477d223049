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

#include "fixtures.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <numeric>
#include <optional>

namespace blockdm::testing {

FieldSpec Gf2() { return FieldSpec::Prime(2); }

PartitionedMatrix ReferenceInstance() {
  return PartitionedMatrix(Matrix::FromIntegers(Gf2(), {{1, 0, 1, 1, 0, 0},
                                                        {0, 0, 1, 1, 1, 1},
                                                        {1, 1, 1, 1, 1, 0},
                                                        {0, 0, 0, 0, 1, 0},
                                                        {1, 0, 1, 1, 1, 0},
                                                        {1, 0, 1, 1, 0, 0}}),
                           {2, 2, 2}, {2, 2, 2});
}

Matrix KnownE() {
  return Matrix::FromIntegers(Gf2(), {{0, 0, 0, 1, 0, 0},
                                      {1, 0, 0, 0, 0, 0},
                                      {0, 1, 0, 0, 0, 0},
                                      {0, 0, 0, 0, 0, 1},
                                      {0, 0, 0, 0, 1, 0},
                                      {0, 0, 1, 0, 1, 0}});
}

Matrix KnownF() {
  return Matrix::FromIntegers(Gf2(), {{0, 0, 0, 0, 1, 0},
                                      {0, 0, 1, 0, 0, 0},
                                      {1, 0, 0, 1, 0, 0},
                                      {1, 0, 0, 0, 0, 0},
                                      {0, 0, 0, 0, 0, 1},
                                      {0, 1, 0, 0, 0, 0}});
}

Matrix KnownADm() {
  return Matrix::FromIntegers(Gf2(), {{0, 1, 0, 1, 0, 1},
                                      {0, 0, 1, 1, 1, 1},
                                      {0, 0, 0, 1, 1, 0},
                                      {0, 0, 0, 1, 1, 0},
                                      {0, 0, 0, 0, 0, 1},
                                      {0, 0, 0, 0, 0, 1}});
}

std::vector<std::pair<std::size_t, std::size_t>> KnownDiagBlocks() {
  return {{0, 1}, {1, 1}, {1, 1}, {2, 2}, {2, 1}};
}

std::string ReferenceJson() {
  return R"({
  "field": {"kind": "gf", "p": 2},
  "row_blocks": [2, 2, 2],
  "col_blocks": [2, 2, 2],
  "entries": [
    ["1", "0", "1", "1", "0", "0"],
    ["0", "0", "1", "1", "1", "1"],
    ["1", "1", "1", "1", "1", "0"],
    ["0", "0", "0", "0", "1", "0"],
    ["1", "0", "1", "1", "1", "0"],
    ["1", "0", "1", "1", "0", "0"]
  ]
}
)";
}

std::size_t VertexByLabel(const StabilityGraph& g, const std::string& label) {
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    if (g.Label(v) == label) return v;
  }
  std::cerr << "no vertex labelled " << label << '\n';
  std::abort();
}

std::vector<std::string> LabelsOf(const StabilityGraph& g, const std::vector<std::size_t>& globals) {
  std::vector<std::string> out;
  for (std::size_t v : globals) out.push_back(g.Label(v));
  std::sort(out.begin(), out.end());
  return out;
}

FieldElement RandomElement(Rng& rng, const FieldSpec& field) {
  if (field.is_prime_field()) {
    return FieldElement::FromInteger(field, std::uniform_int_distribution<std::int64_t>(0, field.modulus() - 1)(rng));
  }
  std::int64_t num = std::uniform_int_distribution<std::int64_t>(-9, 9)(rng);
  std::int64_t den = std::uniform_int_distribution<std::int64_t>(1, 5)(rng);
  return FieldElement::FromFraction(field, num, den);
}

FieldElement RandomNonzero(Rng& rng, const FieldSpec& field) {
  for (;;) {
    FieldElement x = RandomElement(rng, field);
    if (!x.IsZero()) return x;
  }
}

Vector RandomNonzeroVector(Rng& rng, const FieldSpec& field, std::size_t n) {
  for (;;) {
    Vector v(field, n);
    for (std::size_t i = 0; i < n; ++i) v[i] = RandomElement(rng, field);
    if (!v.IsZero()) return v;
  }
}

Matrix RandomMatrix(Rng& rng, const FieldSpec& field, std::size_t rows, std::size_t cols) {
  Matrix m(field, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = RandomElement(rng, field);
  }
  return m;
}

Matrix RandomNonsingular(Rng& rng, const FieldSpec& field, std::size_t n) {
  for (;;) {
    Matrix m = RandomMatrix(rng, field, n, n);
    if (Rank(m) == n) return m;
  }
}

std::vector<std::size_t> RandomBlockSizes(Rng& rng, std::size_t count, std::size_t max_dim) {
  std::uniform_int_distribution<std::size_t> dim(1, max_dim);
  std::vector<std::size_t> sizes(count);
  for (auto& s : sizes) s = dim(rng);
  return sizes;
}

namespace {

PartitionedMatrix FillBlocks(const FieldSpec& field, const std::vector<std::size_t>& row_blocks,
                             const std::vector<std::size_t>& col_blocks,
                             const std::function<std::optional<Matrix>(std::size_t, std::size_t)>& block) {
  const std::size_t n = std::accumulate(row_blocks.begin(), row_blocks.end(), std::size_t{0});
  const std::size_t m = std::accumulate(col_blocks.begin(), col_blocks.end(), std::size_t{0});
  Matrix a(field, n, m);
  std::size_t r0 = 0;
  for (std::size_t alpha = 0; alpha < row_blocks.size(); ++alpha) {
    std::size_t c0 = 0;
    for (std::size_t beta = 0; beta < col_blocks.size(); ++beta) {
      if (auto b = block(alpha, beta)) {
        for (std::size_t i = 0; i < b->rows(); ++i) {
          for (std::size_t j = 0; j < b->cols(); ++j) a(r0 + i, c0 + j) = (*b)(i, j);
        }
      }
      c0 += col_blocks[beta];
    }
    r0 += row_blocks[alpha];
  }
  return PartitionedMatrix(std::move(a), row_blocks, col_blocks);
}

Matrix Outer(const FieldElement& c, const Vector& u, const Vector& v) {
  Matrix b(u.field(), u.size(), v.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) b(i, j) = c * u[i] * v[j];
  }
  return b;
}

}  // namespace

PartitionedMatrix RandomRank1Matrix(Rng& rng, const FieldSpec& field, const std::vector<std::size_t>& row_blocks,
                                    const std::vector<std::size_t>& col_blocks, double zero_probability) {
  std::bernoulli_distribution zero(zero_probability);
  return FillBlocks(field, row_blocks, col_blocks, [&](std::size_t alpha, std::size_t beta) -> std::optional<Matrix> {
    if (zero(rng)) return std::nullopt;
    return Outer(RandomNonzero(rng, field), RandomNonzeroVector(rng, field, row_blocks[alpha]),
                 RandomNonzeroVector(rng, field, col_blocks[beta]));
  });
}

PartitionedMatrix RandomInstance(Rng& rng, const FieldSpec& field, const InstanceOptions& options) {
  std::uniform_int_distribution<std::size_t> count(options.min_blocks, options.max_blocks);
  std::size_t mu = count(rng);
  std::size_t nu = count(rng);
  return RandomRank1Matrix(rng, field, RandomBlockSizes(rng, mu, options.max_block_dim),
                           RandomBlockSizes(rng, nu, options.max_block_dim), options.zero_probability);
}

PartitionedMatrix RandomGenericRational(Rng& rng, const std::vector<std::size_t>& row_blocks,
                                        const std::vector<std::size_t>& col_blocks, double zero_probability) {
  const FieldSpec q = FieldSpec::Rationals();
  std::bernoulli_distribution zero(zero_probability);
  std::uniform_int_distribution<std::int64_t> small(0, 2);
  std::uniform_int_distribution<std::int64_t> coefficient(1, 1000000);
  auto small_vector = [&](std::size_t n) {
    for (;;) {
      Vector v(q, n);
      for (std::size_t i = 0; i < n; ++i) v[i] = FieldElement::FromInteger(q, small(rng));
      if (!v.IsZero()) return v;
    }
  };
  return FillBlocks(q, row_blocks, col_blocks, [&](std::size_t alpha, std::size_t beta) -> std::optional<Matrix> {
    if (zero(rng)) return std::nullopt;
    return Outer(FieldElement::FromInteger(q, coefficient(rng)), small_vector(row_blocks[alpha]),
                 small_vector(col_blocks[beta]));
  });
}

PartitionedMatrix RandomUnitBlockMatrix(Rng& rng, std::size_t n, std::size_t m, double density) {
  const FieldSpec f = Gf2();
  std::bernoulli_distribution bit(density);
  Matrix a(f, n, m);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < m; ++c) a(r, c) = FieldElement::FromInteger(f, bit(rng) ? 1 : 0);
  }
  return PartitionedMatrix(std::move(a), std::vector<std::size_t>(n, 1), std::vector<std::size_t>(m, 1));
}

PartitionedMatrix RandomAdmissibleTransform(Rng& rng, const PartitionedMatrix& a) {
  const FieldSpec& field = a.field();
  std::vector<std::size_t> row_perm(a.num_row_blocks());
  std::vector<std::size_t> col_perm(a.num_col_blocks());
  std::iota(row_perm.begin(), row_perm.end(), 0);
  std::iota(col_perm.begin(), col_perm.end(), 0);
  std::shuffle(row_perm.begin(), row_perm.end(), rng);
  std::shuffle(col_perm.begin(), col_perm.end(), rng);

  std::vector<Matrix> e;
  std::vector<Matrix> f;
  for (std::size_t n : a.row_blocks()) e.push_back(RandomNonsingular(rng, field, n));
  for (std::size_t m : a.col_blocks()) f.push_back(RandomNonsingular(rng, field, m));

  std::vector<std::size_t> row_blocks;
  std::vector<std::size_t> col_blocks;
  for (std::size_t alpha : row_perm) row_blocks.push_back(a.row_blocks()[alpha]);
  for (std::size_t beta : col_perm) col_blocks.push_back(a.col_blocks()[beta]);
  // New block (i, j) is E_a^T A_ab F_b for a = row_perm[i], b = col_perm[j].
  return FillBlocks(field, row_blocks, col_blocks, [&](std::size_t i, std::size_t j) -> std::optional<Matrix> {
    const std::size_t alpha = row_perm[i];
    const std::size_t beta = col_perm[j];
    return e[alpha].Transpose() * a.Block(alpha, beta) * f[beta];
  });
}

std::vector<std::size_t> MiddleBlockSizes(const Decomposition& d) {
  std::vector<std::size_t> sizes;
  for (std::size_t i = 1; i + 1 < d.diag_blocks.size(); ++i) sizes.push_back(d.diag_blocks[i].first);
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

}  // namespace blockdm::testing
