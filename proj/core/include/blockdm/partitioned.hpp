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

#ifndef BLOCKDM_PARTITIONED_HPP_
#define BLOCKDM_PARTITIONED_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "blockdm/linalg.hpp"

namespace blockdm {

// An n x m matrix of type (n_1, ..., n_mu; m_1, ..., m_nu). Block indices in
// this API are 0-based; user-facing labels (DOT, result documents) are
// 1-based.
class PartitionedMatrix {
 public:
  // Throws UsageError if the block sizes are empty, contain a zero, or do not
  // sum to the matrix shape.
  PartitionedMatrix(Matrix matrix, std::vector<std::size_t> row_blocks,
                    std::vector<std::size_t> col_blocks);

  const Matrix& matrix() const { return matrix_; }
  const FieldSpec& field() const { return matrix_.field(); }
  std::size_t rows() const { return matrix_.rows(); }
  std::size_t cols() const { return matrix_.cols(); }
  const std::vector<std::size_t>& row_blocks() const { return row_blocks_; }
  const std::vector<std::size_t>& col_blocks() const { return col_blocks_; }
  std::size_t num_row_blocks() const { return row_blocks_.size(); }
  std::size_t num_col_blocks() const { return col_blocks_.size(); }
  // Global index of the first row of row block `alpha`.
  std::size_t row_offset(std::size_t alpha) const { return row_offsets_.at(alpha); }
  std::size_t col_offset(std::size_t beta) const { return col_offsets_.at(beta); }
  // Row block containing global row `r`.
  std::size_t RowBlockOf(std::size_t r) const;
  std::size_t ColBlockOf(std::size_t c) const;

  // Copy of A_{alpha beta}. Throws UsageError when out of range.
  Matrix Block(std::size_t alpha, std::size_t beta) const;

 private:
  Matrix matrix_;
  std::vector<std::size_t> row_blocks_;
  std::vector<std::size_t> col_blocks_;
  std::vector<std::size_t> row_offsets_;
  std::vector<std::size_t> col_offsets_;
};

struct BlockFactor {
  std::size_t row_block;
  std::size_t col_block;
  Rank1Factorization factor;
};

// Factors every block. Throws RankConditionViolated listing all blocks of
// rank >= 2.
std::vector<BlockFactor> CheckRank1Condition(const PartitionedMatrix& a);

enum class Side { kRow, kCol };

// A hyperplane ker A_ab^T (row side) or ker A_ab (column side), identified by
// its monic normal vector within its block.
struct HyperplaneVertex {
  Side side;
  std::size_t block;
  Vector normal;

  friend bool operator==(const HyperplaneVertex&, const HyperplaneVertex&) = default;
};

// Short label: 1-based block, a prime for the column side, then a letter for
// the 2-dimensional normals (1 0) = a, (0 1) = b, (1 1) = c, or the normal
// itself otherwise. E.g. "1a", "3'c", "2(1 2 0)".
std::string VertexLabel(const HyperplaneVertex& v);

struct StabilityEdge {
  std::size_t pi;
  std::size_t sigma;
  std::size_t row_block;
  std::size_t col_block;
  FieldElement coefficient;
};

// Bipartite graph G = (Pi, Sigma, E): one vertex per distinct hyperplane
// normal, one edge per rank-1 block. Vertices are ordered by block, then
// lexicographically by normal. Global vertex ids place Pi first, so Sigma
// vertex s has global id pi.size() + s.
struct StabilityGraph {
  FieldSpec field;
  std::vector<std::size_t> row_dims;
  std::vector<std::size_t> col_dims;
  std::vector<HyperplaneVertex> pi;
  std::vector<HyperplaneVertex> sigma;
  std::vector<StabilityEdge> edges;

  std::size_t num_vertices() const { return pi.size() + sigma.size(); }
  bool IsPi(std::size_t global) const { return global < pi.size(); }
  const HyperplaneVertex& Vertex(std::size_t global) const;
  std::string Label(std::size_t global) const { return VertexLabel(Vertex(global)); }
  // Global id of the vertex with the given side, block and normal, or
  // num_vertices() if absent.
  std::size_t Find(Side side, std::size_t block, const Vector& normal) const;
};

StabilityGraph BuildStabilityGraph(const PartitionedMatrix& a);

}  // namespace blockdm

#endif  // BLOCKDM_PARTITIONED_HPP_
