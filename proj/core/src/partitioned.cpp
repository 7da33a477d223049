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

#include "blockdm/partitioned.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>

#include "blockdm/errors.hpp"

namespace blockdm {
namespace {

std::vector<std::size_t> Offsets(const std::vector<std::size_t>& sizes) {
  std::vector<std::size_t> offsets(sizes.size() + 1, 0);
  std::partial_sum(sizes.begin(), sizes.end(), offsets.begin() + 1);
  return offsets;
}

void ValidateBlocks(const std::vector<std::size_t>& blocks, std::size_t total, const char* what) {
  if (blocks.empty()) throw UsageError(std::string("no ") + what + " blocks");
  if (std::find(blocks.begin(), blocks.end(), 0) != blocks.end()) {
    throw UsageError(std::string(what) + " block sizes must be positive");
  }
  if (std::accumulate(blocks.begin(), blocks.end(), std::size_t{0}) != total) {
    throw UsageError(std::string(what) + " block sizes do not sum to the matrix dimension");
  }
}

std::size_t BlockOf(const std::vector<std::size_t>& offsets, std::size_t index) {
  auto it = std::upper_bound(offsets.begin(), offsets.end(), index);
  if (it == offsets.begin() || it == offsets.end()) throw UsageError("index out of range");
  return static_cast<std::size_t>(it - offsets.begin()) - 1;
}

}  // namespace

RankConditionViolated::RankConditionViolated(std::vector<std::pair<std::size_t, std::size_t>> blocks)
    : Error([&] {
        std::string msg = "rank-1 condition violated at blocks";
        for (auto [a, b] : blocks) msg += " (" + std::to_string(a + 1) + "," + std::to_string(b + 1) + ")";
        return msg;
      }()),
      blocks_(std::move(blocks)) {}

PartitionedMatrix::PartitionedMatrix(Matrix matrix, std::vector<std::size_t> row_blocks,
                                     std::vector<std::size_t> col_blocks)
    : matrix_(std::move(matrix)), row_blocks_(std::move(row_blocks)), col_blocks_(std::move(col_blocks)) {
  ValidateBlocks(row_blocks_, matrix_.rows(), "row");
  ValidateBlocks(col_blocks_, matrix_.cols(), "column");
  row_offsets_ = Offsets(row_blocks_);
  col_offsets_ = Offsets(col_blocks_);
}

std::size_t PartitionedMatrix::RowBlockOf(std::size_t r) const { return BlockOf(row_offsets_, r); }

std::size_t PartitionedMatrix::ColBlockOf(std::size_t c) const { return BlockOf(col_offsets_, c); }

Matrix PartitionedMatrix::Block(std::size_t alpha, std::size_t beta) const {
  if (alpha >= row_blocks_.size() || beta >= col_blocks_.size()) {
    throw UsageError("block (" + std::to_string(alpha + 1) + "," + std::to_string(beta + 1) +
                     ") out of range");
  }
  return matrix_.Submatrix(row_offsets_[alpha], col_offsets_[beta], row_blocks_[alpha], col_blocks_[beta]);
}

std::vector<BlockFactor> CheckRank1Condition(const PartitionedMatrix& a) {
  std::vector<BlockFactor> factors;
  std::vector<std::pair<std::size_t, std::size_t>> bad;
  for (std::size_t alpha = 0; alpha < a.num_row_blocks(); ++alpha) {
    for (std::size_t beta = 0; beta < a.num_col_blocks(); ++beta) {
      Rank1Factorization f = Rank1Factor(a.Block(alpha, beta));
      if (std::holds_alternative<HigherRankBlock>(f)) bad.emplace_back(alpha, beta);
      factors.push_back(BlockFactor{alpha, beta, std::move(f)});
    }
  }
  if (!bad.empty()) throw RankConditionViolated(std::move(bad));
  return factors;
}

std::string VertexLabel(const HyperplaneVertex& v) {
  std::string label = std::to_string(v.block + 1);
  if (v.side == Side::kCol) label += '\'';
  if (v.normal.size() == 2) {
    const FieldElement& x = v.normal[0];
    const FieldElement& y = v.normal[1];
    if (x.IsOne() && y.IsZero()) return label + 'a';
    if (x.IsZero() && y.IsOne()) return label + 'b';
    if (x.IsOne() && y.IsOne()) return label + 'c';
  }
  return label + v.normal.ToString();
}

const HyperplaneVertex& StabilityGraph::Vertex(std::size_t global) const {
  if (global < pi.size()) return pi[global];
  return sigma.at(global - pi.size());
}

std::size_t StabilityGraph::Find(Side side, std::size_t block, const Vector& normal) const {
  const auto& list = side == Side::kRow ? pi : sigma;
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (list[i].block == block && list[i].normal == normal) {
      return side == Side::kRow ? i : pi.size() + i;
    }
  }
  return num_vertices();
}

StabilityGraph BuildStabilityGraph(const PartitionedMatrix& a) {
  std::vector<BlockFactor> factors = CheckRank1Condition(a);

  // (block, normal) -> vertex, ordered by block then lexicographic normal.
  using Key = std::pair<std::size_t, Vector>;
  auto key_less = [](const Key& x, const Key& y) {
    if (x.first != y.first) return x.first < y.first;
    if (x.second.size() != y.second.size()) return x.second.size() < y.second.size();
    return (x.second <=> y.second) < 0;
  };
  std::map<Key, std::size_t, decltype(key_less)> pi_index(key_less);
  std::map<Key, std::size_t, decltype(key_less)> sigma_index(key_less);
  for (const auto& f : factors) {
    if (const auto* r1 = std::get_if<RankOneBlock>(&f.factor)) {
      pi_index.emplace(Key{f.row_block, r1->u}, 0);
      sigma_index.emplace(Key{f.col_block, r1->v}, 0);
    }
  }

  StabilityGraph g{a.field(), a.row_blocks(), a.col_blocks(), {}, {}, {}};
  for (auto& [key, index] : pi_index) {
    index = g.pi.size();
    g.pi.push_back(HyperplaneVertex{Side::kRow, key.first, key.second});
  }
  for (auto& [key, index] : sigma_index) {
    index = g.sigma.size();
    g.sigma.push_back(HyperplaneVertex{Side::kCol, key.first, key.second});
  }
  for (const auto& f : factors) {
    if (const auto* r1 = std::get_if<RankOneBlock>(&f.factor)) {
      g.edges.push_back(StabilityEdge{pi_index.at(Key{f.row_block, r1->u}),
                                      sigma_index.at(Key{f.col_block, r1->v}), f.row_block,
                                      f.col_block, r1->c});
    }
  }
  return g;
}

}  // namespace blockdm
