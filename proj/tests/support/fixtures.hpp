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

#ifndef BLOCKDM_TESTS_SUPPORT_FIXTURES_HPP_
#define BLOCKDM_TESTS_SUPPORT_FIXTURES_HPP_

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "blockdm/decompose.hpp"
#include "blockdm/linalg.hpp"
#include "blockdm/partitioned.hpp"

namespace blockdm::testing {

using Rng = std::mt19937_64;

FieldSpec Gf2();

// The 6x6 GF(2) matrix of type (2,2,2;2,2,2) used as the reference fixture.
PartitionedMatrix ReferenceInstance();

// A second valid decomposition of the reference instance, with transforms
// that are not inverses of R_alpha, S_beta.
Matrix KnownE();
Matrix KnownF();
Matrix KnownADm();
// Diagonal block sizes of KnownADm, top-left to bottom-right.
std::vector<std::pair<std::size_t, std::size_t>> KnownDiagBlocks();

std::string ReferenceJson();

// Global id of the vertex labelled `label` (e.g. "3'a"), or aborts the test.
std::size_t VertexByLabel(const StabilityGraph& g, const std::string& label);
std::vector<std::string> LabelsOf(const StabilityGraph& g, const std::vector<std::size_t>& globals);

struct InstanceOptions {
  std::size_t min_blocks = 1;
  std::size_t max_blocks = 3;
  std::size_t max_block_dim = 2;
  double zero_probability = 0.3;
};

FieldElement RandomElement(Rng& rng, const FieldSpec& field);
FieldElement RandomNonzero(Rng& rng, const FieldSpec& field);
Vector RandomNonzeroVector(Rng& rng, const FieldSpec& field, std::size_t n);
Matrix RandomMatrix(Rng& rng, const FieldSpec& field, std::size_t rows, std::size_t cols);
Matrix RandomNonsingular(Rng& rng, const FieldSpec& field, std::size_t n);
std::vector<std::size_t> RandomBlockSizes(Rng& rng, std::size_t count, std::size_t max_dim);

// Every block is zero with probability `zero_probability`, else c u v^T with
// random nonzero u, v, c.
PartitionedMatrix RandomRank1Matrix(Rng& rng, const FieldSpec& field, const std::vector<std::size_t>& row_blocks,
                                    const std::vector<std::size_t>& col_blocks, double zero_probability);
PartitionedMatrix RandomInstance(Rng& rng, const FieldSpec& field, const InstanceOptions& options);

// Rational instance whose u, v are small nonnegative integers and whose
// coefficients are uniform in [1, 10^6].
PartitionedMatrix RandomGenericRational(Rng& rng, const std::vector<std::size_t>& row_blocks,
                                        const std::vector<std::size_t>& col_blocks, double zero_probability);

// Unit-block matrix (type (1,...,1;1,...,1)) with independent Bernoulli
// entries over GF(2).
PartitionedMatrix RandomUnitBlockMatrix(Rng& rng, std::size_t n, std::size_t m, double density);

// P^T diag(E_a)^T A diag(F_b) Q with random nonsingular blocks and random
// permutations of the row and column blocks.
PartitionedMatrix RandomAdmissibleTransform(Rng& rng, const PartitionedMatrix& a);

// Sizes d_1..d_h of the middle diagonal blocks, sorted.
std::vector<std::size_t> MiddleBlockSizes(const Decomposition& d);

}  // namespace blockdm::testing

#endif  // BLOCKDM_TESTS_SUPPORT_FIXTURES_HPP_
