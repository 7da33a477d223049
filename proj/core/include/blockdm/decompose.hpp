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

#ifndef BLOCKDM_DECOMPOSE_HPP_
#define BLOCKDM_DECOMPOSE_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "blockdm/linalg.hpp"
#include "blockdm/matching.hpp"
#include "blockdm/partitioned.hpp"

namespace blockdm {

// Vertices reachable from S (c0) and co-reachable to T (cinf) in G~_M, as
// ascending global ids.
struct ReachabilitySets {
  std::vector<std::size_t> c0;
  std::vector<std::size_t> cinf;
};

ReachabilitySets ComputeReachabilitySets(const IndependentMatchingState& state);

// The poset P of strongly connected components of G~_M minus C0 and Cinf that
// meet the matched vertices, with labels 1..h chosen so that k < l whenever
// k precedes l.
//
// Groups are indexed 0..h+1: group 0 is (H_0, K_0) taken from C0, groups
// 1..h are the components, and group h+1 is (H_inf, K_inf) taken from Cinf.
// Sets hold global vertex ids in ascending order.
struct ChainPoset {
  std::vector<std::size_t> c0;
  std::vector<std::size_t> cinf;
  std::vector<std::vector<std::size_t>> h_sets;
  std::vector<std::vector<std::size_t>> k_sets;
  // All vertices of each component, indexed like h_sets; entries 0 and h+1
  // are C0 and Cinf.
  std::vector<std::vector<std::size_t>> members;
  // Strict order k < l (1-based labels), transitively closed, sorted.
  std::vector<std::pair<std::size_t, std::size_t>> relations;

  std::size_t height() const { return h_sets.size() - 2; }
  std::size_t infinity_group() const { return h_sets.size() - 1; }
  bool Precedes(std::size_t k, std::size_t l) const;
  // True if `labels` (1-based) is downward closed.
  bool IsIdeal(std::span<const std::size_t> labels) const;
  // Every ideal of P, each as an ascending label list. Exponential in h.
  std::vector<std::vector<std::size_t>> Ideals() const;
};

ChainPoset BuildChainPoset(const IndependentMatchingState& state, const ReachabilitySets& reach);

// A block-respecting subspace pair: x[alpha] is an n_alpha x dim matrix whose
// columns are a basis of X_alpha, likewise y[beta].
struct StableSubspace {
  std::vector<Matrix> x;
  std::vector<Matrix> y;

  std::size_t dim_x() const;
  std::size_t dim_y() const;
  std::size_t dim() const { return dim_x() + dim_y(); }
};

// (X(H), Y(K)) for vertex sets given as local Pi and Sigma indices: X(H)_a is
// the intersection of the hyperplanes of H in block a (all of U_a if none).
StableSubspace SubspaceOfVertexSets(const StabilityGraph& g, std::span<const std::size_t> h_local,
                                    std::span<const std::size_t> k_local);

// x^T A_ab y == 0 for every basis pair of every block pair. Throws UsageError
// on shape mismatch.
bool IsStableSubspace(const PartitionedMatrix& a, const StableSubspace& s);

// (X(H_J), Y(K_J)) for an ideal J of 1-based labels. Throws UsageError if J
// is not an ideal.
StableSubspace IdealToStableSubspace(std::span<const std::size_t> ideal, const ChainPoset& poset,
                                     const StabilityGraph& g);

// (X^k, Y^k) for k = 0..h, from the ideals {1..k}.
std::vector<StableSubspace> MaximalChain(const ChainPoset& poset, const StabilityGraph& g);

// One element pi_i of H (or sigma_j of K) in basis order.
struct BasisElement {
  std::size_t block;
  Vector normal;
  std::size_t group;       // 0..h+1
  bool completion;         // added by basis completion, not a graph vertex
  std::size_t vertex;      // global id; meaningless when `completion`
};

struct ChainBases {
  std::vector<BasisElement> h_order;  // pi_1 .. pi_n
  std::vector<BasisElement> k_order;  // sigma_1 .. sigma_m
  std::vector<std::size_t> h_sizes;   // |H_0|, ..., |H_inf| after completion
  std::vector<std::size_t> k_sizes;   // |K_0|, ..., |K_inf| after completion
  std::vector<Matrix> r;              // R_alpha
  std::vector<Matrix> s;              // S_beta
  std::vector<Matrix> e_blocks;       // E_alpha, R_alpha E_alpha upper triangular
  std::vector<Matrix> f_blocks;       // F_beta, S_beta F_beta lower triangular
  Matrix e;                           // (e_n ... e_1)
  Matrix f;                           // (f_m ... f_1)
};

ChainBases BuildBases(const ChainPoset& poset, const StabilityGraph& g, const PartitionedMatrix& a);

// The part of a decomposition that Verify checks; it can be populated from
// any source, not only DmDecompose.
struct Decomposition {
  Matrix e;
  Matrix f;
  Matrix a_dm;
  // (rows, cols) of D_inf, D_h, ..., D_1, D_0, top-left to bottom-right.
  std::vector<std::pair<std::size_t, std::size_t>> diag_blocks;
  std::vector<StableSubspace> chain;
  std::size_t matching_size = 0;
  std::size_t stable_dimension = 0;
};

struct DMResult : Decomposition {
  StabilityGraph graph;
  IndependentMatchingState state;
  ChainPoset poset;
  ChainBases bases;
  // (dim X^k, dim Y^k) for k = 0..h.
  std::vector<std::pair<std::size_t, std::size_t>> chain_dims;
};

// Full pipeline. Throws RankConditionViolated.
DMResult DmDecompose(const PartitionedMatrix& a);

struct CheckOutcome {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerificationReport {
  std::vector<CheckOutcome> checks;

  bool AllPassed() const;
  // Throws UsageError for an unknown name.
  const CheckOutcome& Get(const std::string& name) const;
};

// Checks, by name:
//   "product"     A_DM == E^T A F
//   "admissible"  E, F are block-diagonal nonsingular times a permutation
//   "staircase"   entries below-left of the diagonal blocks vanish
//   "chain"       the chain implied by E, F and diag_blocks, and every
//                 recorded chain element, is stable of dimension n+m-|M|
//   "dimension"   stable_dimension == n + m - matching_size
VerificationReport Verify(const PartitionedMatrix& a, const Decomposition& d);

}  // namespace blockdm

#endif  // BLOCKDM_DECOMPOSE_HPP_
