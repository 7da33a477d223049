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

#ifndef BLOCKDM_ORACLE_HPP_
#define BLOCKDM_ORACLE_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "blockdm/decompose.hpp"
#include "blockdm/partitioned.hpp"

// Brute-force reference computations over small prime fields. Everything in
// this namespace uses its own residue arithmetic and elimination, separate
// from the library's linear algebra, so it can serve as an independent check.
namespace blockdm::oracle {

// A subspace of GF(q)^d stored as its reduced row echelon basis (rows).
struct Subspace {
  std::size_t ambient = 0;
  std::vector<std::vector<std::uint32_t>> basis;

  std::size_t dim() const { return basis.size(); }
  friend auto operator<=>(const Subspace&, const Subspace&) = default;
};

// Canonical reduced echelon form of the span of `vectors` in GF(q)^d.
Subspace SpanOf(std::uint32_t q, std::size_t d, std::vector<std::vector<std::uint32_t>> vectors);

Subspace Intersect(std::uint32_t q, const Subspace& a, const Subspace& b);
Subspace Sum(std::uint32_t q, const Subspace& a, const Subspace& b);

struct SubspaceCatalog {
  std::uint32_t q = 0;
  std::size_t d = 0;
  std::vector<Subspace> subspaces;
};

// All subspaces of GF(q)^d, each once. Requires q in {2, 3, 5} and d <= 3;
// throws OracleBoundsError otherwise.
SubspaceCatalog EnumerateSubspaces(std::uint32_t q, std::size_t d);

// Number of k-dimensional subspaces of GF(q)^d.
std::uint64_t GaussianBinomial(std::uint64_t q, std::size_t d, std::size_t k);

// A block-respecting pair (X, Y): one subspace per row block and per column
// block.
struct StablePair {
  std::vector<Subspace> x;
  std::vector<Subspace> y;

  std::size_t dim() const;
  friend auto operator<=>(const StablePair&, const StablePair&) = default;
};

// Reads a library StableSubspace (basis columns over GF(q)) into canonical
// form.
StablePair FromStableSubspace(const StableSubspace& s);

// x^T A_ab y == 0 for every basis pair. Throws UsageError on dimension
// mismatch or a non-prime field.
bool IsStable(const PartitionedMatrix& a, const StablePair& pair);

struct BruteForceResult {
  std::size_t v_star = 0;
  // Every maximum stable pair, sorted.
  std::vector<StablePair> maximizers;
};

// Exhaustive MSSP over the product of per-block subspace catalogs. Bounds:
// GF(2) or GF(3); every block dimension <= 2, or <= 3 over GF(2); at most six
// blocks in total. Throws OracleBoundsError outside them.
BruteForceResult BruteForceMaxStable(const PartitionedMatrix& a);

// True if BruteForceMaxStable accepts `a`.
bool WithinBruteForceBounds(const PartitionedMatrix& a);

struct ClassicDmResult {
  std::size_t matching_size = 0;
  std::size_t v_star = 0;
};

// Maximum bipartite matching on the nonzero pattern (augmenting paths), for
// the all-ones partition type. Throws UsageError for other types.
ClassicDmResult ClassicDmCheck(const PartitionedMatrix& a);

}  // namespace blockdm::oracle

#endif  // BLOCKDM_ORACLE_HPP_
