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

#ifndef BLOCKDM_MATCHING_HPP_
#define BLOCKDM_MATCHING_HPP_

#include <cstddef>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "blockdm/linalg.hpp"
#include "blockdm/partitioned.hpp"

namespace blockdm {

// Direct sum over blocks of the linear matroids of hyperplane normals: a
// subset is independent iff, within every block, its normals are linearly
// independent. Elements are addressed by local index into `elements`.
class VectorMatroid {
 public:
  struct Element {
    std::size_t block;
    Vector normal;
  };

  VectorMatroid(const FieldSpec& field, std::vector<std::size_t> block_dims,
                std::vector<Element> elements);
  // M(Pi) and M(Sigma) of a stability graph.
  static VectorMatroid RowSide(const StabilityGraph& g);
  static VectorMatroid ColSide(const StabilityGraph& g);

  std::size_t size() const { return elements_.size(); }
  const Element& element(std::size_t i) const { return elements_.at(i); }
  const std::vector<std::size_t>& block_dims() const { return block_dims_; }

  std::size_t Rank(std::span<const std::size_t> subset) const;
  // Repeated elements make a subset dependent.
  bool IsIndependent(std::span<const std::size_t> subset) const;
  // Every element whose normal lies in the span of the subset's normals of
  // the same block. Sorted ascending.
  std::vector<std::size_t> Closure(std::span<const std::size_t> subset) const;

 private:
  std::vector<std::vector<Vector>> ByBlock(std::span<const std::size_t> subset) const;

  FieldSpec field_;
  std::vector<std::size_t> block_dims_;
  std::vector<Element> elements_;
};

// A matching M together with its auxiliary digraph G~_M. Vertices use the
// global ids of StabilityGraph (Pi first, then Sigma).
struct IndependentMatchingState {
  static constexpr std::size_t kUnmatched = std::numeric_limits<std::size_t>::max();

  std::size_t num_pi = 0;
  std::size_t num_sigma = 0;
  // Edge indices into StabilityGraph::edges, ascending.
  std::vector<std::size_t> matching;
  // Global id of the partner of each vertex, or kUnmatched.
  std::vector<std::size_t> mate;
  // Out-neighbours of each vertex of G~_M, ascending.
  std::vector<std::vector<std::size_t>> aux;
  // S = Pi \ cl+(d+M) and T = Sigma \ cl-(d-M), as ascending global ids.
  std::vector<std::size_t> sources;
  std::vector<std::size_t> sinks;
  // Number of augmentations performed to reach this matching.
  std::size_t augmentations = 0;

  std::size_t size() const { return matching.size(); }
  bool IsMatched(std::size_t global) const { return mate.at(global) != kUnmatched; }
};

// Checks that `matching` is a matching whose endpoint sets are independent.
bool IsIndependentMatching(const StabilityGraph& g, std::span<const std::size_t> matching);

// Builds G~_M. Throws PreconditionError if `matching` is not an independent
// matching.
IndependentMatchingState BuildAuxiliaryDigraph(const StabilityGraph& g,
                                               std::vector<std::size_t> matching);

// Shortest S -> T path in G~_M by breadth-first search from all sources in
// ascending order; empty when no path exists.
std::vector<std::size_t> ShortestAugmentingPath(const IndependentMatchingState& state);

// Maximum independent matching by repeated shortest-path augmentation,
// starting from the empty matching.
IndependentMatchingState MaxIndependentMatching(const StabilityGraph& g);

// H subset of Pi and K subset of Sigma, as ascending local indices.
struct Cover {
  std::vector<std::size_t> h;
  std::vector<std::size_t> k;
};

bool IsCover(const StabilityGraph& g, const Cover& cover);
// rho+(H) + rho-(K).
std::size_t CoverValue(const StabilityGraph& g, const Cover& cover);

// The reachability cover (Pi \ C, Sigma cap C), C the vertices reachable from
// S. Throws PreconditionError if the matching is not maximum.
Cover MinCover(const IndependentMatchingState& state);

// Vertices reachable from `from` (forward) in `adjacency`.
std::vector<bool> ReachableFrom(const std::vector<std::vector<std::size_t>>& adjacency,
                                std::span<const std::size_t> from);
// Vertices from which some vertex of `to` is reachable.
std::vector<bool> ReachingTo(const std::vector<std::vector<std::size_t>>& adjacency,
                             std::span<const std::size_t> to);

}  // namespace blockdm

#endif  // BLOCKDM_MATCHING_HPP_
