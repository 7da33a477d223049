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

#include "blockdm/matching.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "blockdm/errors.hpp"

namespace blockdm {

VectorMatroid::VectorMatroid(const FieldSpec& field, std::vector<std::size_t> block_dims,
                             std::vector<Element> elements)
    : field_(field), block_dims_(std::move(block_dims)), elements_(std::move(elements)) {
  for (const auto& e : elements_) {
    if (e.block >= block_dims_.size() || e.normal.size() != block_dims_[e.block]) {
      throw UsageError("matroid element does not fit its block");
    }
  }
}

VectorMatroid VectorMatroid::RowSide(const StabilityGraph& g) {
  std::vector<Element> elements;
  for (const auto& v : g.pi) elements.push_back(Element{v.block, v.normal});
  return VectorMatroid(g.field, g.row_dims, std::move(elements));
}

VectorMatroid VectorMatroid::ColSide(const StabilityGraph& g) {
  std::vector<Element> elements;
  for (const auto& v : g.sigma) elements.push_back(Element{v.block, v.normal});
  return VectorMatroid(g.field, g.col_dims, std::move(elements));
}

std::vector<std::vector<Vector>> VectorMatroid::ByBlock(std::span<const std::size_t> subset) const {
  std::vector<std::vector<Vector>> out(block_dims_.size());
  for (std::size_t i : subset) out[element(i).block].push_back(element(i).normal);
  return out;
}

std::size_t VectorMatroid::Rank(std::span<const std::size_t> subset) const {
  auto blocks = ByBlock(subset);
  std::size_t rank = 0;
  for (std::size_t b = 0; b < blocks.size(); ++b) rank += blockdm::Rank(field_, block_dims_[b], blocks[b]);
  return rank;
}

bool VectorMatroid::IsIndependent(std::span<const std::size_t> subset) const {
  return Rank(subset) == subset.size();
}

std::vector<std::size_t> VectorMatroid::Closure(std::span<const std::size_t> subset) const {
  std::vector<SpanBuilder> spans;
  for (std::size_t dim : block_dims_) spans.emplace_back(field_, dim);
  for (std::size_t i : subset) spans[element(i).block].Add(element(i).normal);
  std::vector<std::size_t> closure;
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (spans[elements_[i].block].Contains(elements_[i].normal)) closure.push_back(i);
  }
  return closure;
}

bool IsIndependentMatching(const StabilityGraph& g, std::span<const std::size_t> matching) {
  std::set<std::size_t> pis;
  std::set<std::size_t> sigmas;
  for (std::size_t e : matching) {
    if (e >= g.edges.size()) return false;
    if (!pis.insert(g.edges[e].pi).second || !sigmas.insert(g.edges[e].sigma).second) return false;
  }
  std::vector<std::size_t> pi_list(pis.begin(), pis.end());
  std::vector<std::size_t> sigma_list(sigmas.begin(), sigmas.end());
  return VectorMatroid::RowSide(g).IsIndependent(pi_list) &&
         VectorMatroid::ColSide(g).IsIndependent(sigma_list);
}

namespace {

// Exchange edges of one side. `matched` and `closure` are local indices.
// For the direct-sum matroid a swap across blocks is never independent (the
// incoming element stays spanned in its own block), so only same-block swaps
// are tested. Emits (from, to) in local indices following `forward`: true
// gives matched -> unmatched (Pi side), false gives unmatched -> matched.
void AddExchangeEdges(const VectorMatroid& matroid, const std::vector<std::size_t>& matched,
                      const std::vector<std::size_t>& closure, const FieldSpec& field, bool forward,
                      std::size_t offset, std::vector<std::vector<std::size_t>>& aux) {
  std::set<std::size_t> matched_set(matched.begin(), matched.end());
  for (std::size_t incoming : closure) {
    if (matched_set.count(incoming)) continue;
    std::size_t block = matroid.element(incoming).block;
    std::vector<std::size_t> same_block;
    for (std::size_t m : matched) {
      if (matroid.element(m).block == block) same_block.push_back(m);
    }
    for (std::size_t outgoing : same_block) {
      SpanBuilder span(field, matroid.block_dims()[block]);
      bool independent = span.Add(matroid.element(incoming).normal);
      for (std::size_t m : same_block) {
        if (m != outgoing) independent = independent && span.Add(matroid.element(m).normal);
      }
      if (!independent) continue;
      if (forward) {
        aux[offset + outgoing].push_back(offset + incoming);
      } else {
        aux[offset + incoming].push_back(offset + outgoing);
      }
    }
  }
}

}  // namespace

IndependentMatchingState BuildAuxiliaryDigraph(const StabilityGraph& g, std::vector<std::size_t> matching) {
  std::sort(matching.begin(), matching.end());
  if (!IsIndependentMatching(g, matching)) {
    throw PreconditionError("edge set is not an independent matching");
  }
  const std::size_t np = g.pi.size();
  IndependentMatchingState state;
  state.num_pi = np;
  state.num_sigma = g.sigma.size();
  state.matching = std::move(matching);
  state.mate.assign(g.num_vertices(), IndependentMatchingState::kUnmatched);
  state.aux.assign(g.num_vertices(), {});

  std::vector<std::size_t> matched_pi;
  std::vector<std::size_t> matched_sigma;
  for (std::size_t e : state.matching) {
    const auto& edge = g.edges[e];
    state.mate[edge.pi] = np + edge.sigma;
    state.mate[np + edge.sigma] = edge.pi;
    matched_pi.push_back(edge.pi);
    matched_sigma.push_back(edge.sigma);
  }
  std::sort(matched_pi.begin(), matched_pi.end());
  std::sort(matched_sigma.begin(), matched_sigma.end());

  for (const auto& edge : g.edges) state.aux[edge.pi].push_back(np + edge.sigma);
  for (std::size_t e : state.matching) state.aux[np + g.edges[e].sigma].push_back(g.edges[e].pi);

  VectorMatroid row = VectorMatroid::RowSide(g);
  VectorMatroid col = VectorMatroid::ColSide(g);
  std::vector<std::size_t> row_closure = row.Closure(matched_pi);
  std::vector<std::size_t> col_closure = col.Closure(matched_sigma);
  AddExchangeEdges(row, matched_pi, row_closure, g.field, /*forward=*/true, 0, state.aux);
  AddExchangeEdges(col, matched_sigma, col_closure, g.field, /*forward=*/false, np, state.aux);

  for (auto& out : state.aux) {
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
  }

  std::vector<bool> in_row_closure(np, false);
  for (std::size_t i : row_closure) in_row_closure[i] = true;
  for (std::size_t i = 0; i < np; ++i) {
    if (!in_row_closure[i]) state.sources.push_back(i);
  }
  std::vector<bool> in_col_closure(g.sigma.size(), false);
  for (std::size_t i : col_closure) in_col_closure[i] = true;
  for (std::size_t i = 0; i < g.sigma.size(); ++i) {
    if (!in_col_closure[i]) state.sinks.push_back(np + i);
  }
  return state;
}

std::vector<std::size_t> ShortestAugmentingPath(const IndependentMatchingState& state) {
  const std::size_t n = state.aux.size();
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::vector<bool> is_sink(n, false);
  for (std::size_t t : state.sinks) is_sink[t] = true;
  std::vector<std::size_t> parent(n, kNone);
  std::vector<bool> seen(n, false);
  std::deque<std::size_t> queue;
  for (std::size_t s : state.sources) {
    seen[s] = true;
    queue.push_back(s);
  }
  while (!queue.empty()) {
    std::size_t u = queue.front();
    queue.pop_front();
    if (is_sink[u]) {
      std::vector<std::size_t> path;
      for (std::size_t v = u; v != kNone; v = parent[v]) path.push_back(v);
      std::reverse(path.begin(), path.end());
      return path;
    }
    for (std::size_t w : state.aux[u]) {
      if (seen[w]) continue;
      seen[w] = true;
      parent[w] = u;
      queue.push_back(w);
    }
  }
  return {};
}

IndependentMatchingState MaxIndependentMatching(const StabilityGraph& g) {
  const std::size_t np = g.pi.size();
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> edge_at;
  for (std::size_t e = 0; e < g.edges.size(); ++e) edge_at[{g.edges[e].pi, g.edges[e].sigma}] = e;

  std::vector<std::size_t> matching;
  std::size_t augmentations = 0;
  while (true) {
    IndependentMatchingState state = BuildAuxiliaryDigraph(g, matching);
    state.augmentations = augmentations;
    std::vector<std::size_t> path = ShortestAugmentingPath(state);
    if (path.empty()) return state;
    if (augmentations >= g.edges.size()) {
      throw Error("augmentation count exceeded the number of edges");
    }
    std::set<std::size_t> next(matching.begin(), matching.end());
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      std::size_t x = path[i];
      std::size_t y = path[i + 1];
      std::size_t edge;
      if (x < np && y >= np) {
        edge = edge_at.at({x, y - np});
      } else if (x >= np && y < np) {
        edge = edge_at.at({y, x - np});
      } else {
        continue;  // exchange edge, not an edge of G
      }
      if (!next.erase(edge)) next.insert(edge);
    }
    matching.assign(next.begin(), next.end());
    ++augmentations;
  }
}

bool IsCover(const StabilityGraph& g, const Cover& cover) {
  std::set<std::size_t> h(cover.h.begin(), cover.h.end());
  std::set<std::size_t> k(cover.k.begin(), cover.k.end());
  return std::all_of(g.edges.begin(), g.edges.end(),
                     [&](const StabilityEdge& e) { return h.count(e.pi) || k.count(e.sigma); });
}

std::size_t CoverValue(const StabilityGraph& g, const Cover& cover) {
  return VectorMatroid::RowSide(g).Rank(cover.h) + VectorMatroid::ColSide(g).Rank(cover.k);
}

std::vector<bool> ReachableFrom(const std::vector<std::vector<std::size_t>>& adjacency,
                                std::span<const std::size_t> from) {
  std::vector<bool> seen(adjacency.size(), false);
  std::vector<std::size_t> stack;
  for (std::size_t s : from) {
    if (!seen[s]) {
      seen[s] = true;
      stack.push_back(s);
    }
  }
  while (!stack.empty()) {
    std::size_t u = stack.back();
    stack.pop_back();
    for (std::size_t w : adjacency[u]) {
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return seen;
}

std::vector<bool> ReachingTo(const std::vector<std::vector<std::size_t>>& adjacency,
                             std::span<const std::size_t> to) {
  std::vector<std::vector<std::size_t>> reverse(adjacency.size());
  for (std::size_t u = 0; u < adjacency.size(); ++u) {
    for (std::size_t w : adjacency[u]) reverse[w].push_back(u);
  }
  return ReachableFrom(reverse, to);
}

Cover MinCover(const IndependentMatchingState& state) {
  if (!ShortestAugmentingPath(state).empty()) {
    throw PreconditionError("matching is not maximum: an S-T path exists");
  }
  std::vector<bool> c = ReachableFrom(state.aux, state.sources);
  Cover cover;
  for (std::size_t i = 0; i < state.num_pi; ++i) {
    if (!c[i]) cover.h.push_back(i);
  }
  for (std::size_t i = 0; i < state.num_sigma; ++i) {
    if (c[state.num_pi + i]) cover.k.push_back(i);
  }
  return cover;
}

}  // namespace blockdm
