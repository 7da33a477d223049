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

#include "blockdm/decompose.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <set>

#include "blockdm/errors.hpp"

namespace blockdm {
namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

std::vector<std::size_t> Indices(const std::vector<bool>& mask, std::size_t begin, std::size_t end) {
  std::vector<std::size_t> out;
  for (std::size_t i = begin; i < end; ++i) {
    if (mask[i]) out.push_back(i);
  }
  return out;
}

// Strongly connected components of the subgraph induced by `alive`
// (iterative Kosaraju). Returns a component id per vertex, kNone if dead.
std::vector<std::size_t> StronglyConnectedComponents(const std::vector<std::vector<std::size_t>>& adj,
                                                     const std::vector<bool>& alive) {
  const std::size_t n = adj.size();
  std::vector<std::size_t> finish_order;
  std::vector<bool> visited(n, false);
  for (std::size_t root = 0; root < n; ++root) {
    if (!alive[root] || visited[root]) continue;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
    visited[root] = true;
    while (!stack.empty()) {
      auto& [u, next] = stack.back();
      if (next < adj[u].size()) {
        std::size_t w = adj[u][next++];
        if (alive[w] && !visited[w]) {
          visited[w] = true;
          stack.emplace_back(w, 0);
        }
      } else {
        finish_order.push_back(u);
        stack.pop_back();
      }
    }
  }
  std::vector<std::vector<std::size_t>> reverse(n);
  for (std::size_t u = 0; u < n; ++u) {
    if (!alive[u]) continue;
    for (std::size_t w : adj[u]) {
      if (alive[w]) reverse[w].push_back(u);
    }
  }
  std::vector<std::size_t> comp(n, kNone);
  std::size_t count = 0;
  for (auto it = finish_order.rbegin(); it != finish_order.rend(); ++it) {
    if (comp[*it] != kNone) continue;
    std::vector<std::size_t> stack{*it};
    comp[*it] = count;
    while (!stack.empty()) {
      std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t w : reverse[u]) {
        if (comp[w] == kNone) {
          comp[w] = count;
          stack.push_back(w);
        }
      }
    }
    ++count;
  }
  return comp;
}

std::vector<std::size_t> LocalSigma(const std::vector<std::size_t>& global, std::size_t num_pi) {
  std::vector<std::size_t> out;
  for (std::size_t v : global) out.push_back(v - num_pi);
  return out;
}

Matrix IntersectionBasis(const FieldSpec& field, std::size_t dim, const std::vector<Vector>& normals) {
  if (normals.empty()) return Matrix::Identity(field, dim);
  std::vector<Vector> kernel = KernelBasis(Matrix::FromRows(field, dim, normals));
  return Matrix::FromColumns(field, dim, kernel);
}

}  // namespace

ReachabilitySets ComputeReachabilitySets(const IndependentMatchingState& state) {
  const std::size_t n = state.aux.size();
  return ReachabilitySets{Indices(ReachableFrom(state.aux, state.sources), 0, n),
                          Indices(ReachingTo(state.aux, state.sinks), 0, n)};
}

bool ChainPoset::Precedes(std::size_t k, std::size_t l) const {
  return std::binary_search(relations.begin(), relations.end(), std::pair{k, l});
}

bool ChainPoset::IsIdeal(std::span<const std::size_t> labels) const {
  std::set<std::size_t> in(labels.begin(), labels.end());
  for (std::size_t l : in) {
    if (l < 1 || l > height()) return false;
  }
  for (auto [k, l] : relations) {
    if (in.count(l) && !in.count(k)) return false;
  }
  return true;
}

std::vector<std::vector<std::size_t>> ChainPoset::Ideals() const {
  const std::size_t h = height();
  if (h >= 8 * sizeof(std::size_t) - 1) throw UsageError("poset too large to enumerate ideals");
  std::vector<std::vector<std::size_t>> ideals;
  for (std::size_t mask = 0; mask < (std::size_t{1} << h); ++mask) {
    std::vector<std::size_t> labels;
    for (std::size_t k = 1; k <= h; ++k) {
      if (mask >> (k - 1) & 1) labels.push_back(k);
    }
    if (IsIdeal(labels)) ideals.push_back(std::move(labels));
  }
  return ideals;
}

ChainPoset BuildChainPoset(const IndependentMatchingState& state, const ReachabilitySets& reach) {
  const std::size_t n = state.aux.size();
  const std::size_t np = state.num_pi;
  std::vector<bool> alive(n, true);
  for (std::size_t v : reach.c0) alive[v] = false;
  for (std::size_t v : reach.cinf) alive[v] = false;

  std::vector<std::size_t> comp = StronglyConnectedComponents(state.aux, alive);

  // Components meeting the matched vertices, keyed by their raw id.
  std::vector<std::size_t> matched_comps;
  for (std::size_t v = 0; v < n; ++v) {
    if (alive[v] && state.IsMatched(v)) matched_comps.push_back(comp[v]);
  }
  std::sort(matched_comps.begin(), matched_comps.end());
  matched_comps.erase(std::unique(matched_comps.begin(), matched_comps.end()), matched_comps.end());
  const std::size_t h = matched_comps.size();
  auto slot_of = [&](std::size_t raw) {
    auto it = std::lower_bound(matched_comps.begin(), matched_comps.end(), raw);
    return it != matched_comps.end() && *it == raw ? static_cast<std::size_t>(it - matched_comps.begin())
                                                   : kNone;
  };

  std::vector<std::vector<std::size_t>> slot_h(h), slot_k(h), slot_members(h);
  for (std::size_t v = 0; v < n; ++v) {
    if (!alive[v]) continue;
    std::size_t s = slot_of(comp[v]);
    if (s == kNone) continue;
    slot_members[s].push_back(v);
    if (state.IsMatched(v)) (v < np ? slot_h[s] : slot_k[s]).push_back(v);
  }

  // below[l] = slots k reachable from H_l in G~'_M, i.e. k precedes l.
  std::vector<std::set<std::size_t>> below(h);
  std::vector<std::vector<std::size_t>> pruned(n);
  for (std::size_t u = 0; u < n; ++u) {
    if (!alive[u]) continue;
    for (std::size_t w : state.aux[u]) {
      if (alive[w]) pruned[u].push_back(w);
    }
  }
  for (std::size_t l = 0; l < h; ++l) {
    std::vector<bool> seen = ReachableFrom(pruned, slot_h[l]);
    for (std::size_t k = 0; k < h; ++k) {
      if (k == l) continue;
      if (std::any_of(slot_h[k].begin(), slot_h[k].end(), [&](std::size_t v) { return seen[v]; })) {
        below[l].insert(k);
      }
    }
  }

  // Topological relabelling, minimal elements first. Ties go to the
  // component whose smallest matched Sigma vertex comes first.
  std::vector<std::size_t> order;
  std::vector<bool> placed(h, false);
  for (std::size_t step = 0; step < h; ++step) {
    std::size_t best = kNone;
    for (std::size_t s = 0; s < h; ++s) {
      if (placed[s]) continue;
      bool minimal = std::all_of(below[s].begin(), below[s].end(), [&](std::size_t k) { return placed[k]; });
      if (!minimal) continue;
      if (best == kNone || slot_k[s].front() < slot_k[best].front()) best = s;
    }
    placed[best] = true;
    order.push_back(best);
  }
  std::vector<std::size_t> label(h);
  for (std::size_t i = 0; i < h; ++i) label[order[i]] = i + 1;

  ChainPoset poset;
  poset.c0 = reach.c0;
  poset.cinf = reach.cinf;
  poset.h_sets.assign(h + 2, {});
  poset.k_sets.assign(h + 2, {});
  poset.members.assign(h + 2, {});
  for (std::size_t v : reach.c0) {
    if (state.IsMatched(v)) (v < np ? poset.h_sets[0] : poset.k_sets[0]).push_back(v);
  }
  for (std::size_t v : reach.cinf) {
    if (state.IsMatched(v)) (v < np ? poset.h_sets[h + 1] : poset.k_sets[h + 1]).push_back(v);
  }
  poset.members[0] = reach.c0;
  poset.members[h + 1] = reach.cinf;
  for (std::size_t s = 0; s < h; ++s) {
    poset.h_sets[label[s]] = slot_h[s];
    poset.k_sets[label[s]] = slot_k[s];
    poset.members[label[s]] = slot_members[s];
    for (std::size_t k : below[s]) poset.relations.emplace_back(label[k], label[s]);
  }
  std::sort(poset.relations.begin(), poset.relations.end());
  return poset;
}

std::size_t StableSubspace::dim_x() const {
  std::size_t d = 0;
  for (const auto& m : x) d += m.cols();
  return d;
}

std::size_t StableSubspace::dim_y() const {
  std::size_t d = 0;
  for (const auto& m : y) d += m.cols();
  return d;
}

StableSubspace SubspaceOfVertexSets(const StabilityGraph& g, std::span<const std::size_t> h_local,
                                    std::span<const std::size_t> k_local) {
  std::vector<std::vector<Vector>> row_normals(g.row_dims.size());
  std::vector<std::vector<Vector>> col_normals(g.col_dims.size());
  for (std::size_t i : h_local) row_normals[g.pi.at(i).block].push_back(g.pi[i].normal);
  for (std::size_t i : k_local) col_normals[g.sigma.at(i).block].push_back(g.sigma[i].normal);
  StableSubspace s;
  for (std::size_t a = 0; a < g.row_dims.size(); ++a) {
    s.x.push_back(IntersectionBasis(g.field, g.row_dims[a], row_normals[a]));
  }
  for (std::size_t b = 0; b < g.col_dims.size(); ++b) {
    s.y.push_back(IntersectionBasis(g.field, g.col_dims[b], col_normals[b]));
  }
  return s;
}

bool IsStableSubspace(const PartitionedMatrix& a, const StableSubspace& s) {
  if (s.x.size() != a.num_row_blocks() || s.y.size() != a.num_col_blocks()) {
    throw UsageError("subspace block count does not match the partition");
  }
  for (std::size_t alpha = 0; alpha < a.num_row_blocks(); ++alpha) {
    if (s.x[alpha].rows() != a.row_blocks()[alpha]) throw UsageError("X block dimension mismatch");
  }
  for (std::size_t beta = 0; beta < a.num_col_blocks(); ++beta) {
    if (s.y[beta].rows() != a.col_blocks()[beta]) throw UsageError("Y block dimension mismatch");
  }
  for (std::size_t alpha = 0; alpha < a.num_row_blocks(); ++alpha) {
    if (s.x[alpha].cols() == 0) continue;
    Matrix xt = s.x[alpha].Transpose();
    for (std::size_t beta = 0; beta < a.num_col_blocks(); ++beta) {
      if (s.y[beta].cols() == 0) continue;
      if (!(xt * a.Block(alpha, beta) * s.y[beta]).IsZero()) return false;
    }
  }
  return true;
}

StableSubspace IdealToStableSubspace(std::span<const std::size_t> ideal, const ChainPoset& poset,
                                     const StabilityGraph& g) {
  if (!poset.IsIdeal(ideal)) throw UsageError("label set is not an ideal of the poset");
  const std::size_t h = poset.height();
  std::vector<bool> in_ideal(h + 2, false);
  for (std::size_t k : ideal) in_ideal[k] = true;
  std::vector<std::size_t> h_local;
  std::vector<std::size_t> k_global;
  for (std::size_t k = 1; k <= h + 1; ++k) {
    if (!in_ideal[k]) h_local.insert(h_local.end(), poset.h_sets[k].begin(), poset.h_sets[k].end());
  }
  for (std::size_t k = 0; k <= h; ++k) {
    if (k == 0 || in_ideal[k]) k_global.insert(k_global.end(), poset.k_sets[k].begin(), poset.k_sets[k].end());
  }
  return SubspaceOfVertexSets(g, h_local, LocalSigma(k_global, g.pi.size()));
}

std::vector<StableSubspace> MaximalChain(const ChainPoset& poset, const StabilityGraph& g) {
  std::vector<StableSubspace> chain;
  std::vector<std::size_t> ideal;
  for (std::size_t k = 0; k <= poset.height(); ++k) {
    if (k > 0) ideal.push_back(k);
    chain.push_back(IdealToStableSubspace(ideal, poset, g));
  }
  return chain;
}

namespace {

struct SideBases {
  std::vector<BasisElement> order;
  std::vector<std::size_t> sizes;
  std::vector<Matrix> r;
  std::vector<Matrix> t;
  Matrix assembled;
};

// Orders one side into groups 0..h+1, completes each block to a basis,
// triangularizes per block and assembles the global basis vectors, stored as
// columns in reverse order.
SideBases BuildSide(const StabilityGraph& g, const std::vector<std::vector<std::size_t>>& groups,
                    bool row_side, std::size_t completion_group) {
  const auto& vertices = row_side ? g.pi : g.sigma;
  const auto& dims = row_side ? g.row_dims : g.col_dims;
  const std::size_t offset = row_side ? 0 : g.pi.size();

  std::vector<std::vector<BasisElement>> by_group(groups.size());
  std::vector<std::vector<Vector>> matched(dims.size());
  for (std::size_t grp = 0; grp < groups.size(); ++grp) {
    for (std::size_t v : groups[grp]) {
      const HyperplaneVertex& hv = vertices.at(v - offset);
      by_group[grp].push_back(BasisElement{hv.block, hv.normal, grp, false, v});
      matched[hv.block].push_back(hv.normal);
    }
  }
  for (std::size_t b = 0; b < dims.size(); ++b) {
    for (Vector& extra : CompleteToBasis(g.field, matched[b], dims[b])) {
      by_group[completion_group].push_back(BasisElement{b, std::move(extra), completion_group, true, kNone});
    }
  }

  SideBases side{{}, {}, {}, {}, Matrix(g.field, 0, 0)};
  for (auto& grp : by_group) {
    side.sizes.push_back(grp.size());
    for (auto& e : grp) side.order.push_back(std::move(e));
  }

  std::size_t total = 0;
  std::vector<std::size_t> block_offset;
  for (std::size_t d : dims) {
    block_offset.push_back(total);
    total += d;
  }
  // position[i] = index lambda of order[i] within its block.
  std::vector<std::vector<Vector>> rows(dims.size());
  std::vector<std::size_t> position;
  for (const auto& e : side.order) {
    position.push_back(rows[e.block].size());
    rows[e.block].push_back(e.normal);
  }
  for (std::size_t b = 0; b < dims.size(); ++b) {
    side.r.push_back(Matrix::FromRows(g.field, dims[b], rows[b]));
    side.t.push_back(TriangularizingTransform(side.r.back(), row_side ? Triangle::kUpper : Triangle::kLower));
  }
  std::vector<Vector> columns;
  for (std::size_t i = side.order.size(); i-- > 0;) {
    const auto& e = side.order[i];
    Vector global(g.field, total);
    Vector local = side.t[e.block].Column(position[i]);
    for (std::size_t c = 0; c < local.size(); ++c) global[block_offset[e.block] + c] = local[c];
    columns.push_back(std::move(global));
  }
  side.assembled = Matrix::FromColumns(g.field, total, columns);
  return side;
}

}  // namespace

ChainBases BuildBases(const ChainPoset& poset, const StabilityGraph& g, const PartitionedMatrix& a) {
  if (!(a.row_blocks() == g.row_dims) || !(a.col_blocks() == g.col_dims)) {
    throw UsageError("stability graph does not belong to this partitioned matrix");
  }
  SideBases rows = BuildSide(g, poset.h_sets, /*row_side=*/true, 0);
  SideBases cols = BuildSide(g, poset.k_sets, /*row_side=*/false, poset.infinity_group());
  return ChainBases{std::move(rows.order), std::move(cols.order), std::move(rows.sizes),
                    std::move(cols.sizes),  std::move(rows.r),     std::move(cols.r),
                    std::move(rows.t),      std::move(cols.t),     std::move(rows.assembled),
                    std::move(cols.assembled)};
}

DMResult DmDecompose(const PartitionedMatrix& a) {
  StabilityGraph graph = BuildStabilityGraph(a);
  IndependentMatchingState state = MaxIndependentMatching(graph);
  ReachabilitySets reach = ComputeReachabilitySets(state);
  ChainPoset poset = BuildChainPoset(state, reach);
  ChainBases bases = BuildBases(poset, graph, a);

  Matrix a_dm = bases.e.Transpose() * a.matrix() * bases.f;
  std::vector<std::pair<std::size_t, std::size_t>> diag_blocks;
  for (std::size_t grp = poset.h_sets.size(); grp-- > 0;) {
    diag_blocks.emplace_back(bases.h_sizes[grp], bases.k_sizes[grp]);
  }
  std::vector<StableSubspace> chain = MaximalChain(poset, graph);
  std::vector<std::pair<std::size_t, std::size_t>> chain_dims;
  for (const auto& s : chain) chain_dims.emplace_back(s.dim_x(), s.dim_y());

  const std::size_t matching_size = state.size();
  Decomposition d{bases.e,
                  bases.f,
                  std::move(a_dm),
                  std::move(diag_blocks),
                  std::move(chain),
                  matching_size,
                  a.rows() + a.cols() - matching_size};
  return DMResult{std::move(d), std::move(graph), std::move(state), std::move(poset), std::move(bases),
                  std::move(chain_dims)};
}

bool VerificationReport::AllPassed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckOutcome& c) { return c.passed; });
}

const CheckOutcome& VerificationReport::Get(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return c;
  }
  throw UsageError("no verification check named '" + name + "'");
}

namespace {

// Columns of `t` must each live in one block; per block they must form a
// nonsingular square matrix.
std::string AdmissibleProblem(const Matrix& t, const std::vector<std::size_t>& blocks, const char* name) {
  std::vector<std::size_t> offsets{0};
  for (std::size_t b : blocks) offsets.push_back(offsets.back() + b);
  if (t.rows() != offsets.back() || t.cols() != offsets.back()) {
    return std::string(name) + " has the wrong shape";
  }
  std::vector<std::vector<Vector>> per_block(blocks.size());
  for (std::size_t c = 0; c < t.cols(); ++c) {
    Vector col = t.Column(c);
    std::size_t lead = col.LeadingIndex();
    if (lead == col.size()) return std::string(name) + " column " + std::to_string(c + 1) + " is zero";
    std::size_t b = static_cast<std::size_t>(std::upper_bound(offsets.begin(), offsets.end(), lead) -
                                             offsets.begin()) - 1;
    for (std::size_t r = 0; r < col.size(); ++r) {
      if ((r < offsets[b] || r >= offsets[b + 1]) && !col[r].IsZero()) {
        return std::string(name) + " column " + std::to_string(c + 1) + " spans several blocks";
      }
    }
    Vector local(t.field(), blocks[b]);
    for (std::size_t r = 0; r < blocks[b]; ++r) local[r] = col[offsets[b] + r];
    per_block[b].push_back(std::move(local));
  }
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (per_block[b].size() != blocks[b] || Rank(t.field(), blocks[b], per_block[b]) != blocks[b]) {
      return std::string(name) + " block " + std::to_string(b + 1) + " is not nonsingular";
    }
  }
  return {};
}

}  // namespace

VerificationReport Verify(const PartitionedMatrix& a, const Decomposition& d) {
  const std::size_t n = a.rows();
  const std::size_t m = a.cols();
  VerificationReport report;

  bool shapes_ok = d.e.rows() == n && d.e.cols() == n && d.f.rows() == m && d.f.cols() == m &&
                   d.a_dm.rows() == n && d.a_dm.cols() == m;
  {
    CheckOutcome c{"product", false, {}};
    if (!shapes_ok) {
      c.detail = "E, F or A_DM has the wrong shape";
    } else {
      c.passed = d.e.Transpose() * a.matrix() * d.f == d.a_dm;
      if (!c.passed) c.detail = "A_DM differs from E^T A F";
    }
    report.checks.push_back(std::move(c));
  }
  {
    CheckOutcome c{"admissible", false, {}};
    c.detail = AdmissibleProblem(d.e, a.row_blocks(), "E");
    if (c.detail.empty()) c.detail = AdmissibleProblem(d.f, a.col_blocks(), "F");
    c.passed = c.detail.empty();
    report.checks.push_back(std::move(c));
  }

  std::size_t row_total = 0;
  std::size_t col_total = 0;
  for (auto [r, c] : d.diag_blocks) {
    row_total += r;
    col_total += c;
  }
  const bool blocks_ok = d.diag_blocks.size() >= 2 && row_total == n && col_total == m;
  {
    CheckOutcome c{"staircase", false, {}};
    if (!blocks_ok || d.a_dm.rows() != n || d.a_dm.cols() != m) {
      c.detail = "diagonal block sizes do not tile A_DM";
    } else {
      c.passed = true;
      std::size_t row0 = 0;
      std::size_t col0 = 0;
      for (auto [rows, cols] : d.diag_blocks) {
        for (std::size_t r = row0; r < row0 + rows && c.passed; ++r) {
          for (std::size_t j = 0; j < col0; ++j) {
            if (!d.a_dm(r, j).IsZero()) {
              c.passed = false;
              c.detail = "nonzero entry at (" + std::to_string(r + 1) + "," + std::to_string(j + 1) +
                         ") below the staircase";
              break;
            }
          }
        }
        row0 += rows;
        col0 += cols;
      }
    }
    report.checks.push_back(std::move(c));
  }
  {
    CheckOutcome c{"chain", true, {}};
    const std::size_t target = n + m - std::min(d.matching_size, n + m);
    if (!blocks_ok || !shapes_ok) {
      c.passed = false;
      c.detail = "cannot derive the chain from E, F and the diagonal blocks";
    } else {
      // Groups listed bottom-up: D_0, D_1, ..., D_h (D_inf excluded).
      std::size_t i_k = 0;
      std::size_t j_k = 0;
      for (std::size_t t = d.diag_blocks.size() - 1; t >= 1 && c.passed; --t) {
        i_k += d.diag_blocks[t].first;
        j_k += d.diag_blocks[t].second;
        // X^k = span of the last i_k columns of E; Y^k = first m - j_k of F.
        Matrix xs = d.e.Submatrix(0, n - i_k, n, i_k);
        Matrix ys = d.f.Submatrix(0, 0, m, m - j_k);
        if (!(xs.Transpose() * a.matrix() * ys).IsZero()) {
          c.passed = false;
          c.detail = "implied chain element " + std::to_string(d.diag_blocks.size() - 1 - t) + " is not stable";
        } else if (i_k + (m - j_k) != target) {
          c.passed = false;
          c.detail = "implied chain element " + std::to_string(d.diag_blocks.size() - 1 - t) +
                     " has dimension " + std::to_string(i_k + m - j_k) + ", expected " + std::to_string(target);
        }
      }
    }
    for (std::size_t k = 0; k < d.chain.size() && c.passed; ++k) {
      if (!IsStableSubspace(a, d.chain[k])) {
        c.passed = false;
        c.detail = "chain element " + std::to_string(k) + " is not stable";
      } else if (d.chain[k].dim() != target) {
        c.passed = false;
        c.detail = "chain element " + std::to_string(k) + " has dimension " + std::to_string(d.chain[k].dim());
      }
    }
    report.checks.push_back(std::move(c));
  }
  {
    CheckOutcome c{"dimension", false, {}};
    c.passed = d.matching_size <= n + m && d.stable_dimension == n + m - d.matching_size;
    if (!c.passed) c.detail = "stable dimension is not n + m - |M|";
    report.checks.push_back(std::move(c));
  }
  return report;
}

}  // namespace blockdm
