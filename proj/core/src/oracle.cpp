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

#include "blockdm/oracle.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "blockdm/errors.hpp"

namespace blockdm::oracle {
namespace {

using Row = std::vector<std::uint32_t>;

std::uint32_t AddMod(std::uint32_t a, std::uint32_t b, std::uint32_t q) {
  return static_cast<std::uint32_t>((std::uint64_t{a} + b) % q);
}

std::uint32_t MulMod(std::uint32_t a, std::uint32_t b, std::uint32_t q) {
  return static_cast<std::uint32_t>(std::uint64_t{a} * b % q);
}

std::uint32_t InvMod(std::uint32_t a, std::uint32_t q) {
  // Fermat: a^(q-2).
  std::uint32_t result = 1;
  std::uint32_t base = a % q;
  for (std::uint32_t e = q - 2; e > 0; e >>= 1) {
    if (e & 1) result = MulMod(result, base, q);
    base = MulMod(base, base, q);
  }
  return result;
}

std::uint32_t Residue(const FieldElement& e) { return e.residue(); }

bool InSpan(std::uint32_t q, const Subspace& s, const Row& v) {
  std::vector<Row> vectors = s.basis;
  vectors.push_back(v);
  return SpanOf(q, s.ambient, std::move(vectors)).dim() == s.dim();
}

void ForEachVector(std::uint32_t q, std::size_t d, const std::function<void(const Row&)>& fn) {
  Row v(d, 0);
  while (true) {
    fn(v);
    std::size_t i = 0;
    while (i < d && ++v[i] == q) v[i++] = 0;
    if (i == d) return;
  }
}

void RequirePrimeField(const PartitionedMatrix& a) {
  if (!a.field().is_prime_field()) throw UsageError("the oracle works over GF(p) only");
}

}  // namespace

Subspace SpanOf(std::uint32_t q, std::size_t d, std::vector<Row> vectors) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < d && rank < vectors.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < vectors.size() && vectors[pivot][col] % q == 0) ++pivot;
    if (pivot == vectors.size()) continue;
    std::swap(vectors[pivot], vectors[rank]);
    std::uint32_t inv = InvMod(vectors[rank][col] % q, q);
    for (auto& x : vectors[rank]) x = MulMod(x % q, inv, q);
    for (std::size_t r = 0; r < vectors.size(); ++r) {
      if (r == rank) continue;
      std::uint32_t factor = vectors[r][col] % q;
      if (factor == 0) continue;
      for (std::size_t c = 0; c < d; ++c) {
        vectors[r][c] = AddMod(vectors[r][c] % q, MulMod(q - factor, vectors[rank][c], q), q);
      }
    }
    ++rank;
  }
  vectors.resize(rank);
  return Subspace{d, std::move(vectors)};
}

Subspace Intersect(std::uint32_t q, const Subspace& a, const Subspace& b) {
  std::vector<Row> common;
  ForEachVector(q, a.ambient, [&](const Row& v) {
    if (InSpan(q, a, v) && InSpan(q, b, v)) common.push_back(v);
  });
  return SpanOf(q, a.ambient, std::move(common));
}

Subspace Sum(std::uint32_t q, const Subspace& a, const Subspace& b) {
  std::vector<Row> all = a.basis;
  all.insert(all.end(), b.basis.begin(), b.basis.end());
  return SpanOf(q, a.ambient, std::move(all));
}

std::uint64_t GaussianBinomial(std::uint64_t q, std::size_t d, std::size_t k) {
  if (k > d) return 0;
  std::uint64_t num = 1;
  std::uint64_t den = 1;
  for (std::size_t i = 0; i < k; ++i) {
    std::uint64_t qd = 1;
    std::uint64_t qi = 1;
    for (std::size_t j = 0; j < d - i; ++j) qd *= q;
    for (std::size_t j = 0; j < i + 1; ++j) qi *= q;
    num *= qd - 1;
    den *= qi - 1;
  }
  return num / den;
}

SubspaceCatalog EnumerateSubspaces(std::uint32_t q, std::size_t d) {
  if ((q != 2 && q != 3 && q != 5) || d > 3) {
    throw OracleBoundsError("subspace enumeration supports q in {2,3,5} and d <= 3");
  }
  SubspaceCatalog catalog{q, d, {}};
  // Every reduced echelon matrix: choose pivot columns, then fill the free
  // entries right of each pivot outside pivot columns.
  for (std::uint32_t mask = 0; mask < (1u << d); ++mask) {
    std::vector<std::size_t> pivots;
    for (std::size_t c = 0; c < d; ++c) {
      if (mask >> c & 1) pivots.push_back(c);
    }
    std::vector<std::pair<std::size_t, std::size_t>> free_slots;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      for (std::size_t c = pivots[r] + 1; c < d; ++c) {
        if (!(mask >> c & 1)) free_slots.emplace_back(r, c);
      }
    }
    Row values(free_slots.size(), 0);
    while (true) {
      std::vector<Row> basis(pivots.size(), Row(d, 0));
      for (std::size_t r = 0; r < pivots.size(); ++r) basis[r][pivots[r]] = 1;
      for (std::size_t i = 0; i < free_slots.size(); ++i) basis[free_slots[i].first][free_slots[i].second] = values[i];
      catalog.subspaces.push_back(Subspace{d, std::move(basis)});
      std::size_t i = 0;
      while (i < values.size() && ++values[i] == q) values[i++] = 0;
      if (i == values.size()) break;
    }
  }
  std::sort(catalog.subspaces.begin(), catalog.subspaces.end());
  return catalog;
}

std::size_t StablePair::dim() const {
  std::size_t total = 0;
  for (const auto& s : x) total += s.dim();
  for (const auto& s : y) total += s.dim();
  return total;
}

StablePair FromStableSubspace(const StableSubspace& s) {
  auto convert = [](const Matrix& basis) {
    if (!basis.field().is_prime_field()) throw UsageError("the oracle works over GF(p) only");
    std::vector<Row> rows;
    for (std::size_t c = 0; c < basis.cols(); ++c) {
      Row v(basis.rows());
      for (std::size_t r = 0; r < basis.rows(); ++r) v[r] = Residue(basis(r, c));
      rows.push_back(std::move(v));
    }
    return SpanOf(basis.field().modulus(), basis.rows(), std::move(rows));
  };
  StablePair pair;
  for (const auto& m : s.x) pair.x.push_back(convert(m));
  for (const auto& m : s.y) pair.y.push_back(convert(m));
  return pair;
}

namespace {

bool BlockPairStable(const PartitionedMatrix& a, std::size_t alpha, std::size_t beta, const Subspace& x,
                     const Subspace& y) {
  const std::uint32_t q = a.field().modulus();
  const std::size_t r0 = a.row_offset(alpha);
  const std::size_t c0 = a.col_offset(beta);
  for (const Row& u : x.basis) {
    for (const Row& v : y.basis) {
      std::uint32_t sum = 0;
      for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] == 0) continue;
        for (std::size_t j = 0; j < v.size(); ++j) {
          std::uint32_t aij = Residue(a.matrix()(r0 + i, c0 + j));
          sum = AddMod(sum, MulMod(u[i], MulMod(aij, v[j], q), q), q);
        }
      }
      if (sum != 0) return false;
    }
  }
  return true;
}

}  // namespace

bool IsStable(const PartitionedMatrix& a, const StablePair& pair) {
  RequirePrimeField(a);
  if (pair.x.size() != a.num_row_blocks() || pair.y.size() != a.num_col_blocks()) {
    throw UsageError("stable pair block count does not match the partition");
  }
  for (std::size_t alpha = 0; alpha < pair.x.size(); ++alpha) {
    if (pair.x[alpha].ambient != a.row_blocks()[alpha]) throw UsageError("X block dimension mismatch");
  }
  for (std::size_t beta = 0; beta < pair.y.size(); ++beta) {
    if (pair.y[beta].ambient != a.col_blocks()[beta]) throw UsageError("Y block dimension mismatch");
  }
  for (std::size_t alpha = 0; alpha < pair.x.size(); ++alpha) {
    for (std::size_t beta = 0; beta < pair.y.size(); ++beta) {
      if (!BlockPairStable(a, alpha, beta, pair.x[alpha], pair.y[beta])) return false;
    }
  }
  return true;
}

bool WithinBruteForceBounds(const PartitionedMatrix& a) {
  if (!a.field().is_prime_field()) return false;
  const std::uint32_t q = a.field().modulus();
  if (q != 2 && q != 3) return false;
  if (a.num_row_blocks() + a.num_col_blocks() > 6) return false;
  const std::size_t max_dim = q == 2 ? 3 : 2;
  auto fits = [&](std::size_t d) { return d <= max_dim; };
  return std::all_of(a.row_blocks().begin(), a.row_blocks().end(), fits) &&
         std::all_of(a.col_blocks().begin(), a.col_blocks().end(), fits);
}

BruteForceResult BruteForceMaxStable(const PartitionedMatrix& a) {
  if (!WithinBruteForceBounds(a)) {
    throw OracleBoundsError("instance exceeds the brute-force bounds (GF(2)/GF(3), small blocks, <= 6 blocks)");
  }
  const std::uint32_t q = a.field().modulus();
  const std::size_t mu = a.num_row_blocks();
  const std::size_t nu = a.num_col_blocks();
  std::vector<SubspaceCatalog> row_cat;
  std::vector<SubspaceCatalog> col_cat;
  for (std::size_t d : a.row_blocks()) row_cat.push_back(EnumerateSubspaces(q, d));
  for (std::size_t d : a.col_blocks()) col_cat.push_back(EnumerateSubspaces(q, d));

  // ok[alpha][beta][x][y]: the block pair (X_alpha, Y_beta) is stable.
  std::vector<std::vector<std::vector<std::vector<bool>>>> ok(mu, std::vector<std::vector<std::vector<bool>>>(nu));
  for (std::size_t alpha = 0; alpha < mu; ++alpha) {
    for (std::size_t beta = 0; beta < nu; ++beta) {
      auto& table = ok[alpha][beta];
      table.assign(row_cat[alpha].subspaces.size(), std::vector<bool>(col_cat[beta].subspaces.size()));
      for (std::size_t x = 0; x < table.size(); ++x) {
        for (std::size_t y = 0; y < table[x].size(); ++y) {
          table[x][y] = BlockPairStable(a, alpha, beta, row_cat[alpha].subspaces[x], col_cat[beta].subspaces[y]);
        }
      }
    }
  }

  BruteForceResult result;
  bool any = false;
  std::vector<std::size_t> xs(mu, 0);
  while (true) {
    // For this X tuple, the best Y factorizes over column blocks.
    std::size_t total = 0;
    for (std::size_t alpha = 0; alpha < mu; ++alpha) total += row_cat[alpha].subspaces[xs[alpha]].dim();
    std::vector<std::vector<std::size_t>> best_y(nu);
    for (std::size_t beta = 0; beta < nu; ++beta) {
      std::size_t best = 0;
      bool found = false;
      for (std::size_t y = 0; y < col_cat[beta].subspaces.size(); ++y) {
        bool stable = true;
        for (std::size_t alpha = 0; alpha < mu && stable; ++alpha) stable = ok[alpha][beta][xs[alpha]][y];
        if (!stable) continue;
        std::size_t dim = col_cat[beta].subspaces[y].dim();
        if (!found || dim > best) {
          best = dim;
          best_y[beta].clear();
          found = true;
        }
        if (dim == best) best_y[beta].push_back(y);
      }
      total += best;  // the zero subspace is always stable, so `found` holds
    }
    if (!any || total >= result.v_star) {
      if (!any || total > result.v_star) {
        result.maximizers.clear();
        result.v_star = total;
        any = true;
      }
      std::vector<std::size_t> ys(nu, 0);
      while (true) {
        StablePair pair;
        for (std::size_t alpha = 0; alpha < mu; ++alpha) pair.x.push_back(row_cat[alpha].subspaces[xs[alpha]]);
        for (std::size_t beta = 0; beta < nu; ++beta) pair.y.push_back(col_cat[beta].subspaces[best_y[beta][ys[beta]]]);
        result.maximizers.push_back(std::move(pair));
        std::size_t i = 0;
        while (i < nu && ++ys[i] == best_y[i].size()) ys[i++] = 0;
        if (i == nu) break;
      }
    }
    std::size_t i = 0;
    while (i < mu && ++xs[i] == row_cat[i].subspaces.size()) xs[i++] = 0;
    if (i == mu) break;
  }
  std::sort(result.maximizers.begin(), result.maximizers.end());
  return result;
}

ClassicDmResult ClassicDmCheck(const PartitionedMatrix& a) {
  auto unit = [](std::size_t s) { return s == 1; };
  if (!std::all_of(a.row_blocks().begin(), a.row_blocks().end(), unit) ||
      !std::all_of(a.col_blocks().begin(), a.col_blocks().end(), unit)) {
    throw UsageError("classic DM check needs the partition type (1,...,1; 1,...,1)");
  }
  const std::size_t n = a.rows();
  const std::size_t m = a.cols();
  constexpr std::size_t kFree = static_cast<std::size_t>(-1);
  std::vector<std::size_t> col_mate(m, kFree);
  std::function<bool(std::size_t, std::vector<bool>&)> augment = [&](std::size_t r, std::vector<bool>& seen) {
    for (std::size_t c = 0; c < m; ++c) {
      if (a.matrix()(r, c).IsZero() || seen[c]) continue;
      seen[c] = true;
      if (col_mate[c] == kFree || augment(col_mate[c], seen)) {
        col_mate[c] = r;
        return true;
      }
    }
    return false;
  };
  std::size_t size = 0;
  for (std::size_t r = 0; r < n; ++r) {
    std::vector<bool> seen(m, false);
    if (augment(r, seen)) ++size;
  }
  return ClassicDmResult{size, n + m - size};
}

}  // namespace blockdm::oracle
