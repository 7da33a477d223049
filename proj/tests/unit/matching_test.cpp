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

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "blockdm/errors.hpp"
#include "fixtures.hpp"

namespace blockdm {
namespace {

using testing::ReferenceInstance;
using testing::Gf2;
using testing::LabelsOf;
using testing::Rng;
using testing::VertexByLabel;

using Labels = std::vector<std::string>;

std::size_t EdgeByLabels(const StabilityGraph& g, const std::string& pi, const std::string& sigma) {
  const std::size_t p = VertexByLabel(g, pi);
  const std::size_t s = VertexByLabel(g, sigma) - g.pi.size();
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    if (g.edges[e].pi == p && g.edges[e].sigma == s) return e;
  }
  ADD_FAILURE() << "no edge " << pi << " " << sigma;
  return 0;
}

std::vector<std::size_t> KnownMatching(const StabilityGraph& g) {
  std::vector<std::size_t> m = {EdgeByLabels(g, "1a", "1'a"), EdgeByLabels(g, "1b", "3'c"),
                                EdgeByLabels(g, "2a", "1'c"), EdgeByLabels(g, "2c", "3'a"),
                                EdgeByLabels(g, "3c", "2'c")};
  std::sort(m.begin(), m.end());
  return m;
}

// Rank of a set of row-side or column-side vertices, computed per block.
std::size_t SideRank(const StabilityGraph& g, bool row_side, const std::vector<std::size_t>& local) {
  const auto& vertices = row_side ? g.pi : g.sigma;
  const auto& dims = row_side ? g.row_dims : g.col_dims;
  std::size_t total = 0;
  for (std::size_t b = 0; b < dims.size(); ++b) {
    std::vector<Vector> vs;
    for (std::size_t i : local) {
      if (vertices[i].block == b) vs.push_back(vertices[i].normal);
    }
    total += Rank(g.field, dims[b], vs);
  }
  return total;
}

// Exhaustive maximum independent matching over all edge subsets.
std::size_t BruteForceMatching(const StabilityGraph& g) {
  const std::size_t e = g.edges.size();
  std::size_t best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << e); ++mask) {
    std::vector<std::size_t> pis;
    std::vector<std::size_t> sigmas;
    for (std::size_t i = 0; i < e; ++i) {
      if (mask >> i & 1) {
        pis.push_back(g.edges[i].pi);
        sigmas.push_back(g.edges[i].sigma);
      }
    }
    if (pis.size() <= best) continue;
    std::set<std::size_t> ps(pis.begin(), pis.end());
    std::set<std::size_t> ss(sigmas.begin(), sigmas.end());
    if (ps.size() != pis.size() || ss.size() != sigmas.size()) continue;
    if (SideRank(g, true, pis) != pis.size() || SideRank(g, false, sigmas) != sigmas.size()) continue;
    best = pis.size();
  }
  return best;
}

// Minimum of rho+(H) + rho-(K) over every cover.
std::size_t BruteForceMinCover(const StabilityGraph& g) {
  const std::size_t p = g.pi.size();
  const std::size_t s = g.sigma.size();
  std::size_t best = SIZE_MAX;
  for (std::uint64_t hm = 0; hm < (std::uint64_t{1} << p); ++hm) {
    for (std::uint64_t km = 0; km < (std::uint64_t{1} << s); ++km) {
      Cover c;
      for (std::size_t i = 0; i < p; ++i) {
        if (hm >> i & 1) c.h.push_back(i);
      }
      for (std::size_t i = 0; i < s; ++i) {
        if (km >> i & 1) c.k.push_back(i);
      }
      bool covers = std::all_of(g.edges.begin(), g.edges.end(),
                                [&](const StabilityEdge& e) { return (hm >> e.pi & 1) || (km >> e.sigma & 1); });
      if (!covers) continue;
      best = std::min(best, SideRank(g, true, c.h) + SideRank(g, false, c.k));
    }
  }
  return best;
}

TEST(VectorMatroidTest, Independence) {
  StabilityGraph g = BuildStabilityGraph(ReferenceInstance());
  VectorMatroid row = VectorMatroid::RowSide(g);
  std::vector<std::size_t> none;
  EXPECT_TRUE(row.IsIndependent(none));
  std::vector<std::size_t> pi1 = {VertexByLabel(g, "1a"), VertexByLabel(g, "1b"), VertexByLabel(g, "1c")};
  EXPECT_FALSE(row.IsIndependent(pi1));
  std::vector<std::size_t> matched = {VertexByLabel(g, "1a"), VertexByLabel(g, "1b"), VertexByLabel(g, "2a"),
                                      VertexByLabel(g, "2c"), VertexByLabel(g, "3c")};
  EXPECT_TRUE(row.IsIndependent(matched));
  EXPECT_EQ(row.Rank(pi1), 2u);
  std::vector<std::size_t> repeated = {0, 0};
  EXPECT_FALSE(row.IsIndependent(repeated));
}

TEST(VectorMatroidTest, Closure) {
  StabilityGraph g = BuildStabilityGraph(ReferenceInstance());
  VectorMatroid row = VectorMatroid::RowSide(g);
  std::vector<std::size_t> none;
  EXPECT_TRUE(row.Closure(none).empty());
  std::vector<std::size_t> ab = {VertexByLabel(g, "1a"), VertexByLabel(g, "1b")};
  std::vector<std::size_t> cl = row.Closure(ab);
  EXPECT_EQ(LabelsOf(g, cl), (Labels{"1a", "1b", "1c"}));

  std::vector<std::size_t> matched = {VertexByLabel(g, "1a"), VertexByLabel(g, "1b"), VertexByLabel(g, "2a"),
                                      VertexByLabel(g, "2c"), VertexByLabel(g, "3c")};
  EXPECT_EQ(LabelsOf(g, row.Closure(matched)), (Labels{"1a", "1b", "1c", "2a", "2c", "3c"}));
}

TEST(AuxiliaryDigraphTest, EmptyMatching) {
  StabilityGraph g = BuildStabilityGraph(ReferenceInstance());
  IndependentMatchingState s = BuildAuxiliaryDigraph(g, {});
  EXPECT_EQ(s.sources.size(), g.pi.size());
  EXPECT_EQ(s.sinks.size(), g.sigma.size());
  std::size_t arcs = 0;
  for (std::size_t u = 0; u < s.aux.size(); ++u) {
    for (std::size_t w : s.aux[u]) {
      EXPECT_TRUE(g.IsPi(u));
      EXPECT_FALSE(g.IsPi(w));
      ++arcs;
    }
  }
  EXPECT_EQ(arcs, g.edges.size());
}

TEST(AuxiliaryDigraphTest, KnownMatching) {
  StabilityGraph g = BuildStabilityGraph(ReferenceInstance());
  IndependentMatchingState s = BuildAuxiliaryDigraph(g, KnownMatching(g));
  EXPECT_EQ(LabelsOf(g, s.sources), (Labels{"3a"}));
  EXPECT_TRUE(s.sinks.empty());
  EXPECT_TRUE(ShortestAugmentingPath(s).empty());

  auto arc = [&](const std::string& a, const std::string& b) {
    const auto& out = s.aux[VertexByLabel(g, a)];
    return std::binary_search(out.begin(), out.end(), VertexByLabel(g, b));
  };
  EXPECT_TRUE(arc("1a", "1c"));
  EXPECT_TRUE(arc("1b", "1c"));
  for (std::size_t w : s.aux[VertexByLabel(g, "2c")]) EXPECT_FALSE(g.IsPi(w));
  // Reverse arcs of matched pairs.
  EXPECT_TRUE(arc("3'a", "2c"));
  EXPECT_TRUE(arc("2'c", "3c"));
}

TEST(AuxiliaryDigraphTest, RejectsDependentMatching) {
  StabilityGraph g = BuildStabilityGraph(ReferenceInstance());
  std::vector<std::size_t> bad = {EdgeByLabels(g, "2a", "2'c"), EdgeByLabels(g, "3c", "2'c")};
  std::sort(bad.begin(), bad.end());
  EXPECT_FALSE(IsIndependentMatching(g, bad));
  EXPECT_THROW(BuildAuxiliaryDigraph(g, bad), PreconditionError);
}

TEST(MaxIndependentMatchingTest, Reference) {
  StabilityGraph g = BuildStabilityGraph(ReferenceInstance());
  IndependentMatchingState s = MaxIndependentMatching(g);
  EXPECT_EQ(s.size(), 5u);
  EXPECT_TRUE(IsIndependentMatching(g, s.matching));
  EXPECT_EQ(BruteForceMatching(g), 5u);
  EXPECT_LE(s.augmentations, g.edges.size());
}

TEST(MaxIndependentMatchingTest, EmptyGraph) {
  StabilityGraph g = BuildStabilityGraph(PartitionedMatrix(Matrix(Gf2(), 2, 2), {1, 1}, {2}));
  IndependentMatchingState s = MaxIndependentMatching(g);
  EXPECT_EQ(s.size(), 0u);
  EXPECT_EQ(CoverValue(g, MinCover(s)), 0u);
}

TEST(MaxIndependentMatchingTest, AllOnesUnitBlocks) {
  PartitionedMatrix a(Matrix::FromIntegers(Gf2(), {{1, 1}, {1, 1}}), {1, 1}, {1, 1});
  StabilityGraph g = BuildStabilityGraph(a);
  EXPECT_EQ(g.pi.size(), 2u);
  EXPECT_EQ(g.sigma.size(), 2u);
  EXPECT_EQ(g.edges.size(), 4u);
  EXPECT_EQ(BruteForceMatching(g), 2u);
  EXPECT_EQ(MaxIndependentMatching(g).size(), 2u);
}

TEST(MinCoverTest, Reference) {
  StabilityGraph g = BuildStabilityGraph(ReferenceInstance());
  IndependentMatchingState s = MaxIndependentMatching(g);
  Cover c = MinCover(s);
  EXPECT_TRUE(IsCover(g, c));
  EXPECT_EQ(CoverValue(g, c), 5u);
  EXPECT_EQ(g.pi.size() + g.sigma.size(), 12u);
  std::vector<bool> reach = ReachableFrom(s.aux, s.sources);
  for (const char* v : {"3a", "3'a", "2c"}) EXPECT_TRUE(reach[VertexByLabel(g, v)]) << v;
}

TEST(MinCoverTest, RejectsNonMaximum) {
  StabilityGraph g = BuildStabilityGraph(ReferenceInstance());
  IndependentMatchingState s = BuildAuxiliaryDigraph(g, {});
  EXPECT_THROW(MinCover(s), PreconditionError);
}

TEST(MatchingPropertyTest, RandomAgainstExhaustiveSearch) {
  Rng rng(31);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const FieldSpec field = trial % 3 == 0 ? FieldSpec::Prime(3) : Gf2();
    PartitionedMatrix a = testing::RandomInstance(rng, field, {1, 3, 2, 0.25});
    StabilityGraph g = BuildStabilityGraph(a);
    IndependentMatchingState s = MaxIndependentMatching(g);
    ASSERT_TRUE(IsIndependentMatching(g, s.matching));
    ASSERT_LE(s.augmentations, g.edges.size());
    ASSERT_EQ(s.size(), BruteForceMatching(g));
    Cover c = MinCover(s);
    ASSERT_TRUE(IsCover(g, c));
    ASSERT_EQ(CoverValue(g, c), s.size());
    if (g.pi.size() <= 6 && g.sigma.size() <= 6) {
      ASSERT_EQ(BruteForceMinCover(g), s.size());
      ++checked;
    }
  }
  EXPECT_GT(checked, 200);
}

TEST(MatchingPropertyTest, WeakDualityForEveryCover) {
  Rng rng(37);
  for (int trial = 0; trial < 60; ++trial) {
    PartitionedMatrix a = testing::RandomInstance(rng, Gf2(), {1, 3, 2, 0.3});
    StabilityGraph g = BuildStabilityGraph(a);
    if (g.pi.size() > 5 || g.sigma.size() > 5) continue;
    const std::size_t m = MaxIndependentMatching(g).size();
    for (std::uint64_t hm = 0; hm < (std::uint64_t{1} << g.pi.size()); ++hm) {
      for (std::uint64_t km = 0; km < (std::uint64_t{1} << g.sigma.size()); ++km) {
        Cover c;
        for (std::size_t i = 0; i < g.pi.size(); ++i) {
          if (hm >> i & 1) c.h.push_back(i);
        }
        for (std::size_t i = 0; i < g.sigma.size(); ++i) {
          if (km >> i & 1) c.k.push_back(i);
        }
        if (IsCover(g, c)) {
          ASSERT_LE(m, CoverValue(g, c));
        }
      }
    }
  }
}

TEST(MatchingPropertyTest, ExchangeArcsMatchDirectRankTests) {
  Rng rng(41);
  for (int trial = 0; trial < 150; ++trial) {
    PartitionedMatrix a = testing::RandomInstance(rng, FieldSpec::Prime(3), {1, 3, 3, 0.2});
    StabilityGraph g = BuildStabilityGraph(a);
    IndependentMatchingState s = MaxIndependentMatching(g);
    std::vector<std::size_t> dp;
    std::vector<std::size_t> dm;
    for (std::size_t e : s.matching) {
      dp.push_back(g.edges[e].pi);
      dm.push_back(g.edges[e].sigma);
    }
    const std::size_t rp = SideRank(g, true, dp);
    const std::size_t rm = SideRank(g, false, dm);
    auto has_arc = [&](std::size_t u, std::size_t w) {
      return std::binary_search(s.aux[u].begin(), s.aux[u].end(), w);
    };
    for (std::size_t x : dp) {
      for (std::size_t y = 0; y < g.pi.size(); ++y) {
        if (std::find(dp.begin(), dp.end(), y) != dp.end()) continue;
        std::vector<std::size_t> with_y = dp;
        with_y.push_back(y);
        const bool in_closure = SideRank(g, true, with_y) == rp;
        std::vector<std::size_t> swapped = with_y;
        swapped.erase(std::find(swapped.begin(), swapped.end(), x));
        const bool expected = in_closure && SideRank(g, true, swapped) == rp;
        ASSERT_EQ(has_arc(x, y), expected);
      }
    }
    const std::size_t off = g.pi.size();
    for (std::size_t y : dm) {
      for (std::size_t x = 0; x < g.sigma.size(); ++x) {
        if (std::find(dm.begin(), dm.end(), x) != dm.end()) continue;
        std::vector<std::size_t> with_x = dm;
        with_x.push_back(x);
        const bool in_closure = SideRank(g, false, with_x) == rm;
        std::vector<std::size_t> swapped = with_x;
        swapped.erase(std::find(swapped.begin(), swapped.end(), y));
        const bool expected = in_closure && SideRank(g, false, swapped) == rm;
        ASSERT_EQ(has_arc(off + x, off + y), expected);
      }
    }
  }
}

}  // namespace
}  // namespace blockdm
