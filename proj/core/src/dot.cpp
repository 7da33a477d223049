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

#include "blockdm/dot.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

namespace blockdm {
namespace {

std::string Quote(const std::string& s) { return "\"" + s + "\""; }

bool Contains(const std::vector<std::size_t>& sorted, std::size_t v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

void WriteNodes(std::ostream& out, const StabilityGraph& g, const IndependentMatchingState& state,
                const ReachabilitySets* reach) {
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    std::string attrs = "label=" + Quote(g.Label(v)) + ", shape=" + (g.IsPi(v) ? "box" : "ellipse");
    std::string style;
    if (Contains(state.sources, v) || Contains(state.sinks, v)) {
      attrs += ", penwidth=2.5";
      attrs += Contains(state.sources, v) ? ", color=blue" : ", color=red";
    }
    if (reach != nullptr) {
      if (Contains(reach->c0, v)) {
        style = "filled";
        attrs += ", fillcolor=lightblue";
      } else if (Contains(reach->cinf, v)) {
        style = "filled";
        attrs += ", fillcolor=mistyrose";
      }
    }
    if (!style.empty()) attrs += ", style=" + style;
    out << "  v" << v << " [" << attrs << "];\n";
  }
}

}  // namespace

void WriteStabilityDot(std::ostream& out, const StabilityGraph& g, const IndependentMatchingState& state) {
  const std::set<std::size_t> matched(state.matching.begin(), state.matching.end());
  out << "graph stability {\n  rankdir=LR;\n";
  WriteNodes(out, g, state, nullptr);
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const StabilityEdge& edge = g.edges[e];
    out << "  v" << edge.pi << " -- v" << g.pi.size() + edge.sigma;
    if (matched.count(e) != 0) out << " [penwidth=3, color=black]";
    out << ";\n";
  }
  out << "}\n";
}

void WriteAuxiliaryDot(std::ostream& out, const StabilityGraph& g, const IndependentMatchingState& state,
                       const ReachabilitySets& reach) {
  std::set<std::pair<std::size_t, std::size_t>> graph_arcs;
  for (const auto& edge : g.edges) graph_arcs.emplace(edge.pi, g.pi.size() + edge.sigma);
  out << "digraph auxiliary {\n  rankdir=LR;\n";
  WriteNodes(out, g, state, &reach);
  for (std::size_t u = 0; u < state.aux.size(); ++u) {
    for (std::size_t w : state.aux[u]) {
      out << "  v" << u << " -> v" << w;
      if (g.IsPi(u) == g.IsPi(w)) {
        out << " [style=dashed]";
      } else if (!g.IsPi(u) && state.mate[u] == w) {
        out << " [penwidth=3]";
      } else if (graph_arcs.count({u, w}) == 0) {
        out << " [style=dotted]";
      }
      out << ";\n";
    }
  }
  out << "}\n";
}

}  // namespace blockdm
