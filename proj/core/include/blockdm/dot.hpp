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

#ifndef BLOCKDM_DOT_HPP_
#define BLOCKDM_DOT_HPP_

#include <ostream>

#include "blockdm/decompose.hpp"
#include "blockdm/matching.hpp"
#include "blockdm/partitioned.hpp"

namespace blockdm {

// Undirected bipartite graph G; matching edges drawn bold.
void WriteStabilityDot(std::ostream& out, const StabilityGraph& g, const IndependentMatchingState& state);

// G~_M with exchange arcs dashed, S and T outlined, C0 and Cinf filled.
void WriteAuxiliaryDot(std::ostream& out, const StabilityGraph& g, const IndependentMatchingState& state,
                       const ReachabilitySets& reach);

}  // namespace blockdm

#endif  // BLOCKDM_DOT_HPP_
