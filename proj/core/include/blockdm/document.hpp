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

#ifndef BLOCKDM_DOCUMENT_HPP_
#define BLOCKDM_DOCUMENT_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "blockdm/decompose.hpp"
#include "blockdm/errors.hpp"
#include "blockdm/field.hpp"
#include "blockdm/partitioned.hpp"

namespace blockdm {

// Input document, JSON:
//
//   {
//     "field": {"kind": "gf", "p": 2},          // or {"kind": "rational"}
//     "row_blocks": [2, 2, 2],
//     "col_blocks": [2, 2, 2],
//     "entries": [["1", "0", ...], ...]         // strings; integers accepted
//   }
struct InputDocument {
  FieldSpec field;
  std::vector<std::size_t> row_blocks;
  std::vector<std::size_t> col_blocks;
  std::vector<std::vector<std::string>> entries;

  friend bool operator==(const InputDocument&, const InputDocument&) = default;
};

class ParseError : public Error {
 public:
  enum class Kind { kMalformed, kNonPrimeModulus, kEntry, kShapeMismatch };

  // `line`/`column` are 1-based text positions, 0 when not applicable.
  ParseError(Kind kind, std::string message, std::size_t line = 0, std::size_t column = 0);

  Kind kind() const { return kind_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  Kind kind_;
  std::size_t line_;
  std::size_t column_;
};

// Throws ParseError.
InputDocument ParseInput(std::string_view text);
std::string SerializeInput(const InputDocument& doc);

// Throws ParseError (kEntry) if an entry does not parse in the field.
PartitionedMatrix ToPartitionedMatrix(const InputDocument& doc);
InputDocument FromPartitionedMatrix(const PartitionedMatrix& a);

struct OracleSummary {
  std::size_t v_star = 0;
  std::size_t maximizers = 0;
  std::size_t ideals = 0;
  bool agrees = false;
};

// Deterministic JSON rendering of a decomposition. `report` and `oracle` are
// included when non-null.
std::string RenderResult(const PartitionedMatrix& a, const DMResult& result,
                         const VerificationReport* report, const OracleSummary* oracle);

}  // namespace blockdm

#endif  // BLOCKDM_DOCUMENT_HPP_
