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

#include "blockdm/document.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace blockdm {
namespace {

using Json = nlohmann::ordered_json;

std::pair<std::size_t, std::size_t> LineColumn(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < std::min(byte, text.size()); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

[[noreturn]] void Malformed(const std::string& message) {
  throw ParseError(ParseError::Kind::kMalformed, message);
}

std::vector<std::size_t> ReadBlocks(const Json& root, const char* key) {
  if (!root.contains(key) || !root[key].is_array() || root[key].empty()) {
    Malformed(std::string("'") + key + "' must be a non-empty array of positive integers");
  }
  std::vector<std::size_t> blocks;
  for (const auto& v : root[key]) {
    if (!v.is_number_integer() || v.get<std::int64_t>() <= 0) {
      Malformed(std::string("'") + key + "' must contain positive integers");
    }
    blocks.push_back(v.get<std::size_t>());
  }
  return blocks;
}

FieldSpec ReadField(const Json& root) {
  if (!root.contains("field") || !root["field"].is_object()) Malformed("missing 'field' object");
  const Json& f = root["field"];
  if (!f.contains("kind") || !f["kind"].is_string()) Malformed("'field.kind' must be \"gf\" or \"rational\"");
  std::string kind = f["kind"].get<std::string>();
  if (kind == "rational") return FieldSpec::Rationals();
  if (kind != "gf") Malformed("unknown field kind '" + kind + "'");
  if (!f.contains("p") || !f["p"].is_number_integer()) Malformed("'field.p' must be an integer");
  std::int64_t p = f["p"].get<std::int64_t>();
  if (p >= static_cast<std::int64_t>(FieldSpec::kMaxModulus)) {
    Malformed("'field.p' must be below 2^31");
  }
  if (p < 2 || !IsPrime(static_cast<std::uint64_t>(p))) {
    throw ParseError(ParseError::Kind::kNonPrimeModulus, "field modulus " + std::to_string(p) + " is not prime");
  }
  return FieldSpec::Prime(static_cast<std::uint64_t>(p));
}

Json FieldJson(const FieldSpec& field) {
  Json f = Json::object();
  if (field.is_prime_field()) {
    f["kind"] = "gf";
    f["p"] = field.modulus();
  } else {
    f["kind"] = "rational";
  }
  return f;
}

Json MatrixJson(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).ToString());
    rows.push_back(std::move(row));
  }
  return rows;
}

bool IsFlat(const Json& j) {
  return std::none_of(j.begin(), j.end(), [](const Json& v) { return v.is_structured(); });
}

// Like dump(2), but arrays of scalars stay on one line.
void Pretty(std::ostringstream& out, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
  if (j.is_array()) {
    if (j.empty() || IsFlat(j)) {
      out << j.dump();
      return;
    }
    out << "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      out << inner;
      Pretty(out, j[i], indent + 1);
      out << (i + 1 < j.size() ? ",\n" : "\n");
    }
    out << pad << ']';
  } else if (j.is_object()) {
    if (j.empty()) {
      out << "{}";
      return;
    }
    out << "{\n";
    std::size_t i = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++i) {
      out << inner << Json(it.key()).dump() << ": ";
      Pretty(out, it.value(), indent + 1);
      out << (i + 1 < j.size() ? ",\n" : "\n");
    }
    out << pad << '}';
  } else {
    out << j.dump();
  }
}

std::string PrettyDump(const Json& j) {
  std::ostringstream out;
  Pretty(out, j, 0);
  out << '\n';
  return out.str();
}

Json Labels(const StabilityGraph& g, const std::vector<std::size_t>& global) {
  Json out = Json::array();
  for (std::size_t v : global) out.push_back(g.Label(v));
  return out;
}

Json BasisLabels(const std::vector<BasisElement>& order, Side side) {
  Json out = Json::array();
  for (const auto& e : order) {
    out.push_back(VertexLabel(HyperplaneVertex{side, e.block, e.normal}) + (e.completion ? "*" : ""));
  }
  return out;
}

}  // namespace

ParseError::ParseError(Kind kind, std::string message, std::size_t line, std::size_t column)
    : Error(line > 0 ? "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message
                     : message),
      kind_(kind),
      line_(line),
      column_(column) {}

InputDocument ParseInput(std::string_view text) {
  Json root;
  try {
    root = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, column] = LineColumn(text, e.byte == 0 ? 0 : e.byte - 1);
    std::string what = e.what();
    if (auto pos = what.find("syntax error"); pos != std::string::npos) what = what.substr(pos);
    throw ParseError(ParseError::Kind::kMalformed, what, line, column);
  }
  if (!root.is_object()) Malformed("document must be a JSON object");

  InputDocument doc{ReadField(root), ReadBlocks(root, "row_blocks"), ReadBlocks(root, "col_blocks"), {}};
  if (!root.contains("entries") || !root["entries"].is_array()) Malformed("missing 'entries' array");
  const std::size_t n = std::accumulate(doc.row_blocks.begin(), doc.row_blocks.end(), std::size_t{0});
  const std::size_t m = std::accumulate(doc.col_blocks.begin(), doc.col_blocks.end(), std::size_t{0});
  const Json& entries = root["entries"];
  if (entries.size() != n) {
    throw ParseError(ParseError::Kind::kShapeMismatch, "expected " + std::to_string(n) + " entry rows, found " +
                                                           std::to_string(entries.size()));
  }
  for (std::size_t r = 0; r < entries.size(); ++r) {
    const Json& row = entries[r];
    if (!row.is_array()) Malformed("entry row " + std::to_string(r + 1) + " is not an array");
    if (row.size() != m) {
      throw ParseError(ParseError::Kind::kShapeMismatch, "entry row " + std::to_string(r + 1) + " has " +
                                                             std::to_string(row.size()) + " entries, expected " +
                                                             std::to_string(m));
    }
    std::vector<std::string> cells;
    for (std::size_t c = 0; c < row.size(); ++c) {
      std::string cell;
      if (row[c].is_string()) {
        cell = row[c].get<std::string>();
      } else if (row[c].is_number_integer()) {
        cell = row[c].dump();
      } else {
        throw ParseError(ParseError::Kind::kEntry, "entry (" + std::to_string(r + 1) + "," +
                                                       std::to_string(c + 1) + ") must be a string or integer");
      }
      try {
        FieldElement::Parse(doc.field, cell);
      } catch (const Error& e) {
        throw ParseError(ParseError::Kind::kEntry,
                         "entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) + "): " + e.what());
      }
      cells.push_back(std::move(cell));
    }
    doc.entries.push_back(std::move(cells));
  }
  return doc;
}

std::string SerializeInput(const InputDocument& doc) {
  Json root = Json::object();
  root["field"] = FieldJson(doc.field);
  root["row_blocks"] = doc.row_blocks;
  root["col_blocks"] = doc.col_blocks;
  root["entries"] = doc.entries;
  return PrettyDump(root);
}

PartitionedMatrix ToPartitionedMatrix(const InputDocument& doc) {
  const std::size_t m = doc.entries.empty() ? 0 : doc.entries.front().size();
  Matrix matrix(doc.field, doc.entries.size(), m);
  for (std::size_t r = 0; r < doc.entries.size(); ++r) {
    if (doc.entries[r].size() != m) throw ParseError(ParseError::Kind::kShapeMismatch, "ragged entry rows");
    for (std::size_t c = 0; c < m; ++c) {
      try {
        matrix(r, c) = FieldElement::Parse(doc.field, doc.entries[r][c]);
      } catch (const Error& e) {
        throw ParseError(ParseError::Kind::kEntry,
                         "entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) + "): " + e.what());
      }
    }
  }
  try {
    return PartitionedMatrix(std::move(matrix), doc.row_blocks, doc.col_blocks);
  } catch (const UsageError& e) {
    throw ParseError(ParseError::Kind::kShapeMismatch, e.what());
  }
}

InputDocument FromPartitionedMatrix(const PartitionedMatrix& a) {
  InputDocument doc{a.field(), a.row_blocks(), a.col_blocks(), {}};
  for (std::size_t r = 0; r < a.rows(); ++r) {
    std::vector<std::string> row;
    for (std::size_t c = 0; c < a.cols(); ++c) row.push_back(a.matrix()(r, c).ToString());
    doc.entries.push_back(std::move(row));
  }
  return doc;
}

std::string RenderResult(const PartitionedMatrix& a, const DMResult& result, const VerificationReport* report,
                         const OracleSummary* oracle) {
  const StabilityGraph& g = result.graph;
  const ChainPoset& poset = result.poset;
  Json root = Json::object();
  root["field"] = FieldJson(a.field());
  root["row_blocks"] = a.row_blocks();
  root["col_blocks"] = a.col_blocks();

  Json matching = Json::array();
  for (std::size_t e : result.state.matching) {
    const StabilityEdge& edge = g.edges[e];
    matching.push_back(Json::array({g.Label(edge.pi), g.Label(g.pi.size() + edge.sigma)}));
  }
  root["matching"] = std::move(matching);
  root["matching_size"] = result.matching_size;
  root["stable_dimension"] = result.stable_dimension;
  root["augmentations"] = result.state.augmentations;
  root["sources"] = Labels(g, result.state.sources);
  root["sinks"] = Labels(g, result.state.sinks);
  root["c0"] = Labels(g, poset.c0);
  root["cinf"] = Labels(g, poset.cinf);

  Json p = Json::object();
  p["height"] = poset.height();
  Json groups = Json::array();
  for (std::size_t k = 0; k < poset.h_sets.size(); ++k) {
    Json grp = Json::object();
    grp["label"] = k == 0 ? Json("0") : k == poset.infinity_group() ? Json("inf") : Json(std::to_string(k));
    grp["H"] = Labels(g, poset.h_sets[k]);
    grp["K"] = Labels(g, poset.k_sets[k]);
    groups.push_back(std::move(grp));
  }
  p["groups"] = std::move(groups);
  Json relations = Json::array();
  for (auto [k, l] : poset.relations) relations.push_back(Json::array({k, l}));
  p["relations"] = std::move(relations);
  root["poset"] = std::move(p);

  Json basis = Json::object();
  basis["H"] = BasisLabels(result.bases.h_order, Side::kRow);
  basis["K"] = BasisLabels(result.bases.k_order, Side::kCol);
  root["basis_order"] = std::move(basis);

  Json blocks = Json::array();
  for (auto [r, c] : result.diag_blocks) blocks.push_back(Json::array({r, c}));
  root["diag_blocks"] = std::move(blocks);
  Json chain = Json::array();
  for (auto [x, y] : result.chain_dims) chain.push_back(Json::array({x, y}));
  root["chain"] = std::move(chain);

  root["E"] = MatrixJson(result.e);
  root["F"] = MatrixJson(result.f);
  root["A_DM"] = MatrixJson(result.a_dm);

  if (report != nullptr) {
    Json v = Json::object();
    v["passed"] = report->AllPassed();
    Json checks = Json::array();
    for (const auto& c : report->checks) {
      Json check = Json::object();
      check["name"] = c.name;
      check["passed"] = c.passed;
      if (!c.detail.empty()) check["detail"] = c.detail;
      checks.push_back(std::move(check));
    }
    v["checks"] = std::move(checks);
    root["verification"] = std::move(v);
  }
  if (oracle != nullptr) {
    Json o = Json::object();
    o["v_star"] = oracle->v_star;
    o["maximum_stable_subspaces"] = oracle->maximizers;
    o["poset_ideals"] = oracle->ideals;
    o["agrees"] = oracle->agrees;
    root["oracle"] = std::move(o);
  }
  return PrettyDump(root);
}

}  // namespace blockdm
