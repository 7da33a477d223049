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

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "blockdm/document.hpp"
#include "blockdm/driver.hpp"

namespace {

// Reads and parses `path`; on failure prints a diagnostic and returns false.
bool Load(const std::string& path, blockdm::InputDocument* doc) {
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    std::cerr << "error: cannot read " << path << '\n';
    return false;
  }
  std::ostringstream text;
  text << file.rdbuf();
  try {
    *doc = blockdm::ParseInput(text.str());
  } catch (const blockdm::ParseError& e) {
    std::cerr << path << ": " << e.what() << '\n';
    return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Block-triangular decomposition of partitioned matrices with rank <= 1 blocks"};
  app.require_subcommand(1);

  std::string input;
  blockdm::DecomposeOptions options;
  std::string out_path;
  std::string dot_path;

  CLI::App* decompose = app.add_subcommand("decompose", "Compute the decomposition and write the result document");
  decompose->add_option("input", input, "Input document")->required();
  decompose->add_option("--out", out_path, "Write the result here instead of stdout");
  decompose->add_option("--dot", dot_path, "Write the stability graph and auxiliary digraph as DOT");
  decompose->add_flag("--verify", options.verify, "Check the decomposition and fail on any violation");
  decompose->add_flag("--oracle", options.oracle, "Cross-check against brute force (small instances)");

  CLI::App* oracle = app.add_subcommand("oracle", "Brute-force maximum stable subspaces");
  oracle->add_option("input", input, "Input document")->required();

  CLI::App* graph = app.add_subcommand("graph", "Write the stability graph and auxiliary digraph as DOT");
  graph->add_option("input", input, "Input document")->required();
  graph->add_option("--dot", dot_path, "Output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? blockdm::kExitOk : blockdm::kExitUsage;
  }

  blockdm::InputDocument doc{blockdm::FieldSpec::Rationals(), {}, {}, {}};
  if (!Load(input, &doc)) return blockdm::kExitUsage;

  if (*decompose) {
    if (!out_path.empty()) options.out_path = out_path;
    if (!dot_path.empty()) options.dot_path = dot_path;
    return blockdm::RunDecompose(doc, options, std::cout, std::cerr);
  }
  if (*oracle) return blockdm::RunOracle(doc, std::cout, std::cerr);
  return blockdm::RunGraph(doc, dot_path, std::cout, std::cerr);
}
