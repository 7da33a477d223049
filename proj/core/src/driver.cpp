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

#include "blockdm/driver.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "blockdm/dot.hpp"
#include "blockdm/oracle.hpp"
#include "json.hpp"

namespace blockdm {
namespace {

OracleSummary CompareWithOracle(const PartitionedMatrix& a, const DMResult& result) {
  oracle::BruteForceResult brute = oracle::BruteForceMaxStable(a);
  std::vector<std::vector<std::size_t>> ideals = result.poset.Ideals();
  std::vector<oracle::StablePair> mapped;
  for (const auto& ideal : ideals) {
    mapped.push_back(oracle::FromStableSubspace(IdealToStableSubspace(ideal, result.poset, result.graph)));
  }
  std::sort(mapped.begin(), mapped.end());
  OracleSummary summary;
  summary.v_star = brute.v_star;
  summary.maximizers = brute.maximizers.size();
  summary.ideals = ideals.size();
  summary.agrees = brute.v_star == result.stable_dimension && mapped == brute.maximizers;
  return summary;
}

bool WriteFile(const std::string& path, const std::string& contents, std::ostream& err) {
  std::ofstream file(path, std::ios::binary);
  file << contents;
  if (!file) {
    err << "error: cannot write " << path << '\n';
    return false;
  }
  return true;
}

std::string DotText(const DMResult& result) {
  std::ostringstream dot;
  WriteStabilityDot(dot, result.graph, result.state);
  WriteAuxiliaryDot(dot, result.graph, result.state, ReachabilitySets{result.poset.c0, result.poset.cinf});
  return dot.str();
}

// Runs `body`, mapping library exceptions to exit codes.
template <typename Body>
int Guarded(std::ostream& err, Body body) {
  try {
    return body();
  } catch (const RankConditionViolated& e) {
    err << "error: " << e.what() << '\n';
    return kExitRankCondition;
  } catch (const OracleBoundsError& e) {
    err << "error: " << e.what() << '\n';
    return kExitOracleBounds;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace

int RunDecompose(const InputDocument& doc, const DecomposeOptions& options, std::ostream& out,
                 std::ostream& err) {
  return Guarded(err, [&] {
    PartitionedMatrix a = ToPartitionedMatrix(doc);
    DMResult result = DmDecompose(a);

    std::optional<OracleSummary> summary;
    if (options.oracle) {
      if (!oracle::WithinBruteForceBounds(a)) {
        err << "error: instance exceeds the brute-force oracle bounds\n";
        return static_cast<int>(kExitOracleBounds);
      }
      summary = CompareWithOracle(a, result);
    }
    std::optional<VerificationReport> report;
    if (options.verify) report = Verify(a, result);

    const std::string text = RenderResult(a, result, report ? &*report : nullptr, summary ? &*summary : nullptr);
    if (options.out_path) {
      if (!WriteFile(*options.out_path, text, err)) return static_cast<int>(kExitUsage);
    } else {
      out << text;
    }
    if (options.dot_path && !WriteFile(*options.dot_path, DotText(result), err)) {
      return static_cast<int>(kExitUsage);
    }

    int code = kExitOk;
    if (report && !report->AllPassed()) {
      for (const auto& c : report->checks) {
        if (!c.passed) err << "verification failed: " << c.name << ": " << c.detail << '\n';
      }
      code = kExitVerificationFailed;
    }
    if (summary && !summary->agrees) {
      err << "oracle disagreement: brute force v* = " << summary->v_star << ", pipeline v* = "
          << result.stable_dimension << '\n';
      code = kExitVerificationFailed;
    }
    return code;
  });
}

int RunOracle(const InputDocument& doc, std::ostream& out, std::ostream& err) {
  return Guarded(err, [&] {
    PartitionedMatrix a = ToPartitionedMatrix(doc);
    if (!oracle::WithinBruteForceBounds(a)) {
      err << "error: instance exceeds the brute-force oracle bounds\n";
      return static_cast<int>(kExitOracleBounds);
    }
    DMResult result = DmDecompose(a);
    OracleSummary summary = CompareWithOracle(a, result);
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    j["v_star"] = summary.v_star;
    j["pipeline_v_star"] = result.stable_dimension;
    j["maximum_stable_subspaces"] = summary.maximizers;
    j["poset_ideals"] = summary.ideals;
    j["agrees"] = summary.agrees;
    out << j.dump(2) << '\n';
    return static_cast<int>(summary.agrees ? kExitOk : kExitVerificationFailed);
  });
}

int RunGraph(const InputDocument& doc, const std::string& dot_path, std::ostream& out, std::ostream& err) {
  return Guarded(err, [&] {
    PartitionedMatrix a = ToPartitionedMatrix(doc);
    DMResult result = DmDecompose(a);
    if (!WriteFile(dot_path, DotText(result), err)) return static_cast<int>(kExitUsage);
    out << "wrote " << dot_path << '\n';
    return static_cast<int>(kExitOk);
  });
}

}  // namespace blockdm
