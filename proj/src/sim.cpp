// Copyright 2026 The qbcsat Authors
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

#include "qbcsat/sim.hpp"

#include <nlohmann/json.hpp>

namespace qbcsat {

nlohmann::json to_json(const SolutionReport& report) {
  auto strings = [](const AssignmentSet& set) {
    std::vector<std::string> out;
    for (const auto& a : set) out.push_back(a.to_string());
    return out;
  };
  return {{"count", report.count()},
          {"solutions", strings(report.true_space)},
          {"non_solutions", strings(report.false_space)}};
}

}  // namespace qbcsat
