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

// Spin systems as JSON documents:
//
//   {
//     "spins": [{"name": "C'", "shift_hz": -4320}, ...],
//     "couplings": [[0, 34.94, ...], ...],
//     "observed": "Ca",
//     "decoupled": ["H"],
//     "variables": ["C'", "Cb"],
//     "scratch": []
//   }

#include <fstream>

#include <nlohmann/json.hpp>

#include "qbcsat/spectrum.hpp"

namespace qbcsat {

SpinSystem spin_system_from_json(const nlohmann::json& j) {
  try {
    SpinSystem sys;
    for (const auto& s : j.at("spins")) {
      sys.spins.push_back({s.at("name").get<std::string>(), s.value("shift_hz", 0.0)});
    }
    const auto rows = j.at("couplings").get<std::vector<std::vector<double>>>();
    const auto n = static_cast<Eigen::Index>(sys.spins.size());
    if (static_cast<Eigen::Index>(rows.size()) != n) throw ParseError("coupling table row count != spin count");
    sys.couplings.resize(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
      if (static_cast<Eigen::Index>(rows[r].size()) != n) throw ParseError("coupling table is not square");
      for (Eigen::Index c = 0; c < n; ++c) sys.couplings(r, c) = rows[r][c];
    }
    auto lookup = [&](const nlohmann::json& name) {
      try {
        return sys.index_of(name.get<std::string>());
      } catch (const InvalidArgument& e) {
        throw ParseError(e.what());
      }
    };
    sys.observed = lookup(j.at("observed"));
    for (const auto& d : j.value("decoupled", nlohmann::json::array())) sys.decoupled.insert(lookup(d));
    for (const auto& v : j.at("variables")) sys.variable_spins.push_back(lookup(v));
    for (const auto& s : j.value("scratch", nlohmann::json::array())) sys.scratch_spins.push_back(lookup(s));
    sys.validate();
    return sys;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("spin system document: ") + e.what());
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("spin system document: ") + e.what());
  }
}

nlohmann::json to_json(const SpinSystem& sys) {
  nlohmann::json spins = nlohmann::json::array();
  for (const auto& s : sys.spins) spins.push_back({{"name", s.name}, {"shift_hz", s.shift_hz}});
  std::vector<std::vector<double>> rows(sys.spins.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows.size(); ++c) {
      rows[r].push_back(sys.couplings(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)));
    }
  }
  auto names = [&](const auto& indices) {
    std::vector<std::string> out;
    for (auto i : indices) out.push_back(sys.spins.at(i).name);
    return out;
  };
  return {{"spins", std::move(spins)},
          {"couplings", std::move(rows)},
          {"observed", sys.spins.at(sys.observed).name},
          {"decoupled", names(sys.decoupled)},
          {"variables", names(sys.variable_spins)},
          {"scratch", names(sys.scratch_spins)}};
}

SpinSystem load_spin_system(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open spin system file '" + path + "'");
  try {
    return spin_system_from_json(nlohmann::json::parse(in));
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("spin system file '" + path + "': " + e.what());
  }
}

}  // namespace qbcsat
