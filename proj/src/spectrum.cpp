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

#include "qbcsat/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <charconv>
#include <map>
#include <numeric>

#include <nlohmann/json.hpp>

namespace qbcsat {

double SpinSystem::coupling_to_observed(std::size_t var) const {
  if (var == 0 || var > variable_spins.size()) {
    throw InvalidArgument("spin system has no spin for x" + std::to_string(var));
  }
  return couplings(static_cast<Eigen::Index>(observed), static_cast<Eigen::Index>(variable_spins[var - 1]));
}

std::size_t SpinSystem::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < spins.size(); ++i) {
    if (spins[i].name == name) return i;
  }
  throw InvalidArgument("no spin named '" + std::string(name) + "'");
}

void SpinSystem::validate() const {
  const auto n = static_cast<Eigen::Index>(spins.size());
  if (n == 0) throw InvalidArgument("spin system has no spins");
  if (couplings.rows() != n || couplings.cols() != n) {
    throw InvalidArgument("coupling table must be " + std::to_string(n) + "x" + std::to_string(n));
  }
  if (!couplings.isApprox(couplings.transpose(), 0.0) || couplings.diagonal().cwiseAbs().maxCoeff() != 0.0) {
    throw InvalidArgument("coupling table must be symmetric with a zero diagonal");
  }
  if (observed >= spins.size()) throw InvalidArgument("observed spin index out of range");
  if (decoupled.count(observed)) throw InvalidArgument("observed spin cannot be decoupled");
  std::set<std::size_t> used{observed};
  for (const auto* group : {&variable_spins, &scratch_spins}) {
    for (auto s : *group) {
      if (s >= spins.size()) throw InvalidArgument("role map names spin index " + std::to_string(s));
      if (!used.insert(s).second) throw InvalidArgument("spin '" + spins[s].name + "' has two roles");
    }
  }
  for (auto d : decoupled) {
    if (d >= spins.size()) throw InvalidArgument("decoupled spin index out of range");
  }
}

namespace {

Eigen::MatrixXd alanine_couplings() {
  // Order: C', C-alpha, C-beta, H.
  Eigen::MatrixXd j(4, 4);
  j << 0.0, 34.94, -1.2, 5.5,
       34.94, 0.0, 53.81, 143.21,
       -1.2, 53.81, 0.0, 5.1,
       5.5, 143.21, 5.1, 0.0;
  return j;
}

std::vector<Spin> alanine_spins() {
  return {{"C'", -4320.0}, {"Ca", 0.0}, {"Cb", 15793.0}, {"H", 1550.0}};
}

}  // namespace

SpinSystem alanine_3q() {
  SpinSystem sys{alanine_spins(), alanine_couplings(), 1, {3}, {0, 2}, {}};
  sys.validate();
  return sys;
}

SpinSystem alanine_4q() {
  SpinSystem sys{alanine_spins(), alanine_couplings(), 1, {}, {0, 2, 3}, {}};
  sys.validate();
  return sys;
}

SpinSystem synthetic_resolvable(std::size_t num_vars, double spacing_hz) {
  if (!(spacing_hz > 0.0)) throw InvalidArgument("spacing must be positive");
  if (num_vars > 30) throw LimitExceeded("synthetic spin system limited to 30 variables");
  SpinSystem sys;
  sys.spins.push_back({"I0", 0.0});
  for (std::size_t i = 1; i <= num_vars; ++i) sys.spins.push_back({"I" + std::to_string(i), 0.0});
  const auto size = static_cast<Eigen::Index>(num_vars + 1);
  sys.couplings = Eigen::MatrixXd::Zero(size, size);
  for (Eigen::Index i = 1; i < size; ++i) {
    sys.couplings(0, i) = sys.couplings(i, 0) = spacing_hz * std::ldexp(1.0, static_cast<int>(i - 1));
    sys.variable_spins.push_back(static_cast<std::size_t>(i));
  }
  sys.validate();
  return sys;
}

std::vector<std::string> spin_system_preset_names() {
  return {"alanine-3q", "alanine-4q", "synthetic-<n>"};
}

SpinSystem spin_system_preset(std::string_view name) {
  if (name == "alanine-3q") return alanine_3q();
  if (name == "alanine-4q") return alanine_4q();
  constexpr std::string_view prefix = "synthetic-";
  if (name.substr(0, prefix.size()) == prefix) {
    const auto digits = name.substr(prefix.size());
    std::size_t n = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (!digits.empty() && ec == std::errc() && ptr == digits.data() + digits.size()) {
      return synthetic_resolvable(n);
    }
  }
  throw InvalidArgument("unknown spin-system preset '" + std::string(name) + "'");
}

std::vector<double> configuration_frequencies(const SpinSystem& sys, std::size_t num_vars) {
  if (num_vars > sys.capacity()) {
    throw InvalidArgument(std::to_string(num_vars) + " variables exceed the spin system's " +
                          std::to_string(sys.capacity()) + " variable spins");
  }
  if (num_vars >= 63) throw LimitExceeded("too many variables for a multiplet");
  std::vector<double> half_j(num_vars);
  for (std::size_t i = 0; i < num_vars; ++i) half_j[i] = 0.5 * sys.coupling_to_observed(i + 1);

  std::vector<double> freqs(std::size_t{1} << num_vars);
  for (std::size_t x = 0; x < freqs.size(); ++x) {
    double f = sys.observed_shift();
    for (std::size_t i = 0; i < num_vars; ++i) f += ((x >> i) & 1U) ? -half_j[i] : half_j[i];
    freqs[x] = f;
  }
  return freqs;
}

double min_separation(const SpinSystem& sys, std::size_t num_vars) {
  auto freqs = configuration_frequencies(sys, num_vars);
  std::sort(freqs.begin(), freqs.end());
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < freqs.size(); ++i) best = std::min(best, freqs[i] - freqs[i - 1]);
  return best;
}

bool check_resolvable(const SpinSystem& sys, std::size_t num_vars, double min_separation_hz) {
  if (!(min_separation_hz > 0.0)) throw InvalidArgument("minimum separation must be positive");
  if (num_vars > sys.capacity()) return false;
  return min_separation(sys, num_vars) >= min_separation_hz;
}

namespace {

// Lines in configuration order, coincident frequencies merged.
std::vector<SpectrumLine> assemble(const std::vector<double>& freqs, const std::vector<double>& amps,
                                   std::size_t num_vars) {
  std::vector<SpectrumLine> lines;
  for (std::size_t x = 0; x < freqs.size(); ++x) {
    const auto label = Assignment::from_index(x, num_vars).to_string();
    auto hit = std::find_if(lines.begin(), lines.end(), [&](const SpectrumLine& l) {
      return std::abs(l.frequency_hz - freqs[x]) <= kCoincidenceHz;
    });
    if (hit != lines.end()) {
      hit->amplitude += amps[x];
      hit->label += "/" + label;
    } else {
      lines.push_back({freqs[x], amps[x], label});
    }
  }
  return lines;
}

}  // namespace

std::vector<SpectrumLine> multiplet_lines(const PopulationState<double>& s, const QubitLayout& layout,
                                          const SpinSystem& sys) {
  if (s.width() != layout.width()) throw InvalidArgument("state width does not match layout");
  const std::size_t n = layout.num_vars();
  for (std::size_t i = 0; i < n && i < sys.capacity(); ++i) {
    if (sys.decoupled.count(sys.variable_spins[i])) {
      throw InvalidArgument("spin '" + sys.spins[sys.variable_spins[i]].name + "' carries x" +
                            std::to_string(i + 1) + " but is decoupled");
    }
  }
  for (std::size_t mu = 0; mu < layout.num_scratch() && mu < sys.scratch_spins.size(); ++mu) {
    if (!sys.decoupled.count(sys.scratch_spins[mu])) {
      throw InvalidArgument("scratch spin '" + sys.spins[sys.scratch_spins[mu]].name +
                            "' must be decoupled during acquisition");
    }
  }
  const auto freqs = configuration_frequencies(sys, n);

  std::vector<Wire> keep(n + 1);
  std::iota(keep.begin(), keep.end(), Wire{0});
  const auto reduced = marginalize(s, keep);
  std::vector<double> amps(freqs.size());
  for (std::size_t x = 0; x < amps.size(); ++x) amps[x] = reduced[x << 1] - reduced[(x << 1) | 1U];
  return assemble(freqs, amps, n);
}

std::vector<SpectrumLine> thermal_reference(const SpinSystem& sys, std::size_t num_vars) {
  const auto freqs = configuration_frequencies(sys, num_vars);
  const std::vector<double> amps(freqs.size(), 1.0 / static_cast<double>(freqs.size()));
  return assemble(freqs, amps, num_vars);
}

SolutionReport extract_solutions(const std::vector<SpectrumLine>& lines, const SpinSystem& sys,
                                 std::size_t num_vars, std::optional<double> tolerance_hz) {
  const auto freqs = configuration_frequencies(sys, num_vars);
  const double separation = min_separation(sys, num_vars);
  if (separation <= kCoincidenceHz) {
    throw DegenerateMultiplet("two spin configurations share one line frequency; the multiplet cannot be decoded");
  }
  const double tol = tolerance_hz.value_or(std::min(1.0, separation / 4.0));

  std::vector<int> sign(freqs.size(), 0);
  for (const auto& line : lines) {
    std::size_t matched = freqs.size();
    for (std::size_t x = 0; x < freqs.size(); ++x) {
      if (std::abs(line.frequency_hz - freqs[x]) > tol) continue;
      if (matched != freqs.size()) {
        throw DegenerateMultiplet("line at " + std::to_string(line.frequency_hz) +
                                  " Hz matches more than one configuration");
      }
      matched = x;
    }
    if (matched == freqs.size()) {
      throw UnresolvableSpectrum("line at " + std::to_string(line.frequency_hz) + " Hz matches no configuration");
    }
    if (sign[matched] != 0) {
      throw UnresolvableSpectrum("two lines decode to configuration " +
                                 Assignment::from_index(matched, num_vars).to_string());
    }
    if (line.amplitude == 0.0) {
      throw UnresolvableSpectrum("line at " + std::to_string(line.frequency_hz) + " Hz has zero amplitude");
    }
    sign[matched] = line.amplitude < 0.0 ? -1 : 1;
  }

  SolutionReport report;
  for (std::size_t x = 0; x < freqs.size(); ++x) {
    auto a = Assignment::from_index(x, num_vars);
    if (sign[x] == 0) throw UnresolvableSpectrum("no line for configuration " + a.to_string());
    (sign[x] < 0 ? report.true_space : report.false_space).insert(std::move(a));
  }
  return report;
}

std::string to_table(const std::vector<SpectrumLine>& lines) {
  std::string out = "# frequency_hz amplitude config space\n";
  char buf[128];
  for (const auto& l : lines) {
    const char* space = l.amplitude < 0.0 ? "TRUE" : (l.amplitude > 0.0 ? "FALSE" : "-");
    std::snprintf(buf, sizeof buf, "%.6f %+.9f ", l.frequency_hz, l.amplitude);
    out += buf + l.label + ' ' + space + '\n';
  }
  return out;
}

nlohmann::json to_json(const std::vector<SpectrumLine>& lines) {
  auto out = nlohmann::json::array();
  for (const auto& l : lines) {
    out.push_back({{"frequency_hz", l.frequency_hz}, {"amplitude", l.amplitude}, {"config", l.label}});
  }
  return out;
}

}  // namespace qbcsat
