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

#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>
#include <nlohmann/json_fwd.hpp>

#include "qbcsat/circuit.hpp"
#include "qbcsat/error.hpp"
#include "qbcsat/sim.hpp"

namespace qbcsat {

struct Spin {
  std::string name;
  double shift_hz = 0.0;
};

/// Spins of a sample, their scalar couplings, and how they map onto the
/// register: `observed` is the work qubit I0, `variable_spins[i]` carries
/// x_{i+1}, `scratch_spins[mu]` carries s_{mu+1}. Scratch wires with no spin
/// entry are treated as decoupled ancillas. Only the first n variable spins
/// take part in an n-variable run; the rest are ignored.
struct SpinSystem {
  std::vector<Spin> spins;
  Eigen::MatrixXd couplings;  ///< symmetric, Hz, zero diagonal
  std::size_t observed = 0;
  std::set<std::size_t> decoupled;
  std::vector<std::size_t> variable_spins;
  std::vector<std::size_t> scratch_spins;

  /// Number of variables this system can represent.
  std::size_t capacity() const { return variable_spins.size(); }
  double observed_shift() const { return spins.at(observed).shift_hz; }
  /// J between the observed spin and the spin carrying x_var (1-based).
  double coupling_to_observed(std::size_t var) const;
  std::size_t index_of(std::string_view name) const;
  /// Throws InvalidArgument on asymmetric couplings, bad indices, a decoupled
  /// observed spin or a spin used twice.
  void validate() const;
};

/// Alanine, C-alpha observed, C' = x1, C-beta = x2, protons decoupled.
SpinSystem alanine_3q();
/// Alanine, C-alpha observed, C' = x1, C-beta = x2, H = x3.
SpinSystem alanine_4q();
/// n variable spins with J_0i = spacing * 2^(i-1): every configuration
/// frequency is distinct and adjacent lines sit `spacing` apart.
SpinSystem synthetic_resolvable(std::size_t num_vars, double spacing_hz = 10.0);
/// "alanine-3q", "alanine-4q" or "synthetic-<n>".
SpinSystem spin_system_preset(std::string_view name);
std::vector<std::string> spin_system_preset_names();

SpinSystem spin_system_from_json(const nlohmann::json& j);
nlohmann::json to_json(const SpinSystem& sys);
SpinSystem load_spin_system(const std::string& path);

/// One resonance of the observed spin. Positive amplitude means the
/// contributing populations have I0 = |0>, negative means I0 = |1>.
struct SpectrumLine {
  double frequency_hz = 0.0;
  double amplitude = 0.0;
  std::string label;  ///< configuration(s) x_n..x_1 behind the line, '/'-joined when merged
};

template <typename Scalar = double>
struct Trace {
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> frequency_hz;
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> intensity;
};

/// Lines closer than this are the same line.
inline constexpr double kCoincidenceHz = 1e-9;

/// Frequency of the observed-spin line for each configuration index x
/// (bit i-1 is x_i): shift + sum_i sigma_i J_0i / 2, sigma = +1 for |0>.
std::vector<double> configuration_frequencies(const SpinSystem& sys, std::size_t num_vars);
/// Smallest gap between two configuration frequencies; infinity for n = 0.
double min_separation(const SpinSystem& sys, std::size_t num_vars);

/// Observed-spin multiplet of a pipeline state. Scratch wires are traced out;
/// amplitude = P(config, I0=0) - P(config, I0=1).
std::vector<SpectrumLine> multiplet_lines(const PopulationState<double>& s, const QubitLayout& layout,
                                          const SpinSystem& sys);
std::vector<SpectrumLine> thermal_reference(const SpinSystem& sys, std::size_t num_vars);

/// Sum of absorptive Lorentzians, unit height at each line centre.
template <typename Scalar = double>
Trace<Scalar> render(const std::vector<SpectrumLine>& lines, Scalar f_min, Scalar f_max,
                     std::size_t points, Scalar linewidth) {
  if (!(f_min < f_max) || points < 2) throw InvalidArgument("render grid needs f_min < f_max and >= 2 points");
  if (!(linewidth > Scalar(0))) throw InvalidArgument("linewidth must be positive");
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  Trace<Scalar> t;
  const auto count = static_cast<Eigen::Index>(points);
  t.frequency_hz = Vector::LinSpaced(count, f_min, f_max);
  t.intensity = Vector::Zero(count);
  const Scalar lw2 = linewidth * linewidth;
  for (const auto& line : lines) {
    const auto offset = t.frequency_hz.array() - static_cast<Scalar>(line.frequency_hz);
    t.intensity.array() += static_cast<Scalar>(line.amplitude) * lw2 / (lw2 + offset.square());
  }
  return t;
}

bool check_resolvable(const SpinSystem& sys, std::size_t num_vars, double min_separation_hz);

/// Matches each line to the configuration at its frequency and sorts the
/// configurations by amplitude sign. Default tolerance is
/// min(1 Hz, min_separation / 4).
SolutionReport extract_solutions(const std::vector<SpectrumLine>& lines, const SpinSystem& sys,
                                 std::size_t num_vars, std::optional<double> tolerance_hz = std::nullopt);

std::string to_table(const std::vector<SpectrumLine>& lines);
nlohmann::json to_json(const std::vector<SpectrumLine>& lines);

template <typename Scalar>
std::string to_csv(const Trace<Scalar>& t) {
  std::ostringstream out;
  out.precision(12);
  out << "frequency_hz,intensity\n";
  for (Eigen::Index i = 0; i < t.frequency_hz.size(); ++i) {
    out << t.frequency_hz[i] << ',' << t.intensity[i] << '\n';
  }
  return out.str();
}

}  // namespace qbcsat
