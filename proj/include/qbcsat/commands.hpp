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
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qbcsat/circuit.hpp"
#include "qbcsat/cnf.hpp"
#include "qbcsat/sim.hpp"
#include "qbcsat/spectrum.hpp"

namespace qbcsat {

struct RenderGrid {
  double f_min = 0.0;
  double f_max = 0.0;
  std::size_t points = 0;
};

/// Parses "min,max,points".
RenderGrid parse_grid(std::string_view text);

struct RunConfig {
  std::string input_path;      ///< DIMACS file, "-" for stdin
  std::string inline_formula;  ///< DIMACS text, ';' accepted as line break
  std::string spin_system = "auto";
  double linewidth_hz = 1.0;
  std::optional<RenderGrid> grid;
  bool json = false;
  std::size_t width_cap = kDefaultWidthLimit;
  std::uint64_t seed = 1;
  Construction construction = Construction::Auto;
  bool via_spectrum = false;
  bool uncompute = false;
  bool peephole = true;
  bool thermal = false;
  std::optional<std::size_t> thermal_vars;
  std::string trace_path;
  std::string output_path;
  std::size_t corpus = 0;
  bool inject_fault = false;
  bool worked_examples = false;
  std::size_t random_vars = 3;
  std::size_t random_clauses = 3;
  std::size_t random_k = 3;
};

struct RunSummary {
  std::size_t num_vars = 0;
  std::size_t num_clauses = 0;
  std::size_t max_clause_width = 0;
  Construction construction = Construction::General;
  std::size_t width = 0;
  GateCounts counts;
  SolutionReport solutions;
  std::string spin_system;
  bool resolvable = false;
  std::optional<SolutionReport> spectral;
  double elapsed_ms = 0.0;

  bool paths_agree() const { return !spectral || *spectral == solutions; }
};

/// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

CnfFormula load_formula(const RunConfig& cfg);
/// "auto" picks alanine-4q for up to three variables and synthetic-<n> above.
SpinSystem resolve_spin_system(const std::string& selection, std::size_t num_vars, std::string* resolved_name = nullptr);

/// Compile, simulate and (when the spin system resolves the multiplet) decode
/// the spectrum. Throws UnresolvableSpectrum if `via_spectrum` is set and the
/// system cannot resolve the lines.
RunSummary solve(const CnfFormula& f, const RunConfig& cfg);

/// "5 solutions: 010 011 ...", "1 solution: 110", "0 solutions (unsatisfiable)".
std::string describe_solutions(const SolutionReport& report);

/// A single oracle/simulator/spectrum cross-check. Empty when everything agrees.
std::optional<std::string> cross_check(const CnfFormula& f, const RunConfig& cfg);
std::vector<CnfFormula> worked_examples();

int cmd_solve(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_compile(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_spectrum(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_random(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace qbcsat
