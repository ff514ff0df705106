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

#include <iostream>

#include <CLI11.hpp>

#include "qbcsat/commands.hpp"

int main(int argc, char** argv) {
  using namespace qbcsat;
  CLI::App app{"Compile CNF formulas into NOT/MCX circuits, simulate the mixed-state run and decode the I0 multiplet"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string grid;
  std::string construction = "auto";

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", cfg.input_path, "DIMACS CNF file ('-' for stdin)");
    sub->add_option("--formula", cfg.inline_formula, "inline DIMACS text, ';' separates lines");
    sub->add_option("--construction", construction, "auto | general | 1sat | clause");
    sub->add_option("--width-cap", cfg.width_cap, "largest register width to simulate");
    sub->add_flag("--json", cfg.json, "structured output");
  };
  auto add_spectral = [&](CLI::App* sub) {
    sub->add_option("--spin-system", cfg.spin_system, "alanine-3q | alanine-4q | synthetic-<n> | JSON file | auto");
    sub->add_option("--linewidth", cfg.linewidth_hz, "Lorentzian linewidth and minimum line separation (Hz)");
  };

  auto* solve = app.add_subcommand("solve", "list satisfying assignments");
  add_input(solve);
  add_spectral(solve);
  solve->add_flag("--via-spectrum", cfg.via_spectrum, "require the spectral decode path");
  solve->add_flag("--uncompute", cfg.uncompute, "append the scratchpad uncompute blocks");
  solve->add_flag("!--no-peephole", cfg.peephole, "keep cancellable NOT pairs");

  auto* compile = app.add_subcommand("compile", "emit the circuit and gate counts");
  add_input(compile);
  compile->add_flag("--uncompute", cfg.uncompute, "append the scratchpad uncompute blocks");
  compile->add_flag("!--no-peephole", cfg.peephole, "emit the circuit before NOT-pair cancellation");
  compile->add_option("-o,--output", cfg.output_path, "write the circuit to a file");

  auto* spectrum = app.add_subcommand("spectrum", "observed-spin line table and optional trace");
  add_input(spectrum);
  add_spectral(spectrum);
  spectrum->add_flag("--uncompute", cfg.uncompute, "append the scratchpad uncompute blocks");
  spectrum->add_flag("!--no-peephole", cfg.peephole, "keep cancellable NOT pairs");
  spectrum->add_flag("--thermal", cfg.thermal, "thermal-equilibrium reference multiplet");
  spectrum->add_option("--vars", cfg.thermal_vars, "variable count for --thermal without an input formula");
  spectrum->add_option("--trace", cfg.trace_path, "write the rendered trace as CSV");
  spectrum->add_option("--grid", grid, "trace grid 'min,max,points' in Hz");

  auto* verify = app.add_subcommand("verify", "cross-check oracle, simulator and spectral decode");
  add_input(verify);
  add_spectral(verify);
  verify->add_option("--corpus", cfg.corpus, "number of seeded random instances (n<=4, m<=5, k<=3)");
  verify->add_option("--seed", cfg.seed, "corpus seed");
  verify->add_flag("--examples", cfg.worked_examples, "include the bundled worked examples");
  verify->add_flag("--inject-fault", cfg.inject_fault, "invert the work qubit at the end of every circuit");
  verify->add_flag("!--no-peephole", cfg.peephole, "check circuits before NOT-pair cancellation");

  auto* random = app.add_subcommand("random", "emit a random k-SAT instance as DIMACS");
  random->add_option("--vars,-n", cfg.random_vars, "variables")->required();
  random->add_option("--clauses,-m", cfg.random_clauses, "clauses")->required();
  random->add_option("-k", cfg.random_k, "literals per clause")->required();
  random->add_option("--seed", cfg.seed, "generator seed");

  CLI11_PARSE(app, argc, argv);

  try {
    cfg.construction = construction_from_string(construction);
    if (!grid.empty()) cfg.grid = parse_grid(grid);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (*solve) return cmd_solve(cfg, std::cout, std::cerr);
  if (*compile) return cmd_compile(cfg, std::cout, std::cerr);
  if (*spectrum) return cmd_spectrum(cfg, std::cout, std::cerr);
  if (*verify) return cmd_verify(cfg, std::cout, std::cerr);
  return cmd_random(cfg, std::cout, std::cerr);
}
