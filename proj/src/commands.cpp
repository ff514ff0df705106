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

#include "qbcsat/commands.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "qbcsat/error.hpp"

namespace qbcsat {

RenderGrid parse_grid(std::string_view text) {
  std::string s(text);
  std::replace(s.begin(), s.end(), ',', ' ');
  std::istringstream in(s);
  RenderGrid g;
  std::string extra;
  if (!(in >> g.f_min >> g.f_max >> g.points) || (in >> extra)) {
    throw InvalidArgument("grid must be 'min,max,points', got '" + std::string(text) + "'");
  }
  if (!(g.f_min < g.f_max) || g.points < 2) throw InvalidArgument("grid needs min < max and >= 2 points");
  return g;
}

CnfFormula load_formula(const RunConfig& cfg) {
  if (!cfg.inline_formula.empty()) {
    std::string text = cfg.inline_formula;
    std::replace(text.begin(), text.end(), ';', '\n');
    return parse_dimacs(text);
  }
  if (cfg.input_path.empty()) throw InvalidArgument("no input formula given");
  if (cfg.input_path == "-") return parse_dimacs(std::cin);
  std::ifstream in(cfg.input_path);
  if (!in) throw InvalidArgument("cannot open '" + cfg.input_path + "'");
  return parse_dimacs(in);
}

SpinSystem resolve_spin_system(const std::string& selection, std::size_t num_vars, std::string* resolved_name) {
  std::string name = selection;
  if (name.empty() || name == "auto") {
    name = num_vars <= alanine_4q().capacity() ? "alanine-4q" : "synthetic-" + std::to_string(num_vars);
  }
  if (resolved_name) *resolved_name = name;
  if (std::filesystem::exists(name)) return load_spin_system(name);
  return spin_system_preset(name);
}

namespace {

using Clock = std::chrono::steady_clock;

Circuit build_circuit(const CnfFormula& f, const RunConfig& cfg, Construction* used = nullptr) {
  const auto construction = cfg.uncompute ? Construction::General : resolve_construction(f, cfg.construction);
  if (used) *used = construction;
  Circuit c = compile(f, construction, cfg.width_cap);
  if (cfg.uncompute) c = append_uncompute(c, f);
  if (cfg.peephole) c = peephole_cancel(c);
  return c;
}

std::string join_bits(const AssignmentSet& set) {
  std::string s;
  for (const auto& a : set) {
    if (!s.empty()) s += ' ';
    s += a.to_string();
  }
  return s;
}

int report_error(std::ostream& err, const std::exception& e) {
  err << "error: " << e.what() << '\n';
  return kExitUsage;
}

}  // namespace

RunSummary solve(const CnfFormula& f, const RunConfig& cfg) {
  const auto start = Clock::now();
  RunSummary summary;
  summary.num_vars = f.num_vars;
  summary.num_clauses = f.num_clauses();
  summary.max_clause_width = f.max_clause_width();

  const Circuit c = build_circuit(f, cfg, &summary.construction);
  summary.width = c.width();
  summary.counts = count_gates(c);
  const auto state = run(c, cfg.width_cap);
  summary.solutions = true_space(state, c.layout);

  const auto sys = resolve_spin_system(cfg.spin_system, f.num_vars, &summary.spin_system);
  summary.resolvable = check_resolvable(sys, f.num_vars, cfg.linewidth_hz);
  if (summary.resolvable) {
    summary.spectral = extract_solutions(multiplet_lines(state, c.layout, sys), sys, f.num_vars);
  } else if (cfg.via_spectrum) {
    throw UnresolvableSpectrum("spin system '" + summary.spin_system + "' does not resolve " +
                               std::to_string(f.num_vars) + " variables at " +
                               std::to_string(cfg.linewidth_hz) + " Hz");
  }
  summary.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return summary;
}

std::string describe_solutions(const SolutionReport& report) {
  const auto n = report.count();
  if (n == 0) return "0 solutions (unsatisfiable)";
  return std::to_string(n) + (n == 1 ? " solution: " : " solutions: ") + join_bits(report.true_space);
}

std::optional<std::string> cross_check(const CnfFormula& f, const RunConfig& cfg) {
  const auto oracle = brute_force_solutions(f);
  const auto where = "formula " + to_string(f) + ": ";

  auto compare = [&](const SolutionReport& got, const std::string& path) -> std::optional<std::string> {
    if (got.true_space == oracle) return std::nullopt;
    AssignmentSet diff;
    std::set_symmetric_difference(oracle.begin(), oracle.end(), got.true_space.begin(), got.true_space.end(),
                                  std::inserter(diff, diff.end()));
    const auto& a = *diff.begin();
    return where + "assignment " + a.to_string() + " oracle=" + (oracle.count(a) ? "1" : "0") + " " + path +
           "=" + (got.true_space.count(a) ? "1" : "0");
  };

  Circuit c = compile(f, cfg.construction, cfg.width_cap);
  if (cfg.peephole) c = peephole_cancel(c);
  if (cfg.inject_fault) c.gates.push_back(Gate::x(QubitLayout::work_wire()));
  const auto state = run(c, cfg.width_cap);
  SolutionReport direct;
  try {
    direct = true_space(state, c.layout);
  } catch (const StateFormError& e) {
    return where + "simulator output not in pipeline form: " + e.what();
  }
  if (auto m = compare(direct, "simulator")) return m;

  const auto sys = resolve_spin_system(cfg.spin_system, f.num_vars);
  if (check_resolvable(sys, f.num_vars, cfg.linewidth_hz)) {
    if (auto m = compare(extract_solutions(multiplet_lines(state, c.layout, sys), sys, f.num_vars), "spectrum")) {
      return m;
    }
  }

  const bool general_ok =
      !f.clauses.empty() && f.num_vars + 1 + f.num_clauses() <= cfg.width_cap &&
      std::none_of(f.clauses.begin(), f.clauses.end(), [](const Clause& cl) { return cl.literals.empty(); });
  if (general_ok) {
    auto cu = append_uncompute(compile_formula(f, cfg.width_cap), f);
    if (cfg.inject_fault) cu.gates.push_back(Gate::x(QubitLayout::work_wire()));
    const auto out = run(cu, cfg.width_cap);
    if (cu.layout.num_scratch() > 0) {
      std::vector<Wire> scratch = cu.layout.scratch_wires();
      const auto marginal = marginalize(out, scratch);
      if (std::abs(marginal[0] - 1.0) > kPopulationTolerance) {
        return where + "scratch register not restored by uncompute (P(0..0) = " + std::to_string(marginal[0]) + ")";
      }
    }
    if (auto m = compare(true_space(out, cu.layout), "uncompute")) return m;
  }
  return std::nullopt;
}

std::vector<CnfFormula> worked_examples() {
  const char* texts[] = {
      // Three-variable 3-SAT with five solutions.
      "p cnf 3 3\n1 2 3 0\n1 2 -3 0\n-1 2 3 0\n",
      // 1-SAT ~x1 & x2 & x3.
      "p cnf 3 3\n-1 0\n2 0\n3 0\n",
      // x1 & ~x1, x1 | ~x1, x1 & x1, ~x1 & ~x1 for one and two variables.
      "p cnf 1 2\n1 0\n-1 0\n", "p cnf 2 2\n1 0\n-1 0\n",
      "p cnf 1 1\n1 -1 0\n", "p cnf 2 1\n1 -1 0\n",
      "p cnf 1 2\n1 0\n1 0\n", "p cnf 2 2\n1 0\n1 0\n",
      "p cnf 1 2\n-1 0\n-1 0\n", "p cnf 2 2\n-1 0\n-1 0\n",
      // Two-variable 1-SAT and single 2-clauses.
      "p cnf 2 1\n1 0\n", "p cnf 2 1\n-1 0\n", "p cnf 2 1\n2 0\n", "p cnf 2 1\n-2 0\n",
      "p cnf 2 2\n1 0\n2 0\n", "p cnf 2 2\n-1 0\n2 0\n", "p cnf 2 2\n1 0\n-2 0\n", "p cnf 2 2\n-1 0\n-2 0\n",
      "p cnf 2 1\n1 2 0\n", "p cnf 2 1\n-1 2 0\n", "p cnf 2 1\n1 -2 0\n", "p cnf 2 1\n-1 -2 0\n",
      // Three-variable 1-SAT.
      "p cnf 3 3\n1 0\n2 0\n3 0\n", "p cnf 3 3\n1 0\n2 0\n-3 0\n", "p cnf 3 3\n-1 0\n-2 0\n3 0\n",
      "p cnf 3 3\n-1 0\n-2 0\n-3 0\n", "p cnf 3 2\n1 0\n2 0\n", "p cnf 3 2\n-1 0\n2 0\n",
      "p cnf 3 2\n1 0\n-2 0\n", "p cnf 3 2\n-1 0\n-2 0\n", "p cnf 3 1\n1 0\n", "p cnf 3 1\n2 0\n",
      "p cnf 3 1\n3 0\n", "p cnf 3 1\n-1 0\n",
      // Every single 3-clause and the single 2-clauses over three variables.
      "p cnf 3 1\n1 2 3 0\n", "p cnf 3 1\n-1 2 3 0\n", "p cnf 3 1\n1 -2 3 0\n", "p cnf 3 1\n-1 -2 3 0\n",
      "p cnf 3 1\n1 2 -3 0\n", "p cnf 3 1\n-1 2 -3 0\n", "p cnf 3 1\n1 -2 -3 0\n", "p cnf 3 1\n-1 -2 -3 0\n",
      "p cnf 3 1\n1 2 0\n", "p cnf 3 1\n-1 2 0\n", "p cnf 3 1\n1 -2 0\n", "p cnf 3 1\n-1 -2 0\n",
  };
  std::vector<CnfFormula> out;
  for (const char* t : texts) out.push_back(parse_dimacs(t));
  return out;
}

int cmd_solve(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    const auto f = load_formula(cfg);
    const auto s = solve(f, cfg);
    if (cfg.json) {
      nlohmann::json j{{"formula", {{"num_vars", s.num_vars}, {"num_clauses", s.num_clauses},
                                    {"max_clause_width", s.max_clause_width}}},
                       {"construction", to_string(s.construction)},
                       {"width", s.width},
                       {"gate_counts", to_json(s.counts)},
                       {"result", to_json(s.solutions)},
                       {"spectral", {{"spin_system", s.spin_system}, {"resolvable", s.resolvable},
                                     {"decoded", s.spectral.has_value()}, {"agrees", s.paths_agree()}}}};
      out << j.dump(2) << '\n';
    } else {
      out << "formula: n=" << s.num_vars << " m=" << s.num_clauses << " k_max=" << s.max_clause_width << '\n';
      out << "circuit: " << to_string(s.construction) << " construction, width " << s.width << ", "
          << s.counts.not_count << " NOT, " << s.counts.mcx_count() << " MCX\n";
      out << describe_solutions(s.solutions) << '\n';
      if (s.spectral) {
        out << "spectral decode (" << s.spin_system << "): " << (s.paths_agree() ? "agrees" : "DISAGREES") << '\n';
      } else {
        out << "spectral decode (" << s.spin_system << "): skipped, multiplet not resolved\n";
      }
      out << "time: " << s.elapsed_ms << " ms\n";
    }
    if (!s.paths_agree()) {
      err << "error: spectral decode disagrees with the simulator\n";
      return kExitCheckFailed;
    }
    return kExitOk;
  } catch (const std::exception& e) {
    return report_error(err, e);
  }
}

int cmd_compile(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    const auto f = load_formula(cfg);
    RunConfig raw = cfg;
    raw.peephole = false;
    Construction used{};
    const Circuit compiled = build_circuit(f, raw, &used);
    const Circuit reduced = peephole_cancel(compiled);
    const Circuit& emitted = cfg.peephole ? reduced : compiled;
    const auto before = count_gates(compiled);
    const auto after = count_gates(reduced);

    if (!cfg.output_path.empty()) {
      std::ofstream file(cfg.output_path);
      if (!file) throw InvalidArgument("cannot write '" + cfg.output_path + "'");
      file << (cfg.json ? to_json(emitted).dump(2) + "\n" : to_text(emitted));
    }
    if (cfg.json) {
      nlohmann::json j{{"construction", to_string(used)},
                       {"circuit", to_json(emitted)},
                       {"counts", {{"compiled", to_json(before)}, {"peephole", to_json(after)}}}};
      out << j.dump(2) << '\n';
      return kExitOk;
    }
    if (cfg.output_path.empty()) out << to_text(emitted);
    auto commented = [&](const std::string& title, const GateCounts& counts) {
      out << "# " << title << '\n';
      std::istringstream lines(to_report(counts));
      for (std::string line; std::getline(lines, line);) out << "#   " << line << '\n';
    };
    out << "# construction: " << to_string(used) << '\n';
    commented("gate counts, compiled", before);
    commented("gate counts, after NOT-pair cancellation", after);
    out << "# elementary C-NOT: " << before.elementary_cnot << ", single-qubit: " << before.elementary_single
        << '\n';
    return kExitOk;
  } catch (const std::exception& e) {
    return report_error(err, e);
  }
}

int cmd_spectrum(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    std::vector<SpectrumLine> lines;
    std::size_t n = 0;
    std::optional<CnfFormula> f;
    if (cfg.thermal && cfg.thermal_vars) {
      n = *cfg.thermal_vars;
    } else {
      f = load_formula(cfg);
      n = f->num_vars;
    }
    std::string name;
    const auto sys = resolve_spin_system(cfg.spin_system, n, &name);
    if (n > sys.capacity()) {
      throw InvalidArgument(std::to_string(n) + " variables exceed spin system '" + name + "' (" +
                            std::to_string(sys.capacity()) + " variable spins)");
    }
    if (!check_resolvable(sys, n, cfg.linewidth_hz)) {
      throw UnresolvableSpectrum("spin system '" + name + "' does not resolve the " + std::to_string(n) +
                                 "-variable multiplet at " + std::to_string(cfg.linewidth_hz) + " Hz");
    }
    if (cfg.thermal) {
      lines = thermal_reference(sys, n);
    } else {
      const auto c = build_circuit(*f, cfg);
      lines = multiplet_lines(run(c, cfg.width_cap), c.layout, sys);
    }

    if (!cfg.trace_path.empty()) {
      RenderGrid grid;
      if (cfg.grid) {
        grid = *cfg.grid;
      } else {
        double span = 0.0;
        for (const auto& l : lines) span = std::max(span, std::abs(l.frequency_hz - sys.observed_shift()));
        span += 10.0 * cfg.linewidth_hz;
        grid = {sys.observed_shift() - span, sys.observed_shift() + span, 4096};
      }
      std::ofstream file(cfg.trace_path);
      if (!file) throw InvalidArgument("cannot write '" + cfg.trace_path + "'");
      file << to_csv(render(lines, grid.f_min, grid.f_max, grid.points, cfg.linewidth_hz));
    }

    if (cfg.json) {
      nlohmann::json j{{"spin_system", name}, {"num_vars", n}, {"thermal", cfg.thermal}, {"lines", to_json(lines)}};
      if (!cfg.thermal) j["result"] = to_json(extract_solutions(lines, sys, n));
      out << j.dump(2) << '\n';
    } else {
      out << "# spin system: " << name << (cfg.thermal ? " (thermal reference)" : "") << '\n';
      out << to_table(lines);
      if (!cfg.thermal) out << "# " << describe_solutions(extract_solutions(lines, sys, n)) << '\n';
    }
    return kExitOk;
  } catch (const std::exception& e) {
    return report_error(err, e);
  }
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    std::vector<CnfFormula> corpus;
    if (cfg.worked_examples) corpus = worked_examples();
    if (cfg.corpus > 0) {
      std::mt19937_64 rng(cfg.seed);
      for (std::size_t i = 0; i < cfg.corpus; ++i) {
        const auto n = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
        const auto k = std::uniform_int_distribution<std::size_t>(1, std::min<std::size_t>(3, n))(rng);
        const auto m = std::uniform_int_distribution<std::size_t>(1, 5)(rng);
        corpus.push_back(generate_random_ksat(n, m, k, rng()));
      }
    }
    if (corpus.empty()) corpus.push_back(load_formula(cfg));

    std::size_t passed = 0;
    std::optional<std::string> first_failure;
    for (const auto& f : corpus) {
      auto failure = cross_check(f, cfg);
      if (!failure) {
        ++passed;
      } else if (!first_failure) {
        first_failure = std::move(failure);
      }
    }
    if (cfg.json) {
      nlohmann::json j{{"checked", corpus.size()}, {"passed", passed}, {"ok", passed == corpus.size()}};
      if (first_failure) j["counterexample"] = *first_failure;
      out << j.dump(2) << '\n';
    } else {
      out << passed << '/' << corpus.size() << " exact matches\n";
      if (first_failure) out << "counterexample: " << *first_failure << '\n';
    }
    return passed == corpus.size() ? kExitOk : kExitCheckFailed;
  } catch (const std::exception& e) {
    return report_error(err, e);
  }
}

int cmd_random(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    const auto f = generate_random_ksat(cfg.random_vars, cfg.random_clauses, cfg.random_k, cfg.seed);
    out << "c random " << cfg.random_k << "-SAT n=" << cfg.random_vars << " m=" << cfg.random_clauses
        << " seed=" << cfg.seed << '\n'
        << to_dimacs(f);
    return kExitOk;
  } catch (const std::exception& e) {
    return report_error(err, e);
  }
}

}  // namespace qbcsat
