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

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qbcsat/circuit.hpp"
#include "qbcsat/cnf.hpp"
#include "qbcsat/sim.hpp"
#include "qbcsat/spectrum.hpp"
#include "test_corpus.hpp"

namespace {

using namespace qbcsat;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string join(const AssignmentSet& set) {
  std::string s;
  for (const auto& a : set) s += (s.empty() ? "" : " ") + a.to_string();
  return s;
}

SpinSystem system_for(std::size_t n) { return n <= 3 ? alanine_4q() : synthetic_resolvable(n); }

std::vector<CnfFormula> sweep_corpus() {
  auto c = testing::random_corpus(2026, 200);
  const auto e = testing::exhaustive_small_formulas();
  c.insert(c.end(), e.begin(), e.end());
  return c;
}

Outcome three_sat_example() {
  const auto f = parse_dimacs("p cnf 3 3\n1 2 3 0\n1 2 -3 0\n-1 2 3 0\n");
  const auto t0 = Clock::now();
  const auto c = compile_formula(f);
  const auto got = true_space(run(c), c.layout).true_space;
  const double ms = ms_since(t0);
  const bool has_110 = got.count(Assignment::from_string("110")) == 1;
  const bool ok = got.size() == 5 && has_110 && got == brute_force_solutions(f) && ms < 10.0;
  return {ok, join(got) + ", " + std::to_string(ms) + " ms"};
}

Outcome equation_ten() {
  const auto f = parse_dimacs("p cnf 3 3\n-1 0\n2 0\n3 0\n");
  const auto c = compile_1sat(f);
  const auto s = run(c);
  std::vector<std::string> flagged;
  for (std::uint64_t b = 0; b < s.dimension(); ++b) {
    if ((b & 1U) && s[b] != 0.0) flagged.push_back(basis_label(b >> 1, f.num_vars));
  }
  const bool ok = flagged == std::vector<std::string>{"110"};
  std::string detail = "x0=1 components:";
  for (const auto& l : flagged) detail += " " + l;
  return {ok, detail};
}

Outcome logic_cases() {
  bool ok = true;
  std::ostringstream detail;
  for (std::uint32_t n = 1; n <= 2; ++n) {
    const CnfFormula contradiction{n, {Clause{{{1, false}}}, Clause{{{1, true}}}}};
    const CnfFormula tautology{n, {Clause{{{1, false}, {1, true}}}}};
    for (const auto* f : {&contradiction, &tautology}) {
      const bool taut = f == &tautology;
      const auto c = compile_formula(*f);
      const auto s = run(c);
      const auto solutions = true_space(s, c.layout).true_space.size();
      const auto lines = multiplet_lines(s, c.layout, alanine_4q());
      const bool signs = std::all_of(lines.begin(), lines.end(),
                                     [&](const SpectrumLine& l) { return taut ? l.amplitude < 0 : l.amplitude > 0; });
      const std::size_t want = taut ? (std::size_t{1} << n) : 0;
      ok = ok && signs && solutions == want;
      detail << "n=" << n << (taut ? " x1|~x1: " : " x1&~x1: ") << solutions << " solutions, "
             << (signs ? (taut ? "all negative" : "all positive") : "mixed signs") << "; ";
    }
  }
  return {ok, detail.str()};
}

Outcome oracle_sweep() {
  const auto corpus = sweep_corpus();
  const auto t0 = Clock::now();
  std::size_t direct_ok = 0, spectral_ok = 0;
  for (const auto& f : corpus) {
    const auto oracle = brute_force_solutions(f);
    const auto c = compile_formula(f);
    const auto s = run(c);
    direct_ok += true_space(s, c.layout).true_space == oracle;
    const auto sys = system_for(f.num_vars);
    spectral_ok += extract_solutions(multiplet_lines(s, c.layout, sys), sys, f.num_vars).true_space == oracle;
  }
  const double seconds = ms_since(t0) / 1000.0;
  const bool ok = direct_ok == corpus.size() && spectral_ok == corpus.size() && seconds < 30.0;
  std::ostringstream d;
  d << "direct " << direct_ok << '/' << corpus.size() << ", spectral " << spectral_ok << '/' << corpus.size() << ", "
    << seconds << " s";
  return {ok, d.str()};
}

Outcome cost_closed_forms() {
  bool ok = true;
  std::ostringstream d;
  for (std::size_t m = 1; m <= 6; ++m) {
    const auto f = generate_random_ksat(3, m, 3, 100 + m);
    const auto counts = count_gates(compile(f, Construction::General));
    const auto mm = static_cast<long>(m);
    const bool row = static_cast<long>(counts.elementary_cnot) == 3 * (3 * mm - 2) &&
                     static_cast<long>(counts.elementary_single) == 4 * (3 * mm - 1) &&
                     counts.not_count <= 3 * m;
    ok = ok && row;
    d << "m=" << m << " cnot " << counts.elementary_cnot << "/" << 3 * (3 * mm - 2) << " single "
      << counts.elementary_single << "/" << 4 * (3 * mm - 1) << " not " << counts.not_count << "<=" << 3 * m << "; ";
  }
  return {ok, d.str()};
}

bool same_positions(std::vector<SpectrumLine> lines, std::vector<double> expected) {
  if (lines.size() != expected.size()) return false;
  std::sort(lines.begin(), lines.end(),
            [](const SpectrumLine& a, const SpectrumLine& b) { return a.frequency_hz < b.frequency_hz; });
  std::sort(expected.begin(), expected.end());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (std::abs(lines[i].frequency_hz - expected[i]) > 1e-9) return false;
  }
  return true;
}

Outcome multiplet_geometry() {
  const std::vector<double> three{44.375, -44.375, 9.435, -9.435};
  std::vector<double> four;
  for (double a : {17.47, -17.47}) {
    for (double b : {26.905, -26.905}) {
      for (double c : {71.605, -71.605}) four.push_back(a + b + c);
    }
  }
  const bool ok3 = same_positions(thermal_reference(alanine_3q(), 2), three);
  const bool ok4 = same_positions(thermal_reference(alanine_4q(), 3), four);
  return {ok3 && ok4, std::string("alanine-3q ") + (ok3 ? "match" : "mismatch") + ", alanine-4q " +
                          (ok4 ? "match" : "mismatch")};
}

Outcome peephole_soundness() {
  std::mt19937_64 rng(7);
  std::size_t ok = 0;
  const std::size_t total = 1000;
  for (std::size_t i = 0; i < total; ++i) {
    const auto c = testing::random_circuit(rng);
    ok += as_permutation(c) == as_permutation(peephole_cancel(c));
  }
  return {ok == total, std::to_string(ok) + "/" + std::to_string(total) + " permutations preserved"};
}

Outcome uncompute_property() {
  const auto corpus = sweep_corpus();
  std::size_t ok = 0;
  double worst = 0.0;
  for (const auto& f : corpus) {
    const auto c = append_uncompute(compile_formula(f), f);
    const auto s = run(c);
    const auto scratch = c.layout.scratch_wires();
    double restored = 1.0;
    if (!scratch.empty()) restored = marginalize(s, scratch)[0];
    const double err = std::max(std::abs(restored - 1.0), std::abs(s.total() - 1.0));
    worst = std::max(worst, err);
    ok += err <= 1e-12;
  }
  std::ostringstream d;
  d << ok << '/' << corpus.size() << " restored, worst deviation " << worst;
  return {ok == corpus.size(), d.str()};
}

Outcome resolvability_gate() {
  auto degenerate = synthetic_resolvable(2);
  degenerate.couplings(0, 2) = degenerate.couplings(2, 0) = degenerate.couplings(0, 1);
  bool raised = false;
  try {
    extract_solutions(thermal_reference(degenerate, 2), degenerate, 2);
  } catch (const DegenerateMultiplet&) {
    raised = true;
  }
  bool presets = true;
  try {
    extract_solutions(thermal_reference(alanine_3q(), 2), alanine_3q(), 2);
    extract_solutions(thermal_reference(alanine_4q(), 3), alanine_4q(), 3);
  } catch (const Error&) {
    presets = false;
  }
  return {raised && presets, std::string("J01=J02 ") + (raised ? "raised" : "did not raise") + ", alanine presets " +
                                 (presets ? "decoded" : "failed")};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"three-clause 3-SAT example", three_sat_example},
      {"1-SAT regression (110)", equation_ten},
      {"contradiction / tautology cases", logic_cases},
      {"oracle equivalence sweep", oracle_sweep},
      {"cost-model closed forms", cost_closed_forms},
      {"multiplet geometry", multiplet_geometry},
      {"peephole soundness", peephole_soundness},
      {"uncompute restores scratch", uncompute_property},
      {"resolvability gate", resolvability_gate},
  };
  int failed = 0;
  int id = 0;
  for (const auto& [name, check] : criteria) {
    ++id;
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("[%s] %d %s: %s\n", o.pass ? "PASS" : "FAIL", id, name, o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
