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

#include "qbcsat/circuit.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <optional>

#include "qbcsat/error.hpp"

namespace qbcsat {

Gate Gate::x(Wire target) { return Gate{GateKind::Not, {}, target}; }

Gate Gate::mcx(std::vector<Wire> controls, Wire target) {
  std::sort(controls.begin(), controls.end());
  controls.erase(std::unique(controls.begin(), controls.end()), controls.end());
  if (controls.empty()) throw InvalidArgument("mcx needs at least one control");
  if (std::binary_search(controls.begin(), controls.end(), target)) {
    throw InvalidArgument("mcx target " + std::to_string(target) + " is also a control");
  }
  return Gate{GateKind::Mcx, std::move(controls), target};
}

bool Gate::touches(Wire w) const {
  return target == w || std::binary_search(controls.begin(), controls.end(), w);
}

Wire Gate::max_wire() const {
  return controls.empty() ? target : std::max(target, controls.back());
}

Wire QubitLayout::variable_wire(std::size_t var) const {
  if (var == 0 || var > num_vars_) {
    throw InvalidArgument("variable x" + std::to_string(var) + " outside layout with " +
                          std::to_string(num_vars_) + " variables");
  }
  return var;
}

Wire QubitLayout::scratch_wire(std::size_t mu) const {
  if (mu == 0 || mu > num_scratch_) {
    throw InvalidArgument("scratch index " + std::to_string(mu) + " outside 1.." +
                          std::to_string(num_scratch_));
  }
  return num_vars_ + mu;
}

std::vector<Wire> QubitLayout::variable_wires() const {
  std::vector<Wire> w(num_vars_);
  std::iota(w.begin(), w.end(), Wire{1});
  return w;
}

std::vector<Wire> QubitLayout::scratch_wires() const {
  std::vector<Wire> w(num_scratch_);
  std::iota(w.begin(), w.end(), num_vars_ + 1);
  return w;
}

WireRole QubitLayout::role(Wire w) const {
  if (w >= width()) throw InvalidArgument("wire " + std::to_string(w) + " outside layout");
  if (w == 0) return WireRole::Work;
  return w <= num_vars_ ? WireRole::Variable : WireRole::Scratch;
}

std::size_t QubitLayout::role_index(Wire w) const {
  switch (role(w)) {
    case WireRole::Work: return 0;
    case WireRole::Variable: return w;
    case WireRole::Scratch: return w - num_vars_;
  }
  return 0;
}

void Circuit::validate() const {
  for (const auto& g : gates) {
    if (g.max_wire() >= width()) {
      throw InvalidArgument("gate " + to_string(g) + " exceeds circuit width " +
                            std::to_string(width()));
    }
    if (g.kind == GateKind::Mcx &&
        (g.controls.empty() || std::binary_search(g.controls.begin(), g.controls.end(), g.target))) {
      throw InvalidArgument("malformed mcx " + to_string(g));
    }
  }
}

std::size_t GateCounts::mcx_count() const {
  std::size_t total = 0;
  for (const auto& [k, count] : mcx_by_arity) total += count;
  return total;
}

BasisPermutation::BasisPermutation(std::size_t width, std::vector<std::uint64_t> mapping)
    : width_(width), mapping_(std::move(mapping)) {
  if (width >= 64 || mapping_.size() != (std::uint64_t{1} << width)) {
    throw InvalidArgument("permutation table size does not match width " + std::to_string(width));
  }
}

BasisPermutation BasisPermutation::identity(std::size_t width) {
  std::vector<std::uint64_t> m(std::size_t{1} << width);
  std::iota(m.begin(), m.end(), std::uint64_t{0});
  return BasisPermutation(width, std::move(m));
}

bool BasisPermutation::is_bijection() const {
  std::vector<bool> seen(mapping_.size(), false);
  for (auto image : mapping_) {
    if (image >= mapping_.size() || seen[image]) return false;
    seen[image] = true;
  }
  return true;
}

bool BasisPermutation::is_identity() const {
  for (std::size_t b = 0; b < mapping_.size(); ++b) {
    if (mapping_[b] != b) return false;
  }
  return true;
}

BasisPermutation BasisPermutation::operator*(const BasisPermutation& rhs) const {
  if (rhs.width_ != width_) throw InvalidArgument("composing permutations of different widths");
  std::vector<std::uint64_t> m(mapping_.size());
  for (std::size_t b = 0; b < m.size(); ++b) m[b] = mapping_[rhs.mapping_[b]];
  return BasisPermutation(width_, std::move(m));
}

namespace {

struct ClauseWires {
  std::vector<Wire> all;       // every variable in the clause
  std::vector<Wire> positive;  // plain occurrences
  std::vector<Wire> negative;  // negated occurrences
};

ClauseWires clause_wires(const Clause& clause, const QubitLayout& layout) {
  ClauseWires w;
  for (const auto& lit : clause.literals) {
    const Wire wire = layout.variable_wire(lit.var);
    w.all.push_back(wire);
    (lit.negated ? w.negative : w.positive).push_back(wire);
  }
  for (auto* v : {&w.all, &w.positive, &w.negative}) {
    std::sort(v->begin(), v->end());
    v->erase(std::unique(v->begin(), v->end()), v->end());
  }
  return w;
}

void not_layer(std::vector<Gate>& out, const std::vector<Wire>& wires) {
  for (auto w : wires) out.push_back(Gate::x(w));
}

Clause normalized_nonempty(const Clause& clause) {
  auto c = clause.deduplicated();
  if (c.literals.empty()) throw CompileError("empty clause has no circuit form");
  return c;
}

}  // namespace

std::vector<Gate> compile_clause(const Clause& clause, const QubitLayout& layout,
                                 std::size_t scratch_index) {
  const auto c = normalized_nonempty(clause);
  const Wire s = layout.scratch_wire(scratch_index);
  const auto w = clause_wires(c, layout);
  std::vector<Gate> out;
  if (c.is_tautology()) {
    out.push_back(Gate::x(s));
    return out;
  }
  not_layer(out, w.positive);
  out.push_back(Gate::mcx(w.all, s));
  not_layer(out, w.positive);
  out.push_back(Gate::x(s));
  return out;
}

std::vector<Gate> compile_clause_expanded(const Clause& clause, const QubitLayout& layout,
                                          std::size_t scratch_index) {
  const auto c = normalized_nonempty(clause);
  const Wire s = layout.scratch_wire(scratch_index);
  const auto w = clause_wires(c, layout);
  std::vector<Gate> out;
  if (c.is_tautology()) {
    out.push_back(Gate::x(s));
    return out;
  }
  not_layer(out, w.negative);
  not_layer(out, w.all);
  out.push_back(Gate::mcx(w.all, s));
  not_layer(out, w.all);
  not_layer(out, w.negative);
  out.push_back(Gate::x(s));
  return out;
}

Circuit compile_formula(const CnfFormula& f, std::size_t width_limit) {
  f.validate();
  if (f.clauses.empty()) throw CompileError("formula has no clauses");
  Circuit c{QubitLayout(f.num_vars, f.num_clauses()), {}};
  if (c.width() > width_limit) {
    throw LimitExceeded("circuit width " + std::to_string(c.width()) + " exceeds limit " +
                        std::to_string(width_limit));
  }
  for (std::size_t mu = 1; mu <= f.num_clauses(); ++mu) {
    auto block = compile_clause(f.clauses[mu - 1], c.layout, mu);
    c.gates.insert(c.gates.end(), block.begin(), block.end());
  }
  c.gates.push_back(Gate::mcx(c.layout.scratch_wires(), QubitLayout::work_wire()));
  return c;
}

namespace {

// Unit literals with duplicates merged; nullopt when some clause is not a
// unit clause. Throws on x & ~x.
std::optional<std::vector<Literal>> unit_literals(const CnfFormula& f) {
  std::map<std::uint32_t, bool> seen;
  std::vector<Literal> out;
  for (const auto& clause : f.clauses) {
    const auto c = clause.deduplicated();
    if (c.literals.size() != 1) return std::nullopt;
    const auto lit = c.literals.front();
    auto [it, inserted] = seen.emplace(lit.var, lit.negated);
    if (!inserted) {
      if (it->second != lit.negated) {
        throw CompileError("contradictory unit clauses on x" + std::to_string(lit.var) +
                           "; use the general construction");
      }
      continue;
    }
    out.push_back(lit);
  }
  return out;
}

}  // namespace

bool is_1sat_compilable(const CnfFormula& f) {
  if (f.clauses.empty()) return false;
  try {
    return unit_literals(f).has_value();
  } catch (const CompileError&) {
    return false;
  }
}

bool is_single_clause_compilable(const CnfFormula& f) {
  if (f.clauses.size() != 1) return false;
  const auto c = f.clauses.front().deduplicated();
  return !c.literals.empty() && !c.is_tautology();
}

Circuit compile_1sat(const CnfFormula& f) {
  f.validate();
  if (f.clauses.empty()) throw CompileError("formula has no clauses");
  const auto units = unit_literals(f);
  if (!units) throw CompileError("not a 1-SAT formula: every clause must hold one literal");

  Circuit c{QubitLayout(f.num_vars, 0), {}};
  std::vector<Wire> negated;
  std::vector<Wire> controls;
  for (const auto& lit : *units) {
    controls.push_back(c.layout.variable_wire(lit.var));
    if (lit.negated) negated.push_back(lit.var);
  }
  std::sort(negated.begin(), negated.end());
  not_layer(c.gates, negated);
  c.gates.push_back(Gate::mcx(controls, QubitLayout::work_wire()));
  not_layer(c.gates, negated);
  return c;
}

Circuit compile_single_clause(const Clause& clause, std::size_t num_vars) {
  const auto c = normalized_nonempty(clause);
  if (c.is_tautology()) {
    throw CompileError("clause " + to_string(c) + " holds a variable and its negation");
  }
  Circuit out{QubitLayout(num_vars, 0), {}};
  const auto w = clause_wires(c, out.layout);
  not_layer(out.gates, w.positive);
  out.gates.push_back(Gate::mcx(w.all, QubitLayout::work_wire()));
  not_layer(out.gates, w.positive);
  out.gates.push_back(Gate::x(QubitLayout::work_wire()));
  return out;
}

Construction resolve_construction(const CnfFormula& f, Construction requested) {
  if (requested != Construction::Auto) return requested;
  if (is_1sat_compilable(f)) return Construction::OneSat;
  if (is_single_clause_compilable(f)) return Construction::SingleClause;
  return Construction::General;
}

Circuit compile(const CnfFormula& f, Construction construction, std::size_t width_limit) {
  Circuit c;
  switch (resolve_construction(f, construction)) {
    case Construction::OneSat: c = compile_1sat(f); break;
    case Construction::SingleClause:
      if (f.clauses.size() != 1) throw CompileError("single-clause construction needs exactly one clause");
      f.validate();
      c = compile_single_clause(f.clauses.front(), f.num_vars);
      break;
    default: return compile_formula(f, width_limit);
  }
  if (c.width() > width_limit) {
    throw LimitExceeded("circuit width " + std::to_string(c.width()) + " exceeds limit " +
                        std::to_string(width_limit));
  }
  return c;
}

Circuit peephole_cancel(const Circuit& c) {
  // Per wire, the stack of surviving gate positions that touch it. A NOT
  // cancels against the top of its wire's stack when that entry is a NOT.
  std::vector<std::vector<std::size_t>> touching(c.width());
  std::vector<bool> alive(c.gates.size(), true);

  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    const auto& g = c.gates[i];
    if (g.max_wire() >= c.width()) throw InvalidArgument("gate " + to_string(g) + " exceeds circuit width");
    if (g.kind == GateKind::Not) {
      auto& stack = touching[g.target];
      if (!stack.empty() && c.gates[stack.back()].kind == GateKind::Not) {
        alive[stack.back()] = false;
        alive[i] = false;
        stack.pop_back();
        continue;
      }
      stack.push_back(i);
    } else {
      for (auto w : g.controls) touching[w].push_back(i);
      touching[g.target].push_back(i);
    }
  }

  Circuit out{c.layout, {}};
  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    if (alive[i]) out.gates.push_back(c.gates[i]);
  }
  return out;
}

Circuit append_uncompute(const Circuit& c, const CnfFormula& f) {
  if (c.layout != QubitLayout(f.num_vars, f.num_clauses())) {
    throw InvalidArgument("circuit layout does not match the formula's general construction");
  }
  const auto reference = compile_formula(f, std::numeric_limits<std::size_t>::max());
  if (c.gates != reference.gates && c.gates != peephole_cancel(reference).gates) {
    throw InvalidArgument("circuit was not produced by compiling this formula");
  }
  Circuit out = c;
  for (std::size_t mu = f.num_clauses(); mu >= 1; --mu) {
    auto block = compile_clause(f.clauses[mu - 1], c.layout, mu);
    out.gates.insert(out.gates.end(), block.begin(), block.end());
  }
  return out;
}

GateCounts count_gates(const Circuit& c) {
  GateCounts counts;
  for (const auto& g : c.gates) {
    if (g.kind == GateKind::Not) {
      ++counts.not_count;
      continue;
    }
    const auto k = g.controls.size();
    ++counts.mcx_by_arity[k];
    if (k == 1) {
      counts.elementary_cnot += 1;
    } else {
      counts.elementary_cnot += 3 * (k - 1);
      counts.elementary_single += 4 * (k - 1);
    }
  }
  return counts;
}

GateCounts cost_model(const CnfFormula& f, Construction construction) {
  return count_gates(compile(f, construction, std::numeric_limits<std::size_t>::max()));
}

std::uint64_t apply_to_basis(const Gate& g, std::uint64_t index) {
  const std::uint64_t flip = std::uint64_t{1} << g.target;
  if (g.kind == GateKind::Not) return index ^ flip;
  std::uint64_t mask = 0;
  for (auto w : g.controls) mask |= std::uint64_t{1} << w;
  return (index & mask) == mask ? index ^ flip : index;
}

BasisPermutation as_permutation(const Circuit& c, std::size_t width_limit) {
  if (c.width() > width_limit) {
    throw LimitExceeded("circuit width " + std::to_string(c.width()) +
                        " exceeds permutation limit " + std::to_string(width_limit));
  }
  c.validate();
  std::vector<std::uint64_t> mapping(std::size_t{1} << c.width());
  for (std::uint64_t b = 0; b < mapping.size(); ++b) {
    std::uint64_t image = b;
    for (const auto& g : c.gates) image = apply_to_basis(g, image);
    mapping[b] = image;
  }
  return BasisPermutation(c.width(), std::move(mapping));
}

std::string to_string(const Gate& g) {
  if (g.kind == GateKind::Not) return "x " + std::to_string(g.target);
  std::string s = "mcx ";
  for (std::size_t i = 0; i < g.controls.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(g.controls[i]);
  }
  return s + ' ' + std::to_string(g.target);
}

std::string to_string(Construction c) {
  switch (c) {
    case Construction::Auto: return "auto";
    case Construction::General: return "general";
    case Construction::OneSat: return "1sat";
    case Construction::SingleClause: return "clause";
  }
  return "auto";
}

Construction construction_from_string(std::string_view name) {
  for (auto c : {Construction::Auto, Construction::General, Construction::OneSat,
                 Construction::SingleClause}) {
    if (to_string(c) == name) return c;
  }
  throw InvalidArgument("unknown construction '" + std::string(name) + "'");
}

}  // namespace qbcsat
