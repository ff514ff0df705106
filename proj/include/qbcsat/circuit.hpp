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
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "qbcsat/cnf.hpp"

namespace qbcsat {

using Wire = std::size_t;

/// Register width cap for compiled circuits and simulated states.
inline constexpr std::size_t kDefaultWidthLimit = 24;
/// Register width cap for explicit basis permutations.
inline constexpr std::size_t kDefaultPermutationLimit = 20;

enum class GateKind { Not, Mcx };

/// NOT on `target`, or a multi-controlled NOT that flips `target` iff every
/// control wire is 1. Controls are kept sorted and unique.
struct Gate {
  GateKind kind = GateKind::Not;
  std::vector<Wire> controls;
  Wire target = 0;

  static Gate x(Wire target);
  static Gate mcx(std::vector<Wire> controls, Wire target);

  bool touches(Wire w) const;
  Wire max_wire() const;

  friend bool operator==(const Gate&, const Gate&) = default;
};

enum class WireRole { Work, Variable, Scratch };

/// Fixed wire convention: wire 0 is the work qubit I0, wires 1..n hold
/// x_1..x_n, wires n+1..n+m hold the clause scratchpads s_1..s_m.
class QubitLayout {
 public:
  QubitLayout() = default;
  QubitLayout(std::size_t num_vars, std::size_t num_scratch)
      : num_vars_(num_vars), num_scratch_(num_scratch) {}

  std::size_t num_vars() const { return num_vars_; }
  std::size_t num_scratch() const { return num_scratch_; }
  std::size_t width() const { return num_vars_ + 1 + num_scratch_; }

  static constexpr Wire work_wire() { return 0; }
  /// var is 1-based.
  Wire variable_wire(std::size_t var) const;
  /// mu is 1-based.
  Wire scratch_wire(std::size_t mu) const;
  std::vector<Wire> variable_wires() const;
  std::vector<Wire> scratch_wires() const;

  WireRole role(Wire w) const;
  /// 1-based variable or scratch index of `w`; 0 for the work wire.
  std::size_t role_index(Wire w) const;

  friend bool operator==(const QubitLayout&, const QubitLayout&) = default;

 private:
  std::size_t num_vars_ = 0;
  std::size_t num_scratch_ = 0;
};

struct Circuit {
  QubitLayout layout;
  std::vector<Gate> gates;

  std::size_t width() const { return layout.width(); }
  /// Throws InvalidArgument on a gate that leaves the register or an Mcx
  /// with an empty control set or a control equal to its target.
  void validate() const;

  friend bool operator==(const Circuit&, const Circuit&) = default;
};

/// Gate tallies plus the projected elementary-gate cost of every Mcx.
struct GateCounts {
  std::map<std::size_t, std::size_t> mcx_by_arity;
  std::size_t not_count = 0;
  std::size_t elementary_cnot = 0;
  std::size_t elementary_single = 0;

  std::size_t mcx_count() const;
  friend bool operator==(const GateCounts&, const GateCounts&) = default;
};

/// Action of a circuit on computational basis indices. Bit w of an index is
/// the state of wire w.
class BasisPermutation {
 public:
  BasisPermutation() = default;
  BasisPermutation(std::size_t width, std::vector<std::uint64_t> mapping);
  static BasisPermutation identity(std::size_t width);

  std::size_t width() const { return width_; }
  const std::vector<std::uint64_t>& mapping() const { return mapping_; }
  std::uint64_t operator()(std::uint64_t index) const { return mapping_[index]; }

  bool is_bijection() const;
  bool is_identity() const;
  /// (this * rhs)(b) = this(rhs(b)): rhs acts first.
  BasisPermutation operator*(const BasisPermutation& rhs) const;

  friend bool operator==(const BasisPermutation&, const BasisPermutation&) = default;

 private:
  std::size_t width_ = 0;
  std::vector<std::uint64_t> mapping_;
};

/// Which circuit construction to use for a formula.
enum class Construction {
  Auto,          ///< OneSat or SingleClause when applicable, otherwise General
  General,       ///< one scratch qubit per clause, then an AND over scratches
  OneSat,        ///< unit clauses only, single Mcx onto I0
  SingleClause,  ///< one clause computed straight into I0
};

/// Clause block U_C: NOT on every positively occurring variable, Mcx from
/// all clause variables onto s_mu, the same NOT layer, then NOT on s_mu.
/// Maps |x>|s_mu=0> to |x>|s_mu=C(x)>. A tautological clause is a lone NOT
/// on s_mu.
std::vector<Gate> compile_clause(const Clause& clause, const QubitLayout& layout,
                                 std::size_t scratch_index);

/// The same block before the two NOT layers are merged: negated-variable NOTs
/// and all-variable NOTs applied separately on each side of the Mcx.
/// `peephole_cancel` reduces it to `compile_clause`'s form.
std::vector<Gate> compile_clause_expanded(const Clause& clause, const QubitLayout& layout,
                                          std::size_t scratch_index);

Circuit compile_formula(const CnfFormula& f, std::size_t width_limit = kDefaultWidthLimit);
Circuit compile_1sat(const CnfFormula& f);
Circuit compile_single_clause(const Clause& clause, std::size_t num_vars);

bool is_1sat_compilable(const CnfFormula& f);
bool is_single_clause_compilable(const CnfFormula& f);
Construction resolve_construction(const CnfFormula& f, Construction requested);
Circuit compile(const CnfFormula& f, Construction construction = Construction::Auto,
                std::size_t width_limit = kDefaultWidthLimit);

/// Removes NOT pairs on one wire that have no gate touching that wire in
/// between. One left-to-right pass reaches the fixpoint.
Circuit peephole_cancel(const Circuit& c);

/// Replays the clause blocks in reverse after the final AND so every
/// scratchpad returns to 0. `c` must be compile_formula(f), optionally after
/// peephole_cancel.
Circuit append_uncompute(const Circuit& c, const CnfFormula& f);

/// Tallies a circuit. An Mcx with k >= 2 controls is charged 3(k-1) C-NOTs and
/// 4(k-1) single-qubit gates; a single-control Mcx is one C-NOT.
GateCounts count_gates(const Circuit& c);
GateCounts cost_model(const CnfFormula& f, Construction construction = Construction::General);

BasisPermutation as_permutation(const Circuit& c,
                                std::size_t width_limit = kDefaultPermutationLimit);
std::uint64_t apply_to_basis(const Gate& g, std::uint64_t index);

// Text interchange: "qbc <width> <n> <m_scratch>" then "x <t>" or
// "mcx <c1,c2,...> <t>" per line.
std::string to_text(const Circuit& c);
Circuit circuit_from_text(std::string_view text);
nlohmann::json to_json(const Circuit& c);
Circuit circuit_from_json(const nlohmann::json& j);
std::string to_report(const GateCounts& counts);
nlohmann::json to_json(const GateCounts& counts);

std::string to_string(const Gate& g);
std::string to_string(Construction c);
Construction construction_from_string(std::string_view name);

}  // namespace qbcsat
