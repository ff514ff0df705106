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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace qbcsat {

/// Largest variable count `brute_force_solutions` enumerates by default.
inline constexpr std::size_t kDefaultExhaustiveLimit = 24;

/// A variable x_var (1-based) or its negation.
struct Literal {
  std::uint32_t var = 1;
  bool negated = false;

  friend auto operator<=>(const Literal&, const Literal&) = default;
};

/// Disjunction of literals. An empty clause is false.
struct Clause {
  std::vector<Literal> literals;

  /// True when some variable occurs both plain and negated.
  bool is_tautology() const;
  /// Literals with duplicates removed, first occurrence order kept.
  Clause deduplicated() const;

  friend bool operator==(const Clause&, const Clause&) = default;
};

/// Conjunction of clauses over variables x_1..x_num_vars.
struct CnfFormula {
  std::size_t num_vars = 0;
  std::vector<Clause> clauses;

  std::size_t num_clauses() const { return clauses.size(); }
  /// Largest clause length, 0 for an empty formula.
  std::size_t max_clause_width() const;
  /// Throws InvalidArgument when a literal is out of [1, num_vars].
  void validate() const;

  friend bool operator==(const CnfFormula&, const CnfFormula&) = default;
};

/// Truth values for x_1..x_n. Bit i of `index()` holds x_{i+1}, so the
/// printed form reads x_n..x_1 from left to right.
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(std::vector<bool> bits) : bits_(std::move(bits)) {}

  static Assignment from_index(std::uint64_t index, std::size_t num_vars);
  /// Parses a bitstring written x_n..x_1.
  static Assignment from_string(std::string_view bits);

  std::size_t size() const { return bits_.size(); }
  /// Value of x_var, var is 1-based.
  bool value(std::uint32_t var) const;
  std::uint64_t index() const;
  std::string to_string() const;
  const std::vector<bool>& bits() const { return bits_; }

  friend bool operator==(const Assignment&, const Assignment&) = default;
  friend std::strong_ordering operator<=>(const Assignment& a, const Assignment& b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    return a.index() <=> b.index();
  }

 private:
  std::vector<bool> bits_;
};

using AssignmentSet = std::set<Assignment>;

CnfFormula parse_dimacs(std::istream& in);
CnfFormula parse_dimacs(std::string_view text);
std::string to_dimacs(const CnfFormula& f);

bool evaluate_clause(const Clause& clause, const Assignment& a);
bool evaluate(const CnfFormula& f, const Assignment& a);

/// Every satisfying assignment, found by enumerating all 2^n inputs.
AssignmentSet brute_force_solutions(const CnfFormula& f,
                                    std::size_t exhaustive_limit = kDefaultExhaustiveLimit);

/// Uniform random k-SAT: each clause draws k distinct variables and negates
/// each with probability 1/2. Deterministic for a fixed seed.
CnfFormula generate_random_ksat(std::size_t num_vars, std::size_t num_clauses, std::size_t k,
                                std::uint64_t seed);

std::string to_string(const Literal& lit);
std::string to_string(const Clause& clause);
std::string to_string(const CnfFormula& f);

}  // namespace qbcsat
