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

#include "qbcsat/cnf.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>

#include "qbcsat/error.hpp"

namespace qbcsat {

bool Clause::is_tautology() const {
  for (const auto& a : literals) {
    for (const auto& b : literals) {
      if (a.var == b.var && a.negated != b.negated) return true;
    }
  }
  return false;
}

Clause Clause::deduplicated() const {
  Clause out;
  for (const auto& lit : literals) {
    if (std::find(out.literals.begin(), out.literals.end(), lit) == out.literals.end()) {
      out.literals.push_back(lit);
    }
  }
  return out;
}

std::size_t CnfFormula::max_clause_width() const {
  std::size_t k = 0;
  for (const auto& c : clauses) k = std::max(k, c.literals.size());
  return k;
}

void CnfFormula::validate() const {
  for (const auto& c : clauses) {
    for (const auto& lit : c.literals) {
      if (lit.var == 0 || lit.var > num_vars) {
        throw InvalidArgument("literal " + to_string(lit) + " outside variables 1.." +
                              std::to_string(num_vars));
      }
    }
  }
}

Assignment Assignment::from_index(std::uint64_t index, std::size_t num_vars) {
  if (num_vars > 64) throw InvalidArgument("assignment wider than 64 variables");
  std::vector<bool> bits(num_vars);
  for (std::size_t i = 0; i < num_vars; ++i) bits[i] = (index >> i) & 1U;
  return Assignment(std::move(bits));
}

Assignment Assignment::from_string(std::string_view text) {
  std::vector<bool> bits(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[text.size() - 1 - i];
    if (ch != '0' && ch != '1') throw ParseError("bad assignment bitstring '" + std::string(text) + "'");
    bits[i] = ch == '1';
  }
  return Assignment(std::move(bits));
}

bool Assignment::value(std::uint32_t var) const {
  if (var == 0 || var > bits_.size()) {
    throw InvalidArgument("variable x" + std::to_string(var) + " not covered by a " +
                          std::to_string(bits_.size()) + "-bit assignment");
  }
  return bits_[var - 1];
}

std::uint64_t Assignment::index() const {
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < bits_.size() && i < 64; ++i) {
    if (bits_[i]) v |= std::uint64_t{1} << i;
  }
  return v;
}

std::string Assignment::to_string() const {
  std::string s(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) s[bits_.size() - 1 - i] = '1';
  }
  return s;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\f\v");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\f\v");
  return s.substr(first, last - first + 1);
}

long long parse_int(std::string_view tok, std::size_t line_no) {
  long long v = 0;
  const auto* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    throw ParseError("line " + std::to_string(line_no) + ": expected integer, got '" +
                     std::string(tok) + "'");
  }
  return v;
}

}  // namespace

CnfFormula parse_dimacs(std::istream& in) {
  std::optional<std::pair<std::size_t, std::size_t>> header;
  CnfFormula f;
  Clause current;
  bool clause_open = false;
  std::string raw;
  std::size_t line_no = 0;

  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = trim(raw);
    if (line.empty() || line.front() == 'c') continue;
    if (line.front() == 'p') {
      if (header) throw ParseError("line " + std::to_string(line_no) + ": duplicate header");
      std::istringstream hs{std::string(line)};
      std::string p, fmt, n_tok, m_tok, extra;
      hs >> p >> fmt >> n_tok >> m_tok;
      if (p != "p" || fmt != "cnf" || m_tok.empty() || (hs >> extra)) {
        throw ParseError("line " + std::to_string(line_no) + ": malformed header, expected 'p cnf <n> <m>'");
      }
      const auto n = parse_int(n_tok, line_no);
      const auto m = parse_int(m_tok, line_no);
      if (n < 0 || m < 0) throw ParseError("line " + std::to_string(line_no) + ": negative header count");
      header.emplace(static_cast<std::size_t>(n), static_cast<std::size_t>(m));
      f.num_vars = header->first;
      continue;
    }
    if (!header) throw ParseError("line " + std::to_string(line_no) + ": clause data before 'p cnf' header");

    std::istringstream ts{std::string(line)};
    std::string tok;
    while (ts >> tok) {
      const auto v = parse_int(tok, line_no);
      if (v == 0) {
        f.clauses.push_back(current.deduplicated());
        current.literals.clear();
        clause_open = false;
        continue;
      }
      const auto var = static_cast<std::size_t>(v < 0 ? -v : v);
      if (var > f.num_vars) {
        throw ParseError("line " + std::to_string(line_no) + ": literal " + std::string(tok) +
                         " exceeds declared variable count " + std::to_string(f.num_vars));
      }
      current.literals.push_back({static_cast<std::uint32_t>(var), v < 0});
      clause_open = true;
    }
  }

  if (!header) throw ParseError("missing 'p cnf' header");
  if (clause_open) throw ParseError("last clause is not terminated by 0");
  if (f.clauses.size() != header->second) {
    throw ParseError("header declares " + std::to_string(header->second) + " clauses, found " +
                     std::to_string(f.clauses.size()));
  }
  return f;
}

CnfFormula parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_dimacs(in);
}

std::string to_dimacs(const CnfFormula& f) {
  std::ostringstream out;
  out << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
  for (const auto& c : f.clauses) {
    for (const auto& lit : c.literals) out << (lit.negated ? "-" : "") << lit.var << ' ';
    out << "0\n";
  }
  return out.str();
}

bool evaluate_clause(const Clause& clause, const Assignment& a) {
  bool result = false;
  for (const auto& lit : clause.literals) result = result || (a.value(lit.var) != lit.negated);
  return result;
}

bool evaluate(const CnfFormula& f, const Assignment& a) {
  if (a.size() != f.num_vars) {
    throw InvalidArgument("assignment has " + std::to_string(a.size()) + " bits, formula has " +
                          std::to_string(f.num_vars) + " variables");
  }
  return std::all_of(f.clauses.begin(), f.clauses.end(),
                     [&](const Clause& c) { return evaluate_clause(c, a); });
}

AssignmentSet brute_force_solutions(const CnfFormula& f, std::size_t exhaustive_limit) {
  if (f.num_vars > exhaustive_limit) {
    throw LimitExceeded(std::to_string(f.num_vars) + " variables exceed the exhaustive limit of " +
                        std::to_string(exhaustive_limit));
  }
  f.validate();
  AssignmentSet out;
  const std::uint64_t total = std::uint64_t{1} << f.num_vars;
  for (std::uint64_t x = 0; x < total; ++x) {
    auto a = Assignment::from_index(x, f.num_vars);
    if (evaluate(f, a)) out.insert(out.end(), std::move(a));
  }
  return out;
}

CnfFormula generate_random_ksat(std::size_t num_vars, std::size_t num_clauses, std::size_t k,
                                std::uint64_t seed) {
  if (k == 0 || k > num_vars) {
    throw InvalidArgument("clause width k=" + std::to_string(k) + " must lie in 1..n=" +
                          std::to_string(num_vars));
  }
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  std::vector<std::uint32_t> vars(num_vars);
  std::iota(vars.begin(), vars.end(), 1U);

  CnfFormula f;
  f.num_vars = num_vars;
  f.clauses.reserve(num_clauses);
  for (std::size_t c = 0; c < num_clauses; ++c) {
    // Partial Fisher-Yates: the first k slots become a uniform k-subset.
    for (std::size_t i = 0; i < k; ++i) {
      std::uniform_int_distribution<std::size_t> pick(i, num_vars - 1);
      std::swap(vars[i], vars[pick(rng)]);
    }
    std::vector<std::uint32_t> chosen(vars.begin(), vars.begin() + static_cast<std::ptrdiff_t>(k));
    std::sort(chosen.begin(), chosen.end());
    Clause clause;
    for (auto v : chosen) clause.literals.push_back({v, coin(rng)});
    f.clauses.push_back(std::move(clause));
  }
  return f;
}

std::string to_string(const Literal& lit) {
  return (lit.negated ? "~x" : "x") + std::to_string(lit.var);
}

std::string to_string(const Clause& clause) {
  std::string s = "(";
  for (std::size_t i = 0; i < clause.literals.size(); ++i) {
    if (i) s += " | ";
    s += to_string(clause.literals[i]);
  }
  return s + ")";
}

std::string to_string(const CnfFormula& f) {
  if (f.clauses.empty()) return "T";
  std::string s;
  for (std::size_t i = 0; i < f.clauses.size(); ++i) {
    if (i) s += " & ";
    s += to_string(f.clauses[i]);
  }
  return s;
}

}  // namespace qbcsat
