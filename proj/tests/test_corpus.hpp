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

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "qbcsat/circuit.hpp"
#include "qbcsat/cnf.hpp"

namespace qbcsat::testing {

/// Seeded random k-SAT instances with n <= 4, m <= 5, k <= min(3, n).
inline std::vector<CnfFormula> random_corpus(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::vector<CnfFormula> out;
  for (std::size_t i = 0; i < count; ++i) {
    const auto n = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
    const auto k = std::uniform_int_distribution<std::size_t>(1, std::min<std::size_t>(3, n))(rng);
    const auto m = std::uniform_int_distribution<std::size_t>(1, 5)(rng);
    out.push_back(generate_random_ksat(n, m, k, rng()));
  }
  return out;
}

/// Every non-empty set of distinct clauses of width <= 2 over n <= 2 variables
/// (no repeated variable inside a clause).
inline std::vector<CnfFormula> exhaustive_small_formulas() {
  std::vector<CnfFormula> out;
  for (std::uint32_t n = 1; n <= 2; ++n) {
    std::vector<Clause> pool;
    for (std::uint32_t v = 1; v <= n; ++v) {
      pool.push_back(Clause{{{v, false}}});
      pool.push_back(Clause{{{v, true}}});
    }
    if (n == 2) {
      for (int signs = 0; signs < 4; ++signs) pool.push_back(Clause{{{1, (signs & 1) != 0}, {2, (signs & 2) != 0}}});
    }
    for (std::uint32_t subset = 1; subset < (1U << pool.size()); ++subset) {
      CnfFormula f{n, {}};
      for (std::size_t i = 0; i < pool.size(); ++i) {
        if ((subset >> i) & 1U) f.clauses.push_back(pool[i]);
      }
      out.push_back(std::move(f));
    }
  }
  return out;
}

/// Seeded random circuits of width <= 8 with at most 50 gates.
inline Circuit random_circuit(std::mt19937_64& rng) {
  const auto width = std::uniform_int_distribution<std::size_t>(1, 8)(rng);
  Circuit c{QubitLayout(width - 1, 0), {}};
  const auto gates = std::uniform_int_distribution<std::size_t>(0, 50)(rng);
  std::uniform_int_distribution<Wire> wire(0, width - 1);
  for (std::size_t i = 0; i < gates; ++i) {
    // NOT-heavy so cancellations actually happen.
    if (width == 1 || std::bernoulli_distribution(0.7)(rng)) {
      c.gates.push_back(Gate::x(wire(rng)));
      continue;
    }
    const Wire t = wire(rng);
    std::vector<Wire> controls;
    for (Wire w = 0; w < width; ++w) {
      if (w != t && std::bernoulli_distribution(0.4)(rng)) controls.push_back(w);
    }
    if (controls.empty()) controls.push_back(t == 0 ? 1 : 0);
    c.gates.push_back(Gate::mcx(controls, t));
  }
  return c;
}

}  // namespace qbcsat::testing
