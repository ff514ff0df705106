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

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "qbcsat/sim.hpp"
#include "test_corpus.hpp"

namespace qbcsat {
namespace {

constexpr const char* kThreeSat = "p cnf 3 3\n1 2 3 0\n1 2 -3 0\n-1 2 3 0";

// Basis index with I0 = x0, variables = x, scratch = s.
std::uint64_t basis(std::uint64_t x, std::uint64_t x0, std::uint64_t s, std::size_t n) {
  return x0 | (x << 1) | (s << (n + 1));
}

TEST(InitialState, Examples) {
  const auto one = initial_mixed_state(QubitLayout(1, 0));
  EXPECT_EQ(one.populations(), Eigen::Vector4d(0.5, 0.0, 0.5, 0.0));

  const auto three = initial_mixed_state(QubitLayout(3, 0));
  EXPECT_EQ(three.support_size(), 8u);
  for (std::uint64_t x = 0; x < 8; ++x) EXPECT_EQ(three[basis(x, 0, 0, 3)], 0.125);

  const auto scratch = initial_mixed_state(QubitLayout(2, 1));
  EXPECT_EQ(scratch.support_size(), 4u);
  for (std::uint64_t x = 0; x < 4; ++x) EXPECT_EQ(scratch[basis(x, 0, 0, 2)], 0.25);

  EXPECT_THROW(initial_mixed_state(QubitLayout(20, 5)), LimitExceeded);
}

TEST(ApplyGate, Examples) {
  const auto s0 = initial_mixed_state(QubitLayout(1, 0));
  const auto flipped = apply_gate(s0, Gate::x(0));
  EXPECT_EQ(flipped.populations(), Eigen::Vector4d(0.0, 0.5, 0.0, 0.5));

  // F = x1: only |x1=1, x0=0> moves to |11>.
  const auto cnot = apply_gate(s0, Gate::mcx({1}, 0));
  EXPECT_EQ(cnot.populations(), Eigen::Vector4d(0.5, 0.0, 0.0, 0.5));

  const auto s2 = initial_mixed_state(QubitLayout(2, 0));
  EXPECT_EQ(apply_gate(apply_gate(s2, Gate::x(2)), Gate::x(2)), s2);

  EXPECT_THROW(apply_gate(s0, Gate::x(2)), InvalidArgument);
}

TEST(Run, EquationTenOutput) {
  const auto c = compile_1sat(parse_dimacs("p cnf 3 3\n-1 0\n2 0\n3 0"));
  const auto out = run(c);
  EXPECT_EQ(out.support_size(), 8u);
  for (std::uint64_t x = 0; x < 8; ++x) {
    const std::uint64_t x0 = x == 0b110 ? 1 : 0;
    EXPECT_EQ(out[basis(x, x0, 0, 3)], 0.125) << x;
  }
}

TEST(Run, ThreeClauseThreeSatTrueStatesCarryAllOnesScratch) {
  const auto f = parse_dimacs(kThreeSat);
  const auto c = compile_formula(f);
  const auto out = run(c);
  std::size_t with_work_set = 0;
  for (std::uint64_t b = 0; b < out.dimension(); ++b) {
    if (out[b] == 0.0 || (b & 1U) == 0) continue;
    ++with_work_set;
    EXPECT_EQ(b >> 4, 0b111u);
  }
  EXPECT_EQ(with_work_set, 5u);
}

TEST(Run, EmptyCircuitIsIdentity) {
  const Circuit c{QubitLayout(2, 1), {}};
  EXPECT_EQ(run(c), initial_mixed_state(c.layout));
}

TEST(TrueSpace, Examples) {
  const auto eq10 = compile_1sat(parse_dimacs("p cnf 3 3\n-1 0\n2 0\n3 0"));
  const auto r = true_space(run(eq10), eq10.layout);
  EXPECT_EQ(r.count(), 1u);
  EXPECT_EQ(r.true_space.begin()->to_string(), "110");
  EXPECT_EQ(r.false_space.size(), 7u);

  const auto taut = compile_formula(parse_dimacs("p cnf 1 1\n1 -1 0"));
  EXPECT_EQ(true_space(run(taut), taut.layout).count(), 2u);

  const auto contra = compile_formula(parse_dimacs("p cnf 1 2\n1 0\n-1 0"));
  const auto rc = true_space(run(contra), contra.layout);
  EXPECT_EQ(rc.count(), 0u);
  EXPECT_EQ(rc.false_space.size(), 2u);
}

TEST(TrueSpace, RejectsNonPipelineState) {
  const QubitLayout layout(1, 0);
  auto split = PopulationState<double>(2, Eigen::Vector4d(0.25, 0.25, 0.5, 0.0));
  EXPECT_THROW(true_space(split, layout), StateFormError);
  auto missing = PopulationState<double>(2, Eigen::Vector4d(1.0, 0.0, 0.0, 0.0));
  EXPECT_THROW(true_space(missing, layout), StateFormError);
  EXPECT_THROW(true_space(missing, QubitLayout(2, 0)), InvalidArgument);
}

TEST(Marginalize, Examples) {
  const auto f = parse_dimacs(kThreeSat);
  const auto c = compile_formula(f);
  const auto reduced = marginalize(run(c), {0, 1, 2, 3});
  EXPECT_EQ(reduced.width(), 4u);
  for (std::uint64_t x = 0; x < 8; ++x) {
    const std::uint64_t fx = evaluate(f, Assignment::from_index(x, 3)) ? 1 : 0;
    EXPECT_EQ(reduced[(x << 1) | fx], 0.125);
  }
  const auto s = run(c);
  EXPECT_EQ(marginalize(s, {0, 1, 2, 3, 4, 5, 6}), s);

  const auto init = initial_mixed_state(QubitLayout(2, 2));
  const auto rest = marginalize(init, {0, 3, 4});
  EXPECT_EQ(rest[0], 1.0);
  EXPECT_EQ(rest.total(), 1.0);
  EXPECT_THROW(marginalize(init, {}), InvalidArgument);
  EXPECT_THROW(marginalize(init, {5}), InvalidArgument);
}

TEST(Scalar, FloatInstantiationAgrees) {
  const auto f = parse_dimacs(kThreeSat);
  const auto c = compile_formula(f);
  EXPECT_EQ(true_space(run<float>(c), c.layout), true_space(run<double>(c), c.layout));
}

TEST(Export, TableAndJson) {
  const auto c = compile_1sat(parse_dimacs("p cnf 1 1\n1 0"));
  EXPECT_EQ(to_table(run(c)), "00 0.5\n11 0.5\n");
  const auto j = to_json(true_space(run(c), c.layout));
  EXPECT_EQ(j["count"], 1);
  EXPECT_EQ(j["solutions"][0], "1");
}

TEST(Properties, WeightConservedAfterEveryGate) {
  for (const auto& f : testing::random_corpus(31, 100)) {
    const auto c = compile_formula(f);
    auto s = initial_mixed_state(c.layout);
    for (const auto& g : c.gates) {
      s = apply_gate(std::move(s), g);
      ASSERT_NEAR(s.total(), 1.0, kPopulationTolerance);
      ASSERT_GE(s.populations().minCoeff(), 0.0);
    }
  }
}

TEST(Properties, NonzeroWeightsStayUniform) {
  for (const auto& f : testing::random_corpus(32, 100)) {
    const auto out = run(compile_formula(f));
    const double w = std::ldexp(1.0, -static_cast<int>(f.num_vars));
    EXPECT_EQ(out.support_size(), std::size_t{1} << f.num_vars);
    for (std::uint64_t b = 0; b < out.dimension(); ++b) ASSERT_TRUE(out[b] == 0.0 || out[b] == w);
  }
}

TEST(Properties, OracleEquivalence) {
  auto corpus = testing::random_corpus(33, 200);
  const auto exhaustive = testing::exhaustive_small_formulas();
  corpus.insert(corpus.end(), exhaustive.begin(), exhaustive.end());
  for (const auto& f : corpus) {
    const auto c = compile_formula(f);
    const auto r = true_space(run(c), c.layout);
    ASSERT_EQ(r.true_space, brute_force_solutions(f)) << to_string(f);
    ASSERT_EQ(r.true_space.size() + r.false_space.size(), std::size_t{1} << f.num_vars);
  }
}

TEST(Properties, PathEquivalence) {
  auto corpus = testing::random_corpus(34, 200);
  const auto exhaustive = testing::exhaustive_small_formulas();
  corpus.insert(corpus.end(), exhaustive.begin(), exhaustive.end());
  std::size_t one_sat = 0, single = 0;
  for (const auto& f : corpus) {
    const auto general = compile_formula(f);
    const auto expected = true_space(run(general), general.layout);
    if (is_1sat_compilable(f)) {
      ++one_sat;
      const auto c = compile_1sat(f);
      ASSERT_EQ(true_space(run(c), c.layout), expected) << to_string(f);
    }
    if (is_single_clause_compilable(f)) {
      ++single;
      const auto c = compile_single_clause(f.clauses[0], f.num_vars);
      ASSERT_EQ(true_space(run(c), c.layout), expected) << to_string(f);
    }
  }
  EXPECT_GT(one_sat, 10u);
  EXPECT_GT(single, 10u);
}

TEST(Properties, UncomputeLeavesScratchAtZero) {
  for (const auto& f : testing::random_corpus(35, 200)) {
    const auto c = append_uncompute(compile_formula(f), f);
    const auto scratch = marginalize(run(c), c.layout.scratch_wires());
    ASSERT_NEAR(scratch[0], 1.0, kPopulationTolerance);
  }
}

}  // namespace
}  // namespace qbcsat
