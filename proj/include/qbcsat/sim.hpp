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
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <nlohmann/json_fwd.hpp>

#include "qbcsat/circuit.hpp"
#include "qbcsat/cnf.hpp"
#include "qbcsat/error.hpp"

namespace qbcsat {

/// Tolerance for weight sums and the 2^-n uniformity check.
inline constexpr double kPopulationTolerance = 1e-12;

/// Diagonal of a density operator in the computational basis. Entry b is the
/// population of the basis state whose wire w holds bit w of b. NOT and Mcx
/// only permute the basis, so coherences never appear and the diagonal is the
/// whole state.
template <typename Scalar = double>
class PopulationState {
 public:
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  PopulationState() = default;
  PopulationState(std::size_t width, Vector populations)
      : width_(width), populations_(std::move(populations)) {
    if (width_ >= 63 || static_cast<std::uint64_t>(populations_.size()) != (std::uint64_t{1} << width_)) {
      throw InvalidArgument("population vector length does not match width " + std::to_string(width_));
    }
  }

  static PopulationState zero(std::size_t width) {
    return PopulationState(width, Vector::Zero(Eigen::Index{1} << width));
  }

  std::size_t width() const { return width_; }
  std::size_t dimension() const { return static_cast<std::size_t>(populations_.size()); }
  const Vector& populations() const { return populations_; }
  Vector& populations() { return populations_; }
  Scalar operator[](std::uint64_t index) const { return populations_[static_cast<Eigen::Index>(index)]; }
  Scalar total() const { return populations_.sum(); }

  std::size_t support_size() const {
    return static_cast<std::size_t>((populations_.array() != Scalar(0)).count());
  }

  friend bool operator==(const PopulationState& a, const PopulationState& b) {
    return a.width_ == b.width_ && a.populations_ == b.populations_;
  }

 private:
  std::size_t width_ = 0;
  Vector populations_;
};

/// Satisfying (work qubit 1) and non-satisfying (work qubit 0) assignments.
struct SolutionReport {
  AssignmentSet true_space;
  AssignmentSet false_space;

  std::size_t count() const { return true_space.size(); }
  friend bool operator==(const SolutionReport&, const SolutionReport&) = default;
};

/// Basis bitstring in wire order width-1 .. 0, i.e. s_m..s_1 x_n..x_1 I0.
inline std::string basis_label(std::uint64_t index, std::size_t width) {
  std::string s(width, '0');
  for (std::size_t w = 0; w < width; ++w) {
    if ((index >> w) & 1U) s[width - 1 - w] = '1';
  }
  return s;
}

/// Uniform mixture over all 2^n variable settings with I0 and every scratch
/// qubit in |0>.
template <typename Scalar = double>
PopulationState<Scalar> initial_mixed_state(const QubitLayout& layout,
                                            std::size_t width_limit = kDefaultWidthLimit) {
  if (layout.width() > width_limit) {
    throw LimitExceeded("state width " + std::to_string(layout.width()) + " exceeds limit " +
                        std::to_string(width_limit));
  }
  auto state = PopulationState<Scalar>::zero(layout.width());
  const std::uint64_t assignments = std::uint64_t{1} << layout.num_vars();
  const Scalar weight = Scalar(1) / static_cast<Scalar>(assignments);
  for (std::uint64_t x = 0; x < assignments; ++x) {
    state.populations()[static_cast<Eigen::Index>(x << 1)] = weight;
  }
  return state;
}

/// Moves the weight of basis index b to the gate's image of b. Each gate is
/// an involution on indices, so this is a swap of paired entries.
template <typename Scalar>
PopulationState<Scalar> apply_gate(PopulationState<Scalar> s, const Gate& g) {
  if (g.max_wire() >= s.width()) {
    throw InvalidArgument("gate " + to_string(g) + " outside state of width " + std::to_string(s.width()));
  }
  const std::uint64_t flip = std::uint64_t{1} << g.target;
  std::uint64_t mask = 0;
  for (auto w : g.controls) mask |= std::uint64_t{1} << w;
  auto& p = s.populations();
  for (std::uint64_t b = 0; b < s.dimension(); ++b) {
    if ((b & flip) == 0 && (b & mask) == mask) {
      std::swap(p[static_cast<Eigen::Index>(b)], p[static_cast<Eigen::Index>(b | flip)]);
    }
  }
  return s;
}

template <typename Scalar = double>
PopulationState<Scalar> run(const Circuit& c, PopulationState<Scalar> state) {
  if (state.width() != c.width()) throw InvalidArgument("state width does not match circuit width");
  for (const auto& g : c.gates) state = apply_gate(std::move(state), g);
  return state;
}

/// Folds the mixed input state through every gate of `c`.
template <typename Scalar = double>
PopulationState<Scalar> run(const Circuit& c, std::size_t width_limit = kDefaultWidthLimit) {
  return run<Scalar>(c, initial_mixed_state<Scalar>(c.layout, width_limit));
}

/// Sums populations over the wires not in `keep`. Kept wires are renumbered
/// in ascending order, so kept wire j becomes bit j of the result.
template <typename Scalar>
PopulationState<Scalar> marginalize(const PopulationState<Scalar>& s, std::vector<Wire> keep) {
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  if (keep.empty()) throw InvalidArgument("marginalize needs at least one kept wire");
  if (keep.back() >= s.width()) throw InvalidArgument("kept wire outside state");
  auto out = PopulationState<Scalar>::zero(keep.size());
  for (std::uint64_t b = 0; b < s.dimension(); ++b) {
    std::uint64_t reduced = 0;
    for (std::size_t j = 0; j < keep.size(); ++j) reduced |= ((b >> keep[j]) & 1U) << j;
    out.populations()[static_cast<Eigen::Index>(reduced)] += s[b];
  }
  return out;
}

/// Reads the satisfying set off a pipeline output: every assignment x owns a
/// single basis state of weight 2^-n, and that state's I0 bit is F(x).
template <typename Scalar>
SolutionReport true_space(const PopulationState<Scalar>& s, const QubitLayout& layout) {
  if (s.width() != layout.width()) throw InvalidArgument("state width does not match layout");
  const std::size_t n = layout.num_vars();
  const std::uint64_t assignments = std::uint64_t{1} << n;
  const double expected = 1.0 / static_cast<double>(assignments);
  const std::uint64_t var_mask = (assignments - 1) << 1;

  std::vector<int> work_bit(assignments, -1);
  for (std::uint64_t b = 0; b < s.dimension(); ++b) {
    const double w = static_cast<double>(s[b]);
    if (w == 0.0) continue;
    const std::uint64_t x = (b & var_mask) >> 1;
    if (work_bit[x] != -1 || std::abs(w - expected) > kPopulationTolerance) {
      throw StateFormError("assignment " + Assignment::from_index(x, n).to_string() +
                           " is spread over several basis states");
    }
    work_bit[x] = static_cast<int>(b & 1U);
  }

  SolutionReport report;
  for (std::uint64_t x = 0; x < assignments; ++x) {
    if (work_bit[x] == -1) {
      throw StateFormError("assignment " + Assignment::from_index(x, n).to_string() + " carries no weight");
    }
    auto a = Assignment::from_index(x, n);
    (work_bit[x] ? report.true_space : report.false_space).insert(std::move(a));
  }
  return report;
}

/// {"count": N, "solutions": [...], "non_solutions": [...]} with bitstrings
/// written x_n..x_1.
nlohmann::json to_json(const SolutionReport& report);

/// Two-column table of the nonzero populations: basis bitstring, weight.
template <typename Scalar>
std::string to_table(const PopulationState<Scalar>& s) {
  std::ostringstream out;
  out.precision(17);
  for (std::uint64_t b = 0; b < s.dimension(); ++b) {
    if (s[b] != Scalar(0)) out << basis_label(b, s.width()) << ' ' << s[b] << '\n';
  }
  return out.str();
}

}  // namespace qbcsat
