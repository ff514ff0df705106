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

#include <charconv>
#include <sstream>

#include <nlohmann/json.hpp>

#include "qbcsat/circuit.hpp"
#include "qbcsat/error.hpp"

namespace qbcsat {

namespace {

std::size_t parse_index(std::string_view tok, std::size_t line_no) {
  std::size_t v = 0;
  const auto* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, v);
  if (tok.empty() || ec != std::errc() || ptr != end) {
    throw ParseError("circuit line " + std::to_string(line_no) + ": bad wire index '" +
                     std::string(tok) + "'");
  }
  return v;
}

std::string_view role_name(WireRole r) {
  switch (r) {
    case WireRole::Work: return "work";
    case WireRole::Variable: return "variable";
    case WireRole::Scratch: return "scratch";
  }
  return "work";
}

}  // namespace

std::string to_text(const Circuit& c) {
  std::ostringstream out;
  out << "qbc " << c.width() << ' ' << c.layout.num_vars() << ' ' << c.layout.num_scratch() << '\n';
  for (const auto& g : c.gates) out << to_string(g) << '\n';
  return out.str();
}

Circuit circuit_from_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  Circuit c;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string op;
    if (!(ls >> op) || op.front() == '#') continue;
    std::string a, b, extra;
    ls >> a >> b;
    if (op == "qbc") {
      std::string m;
      ls >> m;
      if (have_header || m.empty() || (ls >> extra)) {
        throw ParseError("circuit line " + std::to_string(line_no) + ": bad or repeated header");
      }
      const auto width = parse_index(a, line_no);
      c.layout = QubitLayout(parse_index(b, line_no), parse_index(m, line_no));
      if (c.layout.width() != width) {
        throw ParseError("circuit header width " + std::to_string(width) + " != n + 1 + m");
      }
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError("circuit line " + std::to_string(line_no) + ": gate before header");
    if (op == "x") {
      if (a.empty() || !b.empty()) throw ParseError("circuit line " + std::to_string(line_no) + ": expected 'x <t>'");
      c.gates.push_back(Gate::x(parse_index(a, line_no)));
    } else if (op == "mcx") {
      if (b.empty() || (ls >> extra)) {
        throw ParseError("circuit line " + std::to_string(line_no) + ": expected 'mcx <c1,c2,...> <t>'");
      }
      std::vector<Wire> controls;
      std::string_view rest = a;
      while (true) {
        const auto comma = rest.find(',');
        controls.push_back(parse_index(rest.substr(0, comma), line_no));
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
      }
      try {
        c.gates.push_back(Gate::mcx(std::move(controls), parse_index(b, line_no)));
      } catch (const InvalidArgument& e) {
        throw ParseError("circuit line " + std::to_string(line_no) + ": " + e.what());
      }
    } else {
      throw ParseError("circuit line " + std::to_string(line_no) + ": unknown gate '" + op + "'");
    }
  }
  if (!have_header) throw ParseError("missing 'qbc' header");
  try {
    c.validate();
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
  return c;
}

nlohmann::json to_json(const Circuit& c) {
  nlohmann::json roles = nlohmann::json::array();
  for (Wire w = 0; w < c.width(); ++w) {
    nlohmann::json r{{"wire", w}, {"role", role_name(c.layout.role(w))}};
    if (w != 0) r["index"] = c.layout.role_index(w);
    roles.push_back(std::move(r));
  }
  nlohmann::json gates = nlohmann::json::array();
  for (const auto& g : c.gates) {
    if (g.kind == GateKind::Not) {
      gates.push_back({{"op", "x"}, {"target", g.target}});
    } else {
      gates.push_back({{"op", "mcx"}, {"controls", g.controls}, {"target", g.target}});
    }
  }
  return {{"width", c.width()},
          {"num_vars", c.layout.num_vars()},
          {"num_scratch", c.layout.num_scratch()},
          {"roles", std::move(roles)},
          {"gates", std::move(gates)}};
}

Circuit circuit_from_json(const nlohmann::json& j) {
  try {
    Circuit c{QubitLayout(j.at("num_vars").get<std::size_t>(), j.at("num_scratch").get<std::size_t>()), {}};
    if (j.contains("width") && j.at("width").get<std::size_t>() != c.width()) {
      throw ParseError("circuit width does not equal num_vars + 1 + num_scratch");
    }
    for (const auto& g : j.at("gates")) {
      const auto op = g.at("op").get<std::string>();
      const auto t = g.at("target").get<Wire>();
      if (op == "x") {
        c.gates.push_back(Gate::x(t));
      } else if (op == "mcx") {
        c.gates.push_back(Gate::mcx(g.at("controls").get<std::vector<Wire>>(), t));
      } else {
        throw ParseError("unknown gate op '" + op + "'");
      }
    }
    c.validate();
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("circuit document: ") + e.what());
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

std::string to_report(const GateCounts& counts) {
  std::ostringstream out;
  out << "not: " << counts.not_count << '\n';
  for (const auto& [k, n] : counts.mcx_by_arity) out << "mcx_c" << k << ": " << n << '\n';
  out << "elementary_cnot: " << counts.elementary_cnot << '\n';
  out << "elementary_single: " << counts.elementary_single << '\n';
  return out.str();
}

nlohmann::json to_json(const GateCounts& counts) {
  nlohmann::json by_arity = nlohmann::json::object();
  for (const auto& [k, n] : counts.mcx_by_arity) by_arity[std::to_string(k)] = n;
  return {{"not", counts.not_count},
          {"mcx_by_arity", std::move(by_arity)},
          {"elementary_cnot", counts.elementary_cnot},
          {"elementary_single", counts.elementary_single}};
}

}  // namespace qbcsat
