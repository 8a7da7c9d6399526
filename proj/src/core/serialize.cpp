// Copyright 2026 The linhyper Authors
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

#include "serialize.hpp"

#include <algorithm>
#include <climits>
#include <cmath>

#include "error.hpp"

namespace linhyper {

namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorCode::kInvalidArgument, what);
}

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) malformed(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

std::int64_t as_integer(const Json& j, const char* what) {
  if (!j.is_number_integer()) malformed(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

int as_int(const Json& j, const char* what) {
  const std::int64_t v = as_integer(j, what);
  if (v < INT_MIN || v > INT_MAX) malformed(std::string(what) + " out of range");
  return static_cast<int>(v);
}

const Json& as_array(const Json& j, const char* what) {
  if (!j.is_array()) malformed(std::string(what) + " must be an array");
  return j;
}

Json finite_or_null(double x) {
  if (std::isfinite(x)) return x;
  if (std::isinf(x) && x > 0) return "inf";
  return nullptr;
}

Json cycle_json(const FourCycle& c) {
  return Json{{"left", {c.left[0] + 1, c.left[1] + 1}},
              {"right", {c.right[0] + 1, c.right[1] + 1}}};
}

Json property_list(const std::vector<Property>& props) {
  Json out = Json::array();
  for (Property p : props) out.push_back(std::string(roman(p)));
  return out;
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    malformed(std::string("invalid JSON: ") + e.what());
  }
}

DegreeSequence degree_sequence_from_json(const Json& j) {
  const int r = as_int(field(j, "r"), "r");
  std::vector<std::int64_t> k;
  for (const Json& x : as_array(field(j, "k"), "k")) k.push_back(as_integer(x, "k entry"));
  return DegreeSequence(std::move(k), r);
}

Json to_json(const DegreeSequence& ds) {
  return Json{{"r", ds.r()}, {"k", std::vector<std::int64_t>(ds.k().begin(), ds.k().end())}};
}

BipartiteGraph bigraph_from_json(const Json& j) {
  const int n_left = as_int(field(j, "n_left"), "n_left");
  const int n_right = as_int(field(j, "n_right"), "n_right");
  if (n_left < 0 || n_right < 0) malformed("vertex counts must be nonnegative");
  std::vector<Edge> edges;
  for (const Json& e : as_array(field(j, "edges"), "edges")) {
    if (!e.is_array() || e.size() != 2) malformed("each edge must be a pair [j, i]");
    edges.emplace_back(as_int(e[0], "edge endpoint") - 1, as_int(e[1], "edge endpoint") - 1);
  }
  return BipartiteGraph::from_edges(n_left, n_right, edges);
}

Json to_json(const BipartiteGraph& graph) {
  Json edges = Json::array();
  for (const auto& [j, i] : graph.edges()) edges.push_back({j + 1, i + 1});
  return Json{{"n_left", graph.n_left()}, {"n_right", graph.n_right()}, {"edges", edges}};
}

Hypergraph hypergraph_from_json(const Json& j) {
  Hypergraph h;
  h.n = as_int(field(j, "n"), "n");
  if (h.n < 0) malformed("n must be nonnegative");
  for (const Json& e : as_array(field(j, "edges"), "edges")) {
    std::vector<int> edge;
    for (const Json& v : as_array(e, "edge")) {
      const int x = as_int(v, "vertex");
      if (x < 1 || x > h.n) malformed("vertex " + std::to_string(x) + " out of range");
      edge.push_back(x - 1);
    }
    std::sort(edge.begin(), edge.end());
    h.edges.push_back(std::move(edge));
  }
  return h;
}

Json to_json(const Hypergraph& hypergraph) {
  Json edges = Json::array();
  for (const auto& e : hypergraph.edges) {
    Json edge = Json::array();
    for (int v : e) edge.push_back(v + 1);
    edges.push_back(edge);
  }
  return Json{{"n", hypergraph.n}, {"edges", edges}};
}

Json to_json(const Classification& cls) {
  Json cycles = Json::array();
  for (const FourCycle& c : cls.four_cycles) cycles.push_back(cycle_json(c));
  return Json{{"d", cls.d},
              {"n2", cls.n2},
              {"four_cycles", cycles},
              {"in_b0", cls.in_b0},
              {"in_bplus", cls.in_bplus},
              {"failed_properties", property_list(cls.failed_properties)}};
}

Json to_json(const HyperProperties& props) {
  Json links = Json::array();
  for (const auto& l : props.double_links) links.push_back({l[0] + 1, l[1] + 1});
  return Json{{"loops", props.loops},
              {"repeated_edges", props.repeated_edges},
              {"max_link_multiplicity", props.max_link_multiplicity},
              {"double_links", links},
              {"is_simple", props.is_simple},
              {"is_linear", props.is_linear},
              {"failed_dual", property_list(props.failed_dual)}};
}

Json to_json(const OracleReport& report) {
  Json profile = Json::array();
  for (const BigInt& c : report.cd_profile) profile.push_back(c.str());
  return Json{{"edges", report.edges},
              {"n2", report.n2},
              {"count_b", report.count_b.str()},
              {"count_b0", report.count_b0.str()},
              {"count_bplus", report.count_bplus.str()},
              {"count_h", report.count_h.str()},
              {"count_l", report.count_l.str()},
              {"cd_profile", profile}};
}

Json to_json(const Estimate& est) {
  Json corrections = Json::object();
  for (const auto& [name, term] : est.corrections) corrections[name] = term;
  return Json{{"log_value", est.log_value},
              {"value", finite_or_null(est.value)},
              {"leading_log", est.leading_log},
              {"corrections", corrections},
              {"error_scale", est.error_scale}};
}

Json to_json(const Thresholds& th) {
  return Json{{"n2", th.n2},
              {"q1", th.q1},
              {"q2", th.q2},
              {"sparsity_indicator", th.sparsity_indicator}};
}

Json to_json(const SwitchSample& sample, std::uint64_t seed) {
  return Json{{"graph", to_json(sample.graph)},
              {"metadata",
               {{"seed", seed},
                {"steps", sample.steps},
                {"rejections", sample.rejections},
                {"d_trajectory", sample.d_trajectory}}}};
}

}  // namespace linhyper
