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

// JSON forms of the core types. Graph and hypergraph indices are 1-based on
// the wire and 0-based in memory.

#ifndef LINHYPER_CORE_SERIALIZE_HPP_
#define LINHYPER_CORE_SERIALIZE_HPP_

#include <cstdint>
#include <string>

#include <json.hpp>

#include "asymptotics.hpp"
#include "bigraph.hpp"
#include "degree_model.hpp"
#include "exact_oracle.hpp"
#include "switching.hpp"

namespace linhyper {

using Json = nlohmann::ordered_json;

// Parsers throw Error(kInvalidArgument) on malformed documents.
DegreeSequence degree_sequence_from_json(const Json& j);
Json to_json(const DegreeSequence& ds);

BipartiteGraph bigraph_from_json(const Json& j);
Json to_json(const BipartiteGraph& graph);

Hypergraph hypergraph_from_json(const Json& j);
Json to_json(const Hypergraph& hypergraph);

Json to_json(const Classification& cls);
Json to_json(const HyperProperties& props);
Json to_json(const OracleReport& report);
Json to_json(const Estimate& est);
Json to_json(const Thresholds& th);
Json to_json(const SwitchSample& sample, std::uint64_t seed);

// Parses text, mapping parse errors to Error(kInvalidArgument).
Json parse_json(const std::string& text);

}  // namespace linhyper

#endif  // LINHYPER_CORE_SERIALIZE_HPP_
