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

// Desk-scale verification over a battery of small degree sequences: the
// exact counting identities, involution spot-checks of the switchings, and
// formula-versus-exact comparisons.

#ifndef LINHYPER_CORE_VERIFY_HPP_
#define LINHYPER_CORE_VERIFY_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "asymptotics.hpp"
#include "degree_model.hpp"
#include "exact_oracle.hpp"
#include "serialize.hpp"

namespace linhyper {

struct BatteryOptions {
  // Exhaustive part: every non-increasing k with 1 <= n <= n_max and
  // entries in [1, k_max], for each r with r | M.
  int n_max = 6;
  int k_max = 3;
  std::vector<int> r_values{3, 4};
  // Random part: unsorted k with entries in [0, k_max] and r <= n <=
  // random_n_max, kept when r | M and the guard admits the instance.
  int random_instances = 50;
  int random_n_max = 7;
  std::uint64_t seed = 1;
  Guard guard{18, 10, std::nullopt};
};

struct BatteryInstance {
  DegreeSequence ds;
  bool random = false;
};

std::vector<BatteryInstance> battery(const BatteryOptions& options);

struct InstanceResult {
  explicit InstanceResult(BatteryInstance inst) : instance(std::move(inst)) {}

  BatteryInstance instance;
  std::optional<OracleReport> report;
  bool step1 = false;      // (M/r)! |H| == |B0|
  bool partition = false;  // sum |C_d| == |B+|
  bool linear = false;     // |L| (M/r)! == |C_0|
  bool involution = false;
  std::int64_t involution_checks = 0;
  std::string failure;
  Estimate est_linear, est_simple, est_bigraph;
  // |C_1| / |C_0| when |C_0| > 0.
  std::optional<double> ratio_exact;
  double ratio_predicted = 0.0;

  bool ok() const { return step1 && partition && linear && involution; }
};

struct VerifyOptions {
  BatteryOptions battery;
  unsigned workers = 1;
  // Graphs with a 4-cycle whose forward switchings are round-tripped.
  int involution_graphs = 20;
};

InstanceResult verify_instance(const BatteryInstance& instance, const VerifyOptions& options);

struct VerifyReport {
  std::vector<InstanceResult> rows;
  bool identities_ok = true;
};

// Throws Error(kInvalidArgument) when the battery is empty.
VerifyReport run_verification(const VerifyOptions& options);

Json to_json(const InstanceResult& row, bool ratio_check);
Json to_json(const VerifyReport& report, bool ratio_check);

}  // namespace linhyper

#endif  // LINHYPER_CORE_VERIFY_HPP_
