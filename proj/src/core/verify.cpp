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

#include "verify.hpp"

#include <functional>

#include "error.hpp"
#include "switching.hpp"

namespace linhyper {

namespace {

BigInt factorial(std::int64_t n) {
  BigInt out = 1;
  for (std::int64_t i = 2; i <= n; ++i) out *= i;
  return out;
}

bool admitted(const DegreeSequence& ds, const Guard& guard) {
  try {
    check_guard(ds, guard);
    return true;
  } catch (const Error&) {
    return false;
  }
}

void sorted_sequences(int n, int k_max, const std::function<void(std::vector<std::int64_t>)>& fn) {
  std::vector<std::int64_t> k(n);
  std::function<void(int, std::int64_t)> rec = [&](int pos, std::int64_t top) {
    if (pos == n) {
      fn(k);
      return;
    }
    for (std::int64_t v = top; v >= 1; --v) {
      k[pos] = v;
      rec(pos + 1, v);
    }
  };
  rec(0, k_max);
}

// Forward switchings on up to `limit` graphs of B+ with a 4-cycle, checking
// that the reverse switching restores the graph and that both preserve
// degrees.
bool involution_spot_check(const DegreeSequence& ds, const Guard& guard, int limit,
                           std::int64_t& checks, std::string& failure) {
  if (ds.total() < 2) return true;
  const Thresholds th = thresholds(ds);
  int graphs = 0;
  bool ok = true;
  enumerate_bigraphs(
      ds, ClassFilter::kBPlus,
      [&](const BipartiteGraph& graph) {
        if (graphs >= limit || !ok) return;
        const Classification cls = classify(graph, ds, th);
        if (cls.d == 0) return;
        ++graphs;
        for (const SwitchTuple& t : forward_candidates(graph, cls)) {
          if (forward_violation(graph, t)) continue;
          const BipartiteGraph switched = apply_forward(graph, t);
          ++checks;
          if (apply_reverse(switched, t) != graph ||
              switched.left_degrees() != graph.left_degrees() ||
              switched.right_degrees() != graph.right_degrees()) {
            ok = false;
            failure = "switching round trip failed";
            return;
          }
        }
      },
      guard);
  return ok;
}

std::string describe(const DegreeSequence& ds) {
  std::string s = "r=" + std::to_string(ds.r()) + " k=";
  for (std::size_t j = 0; j < ds.n(); ++j) {
    if (j) s += ",";
    s += std::to_string(ds.k()[j]);
  }
  return s;
}

}  // namespace

std::vector<BatteryInstance> battery(const BatteryOptions& options) {
  std::vector<BatteryInstance> out;
  for (int r : options.r_values) {
    for (int n = 1; n <= options.n_max; ++n) {
      sorted_sequences(n, options.k_max, [&](std::vector<std::int64_t> k) {
        DegreeSequence ds(std::move(k), r);
        if (ds.divisible() && ds.total() >= 2 && admitted(ds, options.guard)) {
          out.push_back({std::move(ds), false});
        }
      });
    }
  }
  if (options.random_instances > 0 && !options.r_values.empty() && options.k_max >= 1) {
    Rng rng(options.seed);
    int made = 0;
    std::int64_t attempts = 0;
    while (made < options.random_instances && attempts < 1'000'000) {
      ++attempts;
      const int r = options.r_values[rng.below(options.r_values.size())];
      if (options.random_n_max < r) continue;
      const int n = r + static_cast<int>(rng.below(options.random_n_max - r + 1));
      std::vector<std::int64_t> k(n);
      for (auto& x : k) x = static_cast<std::int64_t>(rng.below(options.k_max + 1));
      DegreeSequence ds(std::move(k), r);
      if (!ds.divisible() || ds.total() < 2 || !admitted(ds, options.guard)) continue;
      out.push_back({std::move(ds), true});
      ++made;
    }
  }
  return out;
}

InstanceResult verify_instance(const BatteryInstance& instance, const VerifyOptions& options) {
  InstanceResult row(instance);
  const DegreeSequence& ds = instance.ds;
  row.est_linear = estimate_linear(ds);
  row.est_simple = estimate_simple(ds);
  row.est_bigraph = estimate_bigraph(ds);
  row.ratio_predicted = switching_ratio(ds, 1);
  try {
    OracleOptions oracle{options.battery.guard, options.workers};
    row.report = full_report(ds, oracle);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kInvariantViolation) throw;
    row.failure = e.what();
    return row;
  }
  const OracleReport& rep = *row.report;
  const BigInt orderings = factorial(rep.edges);
  BigInt profile_sum = 0;
  for (const BigInt& c : rep.cd_profile) profile_sum += c;
  row.step1 = orderings * rep.count_h == rep.count_b0;
  row.partition = profile_sum == rep.count_bplus;
  row.linear = orderings * rep.count_l == rep.cd_profile[0];
  if (rep.cd_profile.size() > 1 && rep.cd_profile[0] > 0) {
    row.ratio_exact = static_cast<double>(Rational(rep.cd_profile[1], rep.cd_profile[0]));
  }
  row.involution = involution_spot_check(ds, options.battery.guard, options.involution_graphs,
                                         row.involution_checks, row.failure);
  if (!row.ok() && row.failure.empty()) row.failure = "identity failed for " + describe(ds);
  return row;
}

VerifyReport run_verification(const VerifyOptions& options) {
  const std::vector<BatteryInstance> instances = battery(options.battery);
  if (instances.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "battery is empty; relax the filters");
  }
  VerifyReport out;
  for (const BatteryInstance& inst : instances) {
    out.rows.push_back(verify_instance(inst, options));
    out.identities_ok = out.identities_ok && out.rows.back().ok();
  }
  return out;
}

Json to_json(const InstanceResult& row, bool ratio_check) {
  Json j = to_json(row.instance.ds);
  j["random"] = row.instance.random;
  if (row.report) {
    j["count_b"] = row.report->count_b.str();
    j["count_h"] = row.report->count_h.str();
    j["count_l"] = row.report->count_l.str();
  }
  auto compare = [&](const Estimate& est, const BigInt* exact) {
    Json c{{"estimate", est.value}, {"error_scale", est.error_scale}};
    if (exact) {
      c["exact"] = exact->str();
      const double e = static_cast<double>(*exact);
      c["ratio"] = e > 0 ? Json(est.value / e) : Json(nullptr);
    }
    return c;
  };
  const OracleReport* rep = row.report ? &*row.report : nullptr;
  j["linear"] = compare(row.est_linear, rep ? &rep->count_l : nullptr);
  j["simple"] = compare(row.est_simple, rep ? &rep->count_h : nullptr);
  j["bigraph"] = compare(row.est_bigraph, rep ? &rep->count_b : nullptr);
  j["identities"] = {{"step1", row.step1},
                     {"partition", row.partition},
                     {"linear", row.linear},
                     {"involution", row.involution},
                     {"involution_checks", row.involution_checks}};
  if (ratio_check) {
    Json rc{{"predicted", row.ratio_predicted}};
    if (rep && rep->cd_profile.size() > 1) {
      rc["c0"] = rep->cd_profile[0].str();
      rc["c1"] = rep->cd_profile[1].str();
    }
    rc["exact"] = row.ratio_exact ? Json(*row.ratio_exact) : Json(nullptr);
    j["ratio_check"] = rc;
  }
  if (!row.failure.empty()) j["failure"] = row.failure;
  return j;
}

Json to_json(const VerifyReport& report, bool ratio_check) {
  Json rows = Json::array();
  for (const InstanceResult& row : report.rows) rows.push_back(to_json(row, ratio_check));
  return Json{{"instances", report.rows.size()},
              {"identities_ok", report.identities_ok},
              {"rows", rows}};
}

}  // namespace linhyper
