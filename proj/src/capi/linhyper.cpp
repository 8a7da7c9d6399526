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

#include "linhyper/linhyper.h"

#include <algorithm>
#include <cstring>
#include <exception>
#include <limits>
#include <string>

#include "asymptotics.hpp"
#include "bigraph.hpp"
#include "degree_model.hpp"
#include "error.hpp"
#include "exact_oracle.hpp"
#include "serialize.hpp"
#include "switching.hpp"
#include "verify.hpp"

struct lh_degseq {
  linhyper::DegreeSequence ds;
};

struct lh_bigraph {
  linhyper::BipartiteGraph graph;
};

namespace {

using linhyper::ErrorCode;

thread_local std::string last_error;

lh_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNegativeDegree: return LH_ERR_NEGATIVE_DEGREE;
    case ErrorCode::kInvalidR: return LH_ERR_INVALID_R;
    case ErrorCode::kNotDivisible: return LH_ERR_NOT_DIVISIBLE;
    case ErrorCode::kDegenerateM: return LH_ERR_DEGENERATE_M;
    case ErrorCode::kTooLarge: return LH_ERR_TOO_LARGE;
    case ErrorCode::kWrongRightDegree: return LH_ERR_WRONG_RIGHT_DEGREE;
    case ErrorCode::kLoopPresent: return LH_ERR_LOOP_PRESENT;
    case ErrorCode::kNonConforming: return LH_ERR_NON_CONFORMING;
    case ErrorCode::kNotASwitching: return LH_ERR_NOT_A_SWITCHING;
    case ErrorCode::kNoFourCycle: return LH_ERR_NO_FOUR_CYCLE;
    case ErrorCode::kRetryLimitExceeded: return LH_ERR_RETRY_LIMIT_EXCEEDED;
    case ErrorCode::kStepLimit: return LH_ERR_STEP_LIMIT;
    case ErrorCode::kPreconditionFailed: return LH_ERR_PRECONDITION_FAILED;
    case ErrorCode::kInvariantViolation: return LH_ERR_INVARIANT_VIOLATION;
    case ErrorCode::kInvalidArgument: return LH_ERR_INVALID_ARGUMENT;
  }
  return LH_ERR_INTERNAL;
}

template <typename Fn>
lh_status guarded(Fn&& fn) {
  try {
    fn();
    last_error.clear();
    return LH_OK;
  } catch (const linhyper::Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::exception& e) {
    last_error = e.what();
    return LH_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown failure";
    return LH_ERR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) {
    throw linhyper::Error(ErrorCode::kInvalidArgument, std::string(what) + " is null");
  }
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

char* dump(const linhyper::Json& j) { return dup_string(j.dump()); }

linhyper::Guard to_guard(const lh_guard* g) {
  linhyper::Guard guard;
  if (g == nullptr) return guard;
  guard.max_total_degree = g->max_total_degree;
  guard.max_vertices = static_cast<std::size_t>(std::max<int64_t>(0, g->max_vertices));
  if (g->max_space > 0) guard.max_space = g->max_space;
  return guard;
}

linhyper::Estimate evaluate(const linhyper::DegreeSequence& ds, lh_estimate_kind kind) {
  switch (kind) {
    case LH_ESTIMATE_LINEAR: return linhyper::estimate_linear(ds);
    case LH_ESTIMATE_SIMPLE: return linhyper::estimate_simple(ds);
    case LH_ESTIMATE_BIGRAPH: return linhyper::estimate_bigraph(ds);
    case LH_ESTIMATE_GIRTH6: return linhyper::girth6_probability(ds);
  }
  throw linhyper::Error(ErrorCode::kInvalidArgument, "unknown estimate kind");
}

}  // namespace

extern "C" {

const char* lh_status_name(lh_status status) {
  switch (status) {
    case LH_OK: return "Ok";
    case LH_ERR_INTERNAL: return "Internal";
    default: break;
  }
  const int index = static_cast<int>(status) - 1;
  if (index < 0 || index > static_cast<int>(ErrorCode::kInvalidArgument)) return "Unknown";
  static thread_local std::string name;
  name = std::string(linhyper::to_string(static_cast<ErrorCode>(index)));
  return name.c_str();
}

const char* lh_last_error(void) { return last_error.c_str(); }

void lh_string_free(char* s) { delete[] s; }

lh_status lh_degseq_new(const int64_t* k, size_t n, int r, lh_degseq** out) {
  return guarded([&] {
    require(out, "out");
    if (n > 0) require(k, "k");
    *out = new lh_degseq{linhyper::DegreeSequence(std::vector<std::int64_t>(k, k + n), r)};
  });
}

lh_status lh_degseq_from_json(const char* json, lh_degseq** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    *out = new lh_degseq{linhyper::degree_sequence_from_json(linhyper::parse_json(json))};
  });
}

void lh_degseq_free(lh_degseq* ds) { delete ds; }

lh_status lh_degseq_describe_json(const lh_degseq* ds, char** out) {
  return guarded([&] {
    require(ds, "ds");
    require(out, "out");
    linhyper::Json j = linhyper::to_json(ds->ds);
    j["n"] = ds->ds.n();
    j["M"] = ds->ds.total();
    j["k_max"] = ds->ds.k_max();
    for (int t = 2; t <= 4; ++t) j["M" + std::to_string(t)] = linhyper::moment(ds->ds, t).str();
    j["divisible"] = ds->ds.divisible();
    if (ds->ds.total() >= 2) j["thresholds"] = linhyper::to_json(linhyper::thresholds(ds->ds));
    *out = dump(j);
  });
}

void lh_guard_default(lh_guard* guard) {
  if (guard == nullptr) return;
  const linhyper::Guard g;
  guard->max_total_degree = g.max_total_degree;
  guard->max_vertices = static_cast<int64_t>(g.max_vertices);
  guard->max_space = 0.0;
}

lh_status lh_exact_json(const lh_degseq* ds, const lh_guard* guard, unsigned workers,
                        char** out) {
  return guarded([&] {
    require(ds, "ds");
    require(out, "out");
    linhyper::OracleOptions options{to_guard(guard), workers};
    linhyper::Json j = linhyper::to_json(ds->ds);
    j["report"] = linhyper::to_json(linhyper::full_report(ds->ds, options));
    *out = dump(j);
  });
}

const char* lh_estimate_name(lh_estimate_kind kind) {
  switch (kind) {
    case LH_ESTIMATE_LINEAR: return "linear";
    case LH_ESTIMATE_SIMPLE: return "simple";
    case LH_ESTIMATE_BIGRAPH: return "bigraph";
    case LH_ESTIMATE_GIRTH6: return "girth6";
  }
  return "unknown";
}

lh_status lh_estimate_eval(const lh_degseq* ds, lh_estimate_kind kind, lh_estimate* out) {
  return guarded([&] {
    require(ds, "ds");
    require(out, "out");
    const linhyper::Estimate est = evaluate(ds->ds, kind);
    *out = lh_estimate{est.log_value, est.value, est.leading_log, est.error_scale};
  });
}

lh_status lh_estimate_json(const lh_degseq* ds, lh_estimate_kind kind, char** out) {
  return guarded([&] {
    require(ds, "ds");
    require(out, "out");
    *out = dump(linhyper::to_json(evaluate(ds->ds, kind)));
  });
}

lh_status lh_bigraph_from_json(const char* json, lh_bigraph** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    *out = new lh_bigraph{linhyper::bigraph_from_json(linhyper::parse_json(json))};
  });
}

lh_status lh_bigraph_from_hypergraph_json(const char* json, lh_bigraph** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    *out = new lh_bigraph{
        linhyper::from_hypergraph(linhyper::hypergraph_from_json(linhyper::parse_json(json)))};
  });
}

void lh_bigraph_free(lh_bigraph* graph) { delete graph; }

lh_status lh_bigraph_json(const lh_bigraph* graph, char** out) {
  return guarded([&] {
    require(graph, "graph");
    require(out, "out");
    *out = dump(linhyper::to_json(graph->graph));
  });
}

lh_status lh_classify_json(const lh_bigraph* graph, int r, char** out) {
  return guarded([&] {
    require(graph, "graph");
    require(out, "out");
    const linhyper::BipartiteGraph& g = graph->graph;
    if (r == 0) {
      const auto right = g.right_degrees();
      if (right.empty()) {
        throw linhyper::Error(ErrorCode::kInvalidArgument,
                              "cannot infer r from a graph without right vertices");
      }
      for (std::int64_t x : right) {
        if (x != right.front()) {
          throw linhyper::Error(ErrorCode::kWrongRightDegree,
                                "right degrees differ; pass r explicitly");
        }
      }
      r = static_cast<int>(right.front());
    }
    // Converting first reports a wrong r as such rather than as a mismatch.
    const linhyper::Hypergraph h = linhyper::to_hypergraph(g, r);
    const linhyper::DegreeSequence ds(g.left_degrees(), r);
    linhyper::Json j;
    j["degree_sequence"] = linhyper::to_json(ds);
    j["classification"] = linhyper::to_json(linhyper::classify(g, ds));
    j["hypergraph"] = linhyper::to_json(h);
    j["hyper_properties"] = linhyper::to_json(linhyper::hyper_properties(h));
    *out = dump(j);
  });
}

lh_status lh_sample_json(const lh_degseq* ds, uint64_t seed, lh_sample_mode mode,
                         int64_t max_steps, char** out) {
  return guarded([&] {
    require(ds, "ds");
    require(out, "out");
    linhyper::Rng rng(seed);
    linhyper::SwitchSample sample;
    if (mode == LH_SAMPLE_PAIRING) {
      linhyper::PairingResult draw = linhyper::pairing_sample(ds->ds, rng);
      sample.graph = std::move(draw.graph);
      sample.rejections = draw.rejections;
      sample.d_trajectory.push_back(
          static_cast<std::int64_t>(linhyper::four_cycles(sample.graph).size()));
    } else if (mode == LH_SAMPLE_NO4CYCLE) {
      sample = linhyper::sample_no4cycle(ds->ds, rng, max_steps);
    } else {
      throw linhyper::Error(ErrorCode::kInvalidArgument, "unknown sample mode");
    }
    linhyper::Json j = linhyper::to_json(sample, seed);
    j["metadata"]["mode"] = mode == LH_SAMPLE_PAIRING ? "pairing" : "no4cycle";
    *out = dump(j);
  });
}

lh_status lh_girth_estimate(const lh_degseq* ds, uint64_t seed, int64_t trials,
                            unsigned workers, lh_girth* out) {
  return guarded([&] {
    require(ds, "ds");
    require(out, "out");
    const linhyper::GirthEstimate g =
        linhyper::monte_carlo_girth(ds->ds, linhyper::Rng(seed), trials, workers);
    *out = lh_girth{g.p_hat, g.ci_halfwidth, g.predicted, g.trials, g.rejections};
  });
}

void lh_verify_options_default(lh_verify_options* options) {
  if (options == nullptr) return;
  static const int kDefaultR[] = {3, 4};
  const linhyper::BatteryOptions b;
  options->n_max = b.n_max;
  options->k_max = b.k_max;
  options->r_values = kDefaultR;
  options->r_count = 2;
  options->random_instances = b.random_instances;
  options->random_n_max = b.random_n_max;
  options->seed = b.seed;
  options->guard.max_total_degree = b.guard.max_total_degree;
  options->guard.max_vertices = static_cast<int64_t>(b.guard.max_vertices);
  options->guard.max_space = 0.0;
  options->workers = 1;
  options->ratio_check = 0;
}

lh_status lh_verify_json(const lh_verify_options* options, char** out, int* identities_ok) {
  return guarded([&] {
    require(options, "options");
    require(out, "out");
    if (options->r_count > 0) require(options->r_values, "r_values");
    linhyper::VerifyOptions v;
    v.battery.n_max = options->n_max;
    v.battery.k_max = options->k_max;
    v.battery.r_values.assign(options->r_values, options->r_values + options->r_count);
    v.battery.random_instances = options->random_instances;
    v.battery.random_n_max = options->random_n_max;
    v.battery.seed = options->seed;
    v.battery.guard = to_guard(&options->guard);
    v.workers = options->workers;
    for (int r : v.battery.r_values) {
      if (r < 2) throw linhyper::Error(ErrorCode::kInvalidR, "r must be at least 2");
    }
    const linhyper::VerifyReport report = linhyper::run_verification(v);
    if (identities_ok != nullptr) *identities_ok = report.identities_ok ? 1 : 0;
    *out = dump(linhyper::to_json(report, options->ratio_check != 0));
  });
}

}  // extern "C"
