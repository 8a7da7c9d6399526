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

// C interface to linhyper. Objects are opaque handles released with the
// matching *_free function. Every call returns an lh_status; on failure
// lh_last_error() describes the problem for the calling thread. Strings
// returned through char** are JSON documents owned by the caller and
// released with lh_string_free.

#ifndef LINHYPER_LINHYPER_H_
#define LINHYPER_LINHYPER_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define LH_API __declspec(dllexport)
#else
#define LH_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lh_status {
  LH_OK = 0,
  LH_ERR_NEGATIVE_DEGREE,
  LH_ERR_INVALID_R,
  LH_ERR_NOT_DIVISIBLE,
  LH_ERR_DEGENERATE_M,
  LH_ERR_TOO_LARGE,
  LH_ERR_WRONG_RIGHT_DEGREE,
  LH_ERR_LOOP_PRESENT,
  LH_ERR_NON_CONFORMING,
  LH_ERR_NOT_A_SWITCHING,
  LH_ERR_NO_FOUR_CYCLE,
  LH_ERR_RETRY_LIMIT_EXCEEDED,
  LH_ERR_STEP_LIMIT,
  LH_ERR_PRECONDITION_FAILED,
  LH_ERR_INVARIANT_VIOLATION,
  LH_ERR_INVALID_ARGUMENT,
  LH_ERR_INTERNAL
} lh_status;

typedef struct lh_degseq lh_degseq;
typedef struct lh_bigraph lh_bigraph;

LH_API const char* lh_status_name(lh_status status);
LH_API const char* lh_last_error(void);
LH_API void lh_string_free(char* s);

// Degree sequences. JSON form: {"r": 3, "k": [1, 1, 1]}.
LH_API lh_status lh_degseq_new(const int64_t* k, size_t n, int r, lh_degseq** out);
LH_API lh_status lh_degseq_from_json(const char* json, lh_degseq** out);
LH_API void lh_degseq_free(lh_degseq* ds);
// Degree sequence with M, k_max, the moments M_2..M_4 and, when M >= 2,
// the thresholds N2, Q1, Q2 and the sparsity indicator.
LH_API lh_status lh_degseq_describe_json(const lh_degseq* ds, char** out);

// Enumeration guard. A positive max_space replaces the other two limits by
// a bound on the number of pairings per conforming graph class.
typedef struct lh_guard {
  int64_t max_total_degree;
  int64_t max_vertices;
  double max_space;
} lh_guard;

LH_API void lh_guard_default(lh_guard* guard);

// Exact counts |B|, |B0|, |B+|, |H|, |L| and the |C_d| profile, as decimal
// strings.
LH_API lh_status lh_exact_json(const lh_degseq* ds, const lh_guard* guard, unsigned workers,
                               char** out);

typedef enum lh_estimate_kind {
  LH_ESTIMATE_LINEAR = 0,
  LH_ESTIMATE_SIMPLE,
  LH_ESTIMATE_BIGRAPH,
  LH_ESTIMATE_GIRTH6
} lh_estimate_kind;

typedef struct lh_estimate {
  double log_value;
  double value;  // +inf when exp(log_value) overflows
  double leading_log;
  double error_scale;
} lh_estimate;

LH_API const char* lh_estimate_name(lh_estimate_kind kind);
LH_API lh_status lh_estimate_eval(const lh_degseq* ds, lh_estimate_kind kind, lh_estimate* out);
// Adds the named correction terms.
LH_API lh_status lh_estimate_json(const lh_degseq* ds, lh_estimate_kind kind, char** out);

// Bipartite graphs. JSON form: {"n_left": n, "n_right": m, "edges": [[j, i], ...]}
// with 1-based indices. Hypergraphs: {"n": n, "edges": [[v, ...], ...]}.
LH_API lh_status lh_bigraph_from_json(const char* json, lh_bigraph** out);
LH_API lh_status lh_bigraph_from_hypergraph_json(const char* json, lh_bigraph** out);
LH_API void lh_bigraph_free(lh_bigraph* graph);
LH_API lh_status lh_bigraph_json(const lh_bigraph* graph, char** out);

// Classification against the graph's own left degrees. r = 0 takes r from
// the right degrees, which must then all agree. The result also carries the
// corresponding hypergraph and its link properties.
LH_API lh_status lh_classify_json(const lh_bigraph* graph, int r, char** out);

typedef enum lh_sample_mode {
  LH_SAMPLE_PAIRING = 0,  // uniform on B_r(k)
  LH_SAMPLE_NO4CYCLE      // switched down to no 4-cycle, approximately uniform
} lh_sample_mode;

// Graph JSON under "graph" and {"seed","steps","rejections","d_trajectory"}
// under "metadata".
LH_API lh_status lh_sample_json(const lh_degseq* ds, uint64_t seed, lh_sample_mode mode,
                                int64_t max_steps, char** out);

typedef struct lh_girth {
  double p_hat;
  double ci_halfwidth;
  double predicted;
  int64_t trials;
  int64_t rejections;
} lh_girth;

LH_API lh_status lh_girth_estimate(const lh_degseq* ds, uint64_t seed, int64_t trials,
                                   unsigned workers, lh_girth* out);

typedef struct lh_verify_options {
  int n_max;
  int k_max;
  const int* r_values;
  size_t r_count;
  int random_instances;
  int random_n_max;
  uint64_t seed;
  lh_guard guard;
  unsigned workers;
  int ratio_check;
} lh_verify_options;

LH_API void lh_verify_options_default(lh_verify_options* options);
// *identities_ok is set to 1 when every hard identity held.
LH_API lh_status lh_verify_json(const lh_verify_options* options, char** out,
                                int* identities_ok);

#ifdef __cplusplus
}  // extern "C"
#endif

#endif  // LINHYPER_LINHYPER_H_
