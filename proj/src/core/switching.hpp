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

// Switchings that remove one 4-cycle, their reversals, and the random
// generators built on the pairing model.

#ifndef LINHYPER_CORE_SWITCHING_HPP_
#define LINHYPER_CORE_SWITCHING_HPP_

#include <cstdint>
#include <random>
#include <vector>

#include "bigraph.hpp"
#include "degree_model.hpp"

namespace linhyper {

// Left entries index v_1..v_n, right entries e_1..e_m (0-based).
struct SwitchTuple {
  int u1, u2, w1, w2;
  int f1, f2, g1, g2;

  friend bool operator==(const SwitchTuple&, const SwitchTuple&) = default;
};

// Removes u1f1, u2f2, w1g1, w2g2 and adds u1g1, u2g2, w1f1, w2f2.
// Throws Error(kNotASwitching) naming the first violated requirement.
BipartiteGraph apply_forward(const BipartiteGraph& graph, const SwitchTuple& t);
// The inverse operation, starting from u1g1, u2g2, u1f2, u2f1, w1f1, w2f2.
BipartiteGraph apply_reverse(const BipartiteGraph& graph, const SwitchTuple& t);

// Null when t is a valid forward (reverse) switching of graph, otherwise
// the reason it is not.
const char* forward_violation(const BipartiteGraph& graph, const SwitchTuple& t);
const char* reverse_violation(const BipartiteGraph& graph, const SwitchTuple& t);

// Tuples with a 4-cycle on {u1,u2} x {f1,f2}, edges w1g1 and w2g2, and
// neither g1 nor g2 on a 4-cycle. Some of them may still fail
// forward_violation because an added edge already exists.
// Throws Error(kNoFourCycle) when cls.d == 0.
std::vector<SwitchTuple> forward_candidates(const BipartiteGraph& graph,
                                            const Classification& cls);

enum class Condition { kI, kII, kIII, kIPrime, kIIPrime };

const char* condition_name(Condition c);

struct LegalityVerdict {
  bool legal = false;
  std::vector<Condition> conditions;
  // Membership of the switched graph in C_{d-1} (forward) or C_d (reverse).
  bool ground_truth = false;
};

// graph must lie in B+ with d >= 1 (forward) or in B+ (reverse); otherwise
// Error(kPreconditionFailed).
LegalityVerdict check_forward(const BipartiteGraph& graph, const DegreeSequence& ds,
                              const SwitchTuple& t);
LegalityVerdict check_forward(const BipartiteGraph& graph, const DegreeSequence& ds,
                              const Classification& cls, const SwitchTuple& t);
LegalityVerdict check_reverse(const BipartiteGraph& graph, const DegreeSequence& ds,
                              const SwitchTuple& t);
LegalityVerdict check_reverse(const BipartiteGraph& graph, const DegreeSequence& ds,
                              const Classification& cls, const SwitchTuple& t);

// Seedable stream; substream(i) is an independent stream derived from
// (seed, i) so that parallel work replays identically.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t seed() const noexcept { return seed_; }
  Rng substream(std::uint64_t index) const;
  std::mt19937_64& engine() noexcept { return engine_; }
  // Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound);

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

struct PairingResult {
  BipartiteGraph graph;
  std::int64_t rejections = 0;
};

// Uniform element of B_r(k) via the pairing model with rejection of
// multi-edges. Throws Error(kRetryLimitExceeded) after max_retries
// rejections.
PairingResult pairing_sample(const DegreeSequence& ds, Rng& rng,
                             std::int64_t max_retries = 1'000'000);

struct SwitchSample {
  BipartiteGraph graph;
  std::int64_t steps = 0;
  // Pairing draws thrown away: multi-edges, outside B+, or stuck with no
  // legal switching.
  std::int64_t rejections = 0;
  // 4-cycle count of the accepted pairing draw and after each switching.
  std::vector<std::int64_t> d_trajectory;
};

// Graph with no 4-cycle, reached from a pairing draw in B+ by random legal
// switchings. Its law is close to, but not exactly, uniform on C_0.
// Throws Error(kStepLimit) once max_steps switchings have been applied
// without reaching d = 0.
SwitchSample sample_no4cycle(const DegreeSequence& ds, Rng& rng, std::int64_t max_steps = 100'000,
                             std::int64_t max_retries = 1'000'000);

struct GirthEstimate {
  double p_hat = 0.0;
  // 95% normal-approximation half-width.
  double ci_halfwidth = 0.0;
  std::int64_t trials = 0;
  std::int64_t rejections = 0;
  double predicted = 0.0;
};

// Fraction of pairing draws without a 4-cycle. Trials are split into
// contiguous blocks, block w using rng.substream(w).
GirthEstimate monte_carlo_girth(const DegreeSequence& ds, const Rng& rng, std::int64_t trials,
                                unsigned workers = 1, std::int64_t max_retries = 1'000'000);

bool has_four_cycle(const BipartiteGraph& graph);

}  // namespace linhyper

#endif  // LINHYPER_CORE_SWITCHING_HPP_
