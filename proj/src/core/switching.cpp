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

#include "switching.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <string>
#include <thread>

#include "asymptotics.hpp"
#include "error.hpp"

namespace linhyper {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

const char* shape_violation(const BipartiteGraph& graph, const SwitchTuple& t) {
  const int lefts[] = {t.u1, t.u2, t.w1, t.w2};
  const int rights[] = {t.f1, t.f2, t.g1, t.g2};
  for (int x : lefts) {
    if (x < 0 || x >= graph.n_left()) return "left vertex out of range";
  }
  for (int y : rights) {
    if (y < 0 || y >= graph.n_right()) return "right vertex out of range";
  }
  for (int a = 0; a < 4; ++a) {
    for (int b = a + 1; b < 4; ++b) {
      if (lefts[a] == lefts[b] || rights[a] == rights[b]) return "vertices are not distinct";
    }
  }
  return nullptr;
}

// dist(left x, right y) <= 3
bool within_three(const BipartiteGraph& graph, int x, int y) {
  if (graph.has_edge(x, y)) return true;
  for (int a : graph.right_neighbors(x)) {
    for (int b : graph.left_neighbors(y)) {
      if (graph.has_edge(b, a)) return true;
    }
  }
  return false;
}

// dist(right a, right b) == 2
bool share_left(const BipartiteGraph& graph, int a, int b) {
  const auto& na = graph.left_neighbors(a);
  const auto& nb = graph.left_neighbors(b);
  auto i = na.begin();
  auto j = nb.begin();
  while (i != na.end() && j != nb.end()) {
    if (*i == *j) return true;
    if (*i < *j) {
      ++i;
    } else {
      ++j;
    }
  }
  return false;
}

struct CycleMembers {
  std::vector<char> left;
  std::vector<char> right;
};

CycleMembers members(const BipartiteGraph& graph, const Classification& cls) {
  CycleMembers out{std::vector<char>(graph.n_left(), 0), std::vector<char>(graph.n_right(), 0)};
  for (const FourCycle& c : cls.four_cycles) {
    out.left[c.left[0]] = out.left[c.left[1]] = 1;
    out.right[c.right[0]] = out.right[c.right[1]] = 1;
  }
  return out;
}

void require_bplus(const Classification& cls, bool forward) {
  if (!cls.in_bplus) {
    throw Error(ErrorCode::kPreconditionFailed, "graph is not in B+");
  }
  if (forward && cls.d < 1) {
    throw Error(ErrorCode::kPreconditionFailed, "graph has no 4-cycle");
  }
  if (!forward && cls.d + 1 > cls.n2) {
    throw Error(ErrorCode::kPreconditionFailed, "d + 1 exceeds N2");
  }
}

bool lands_in_forward(const BipartiteGraph& switched, const DegreeSequence& ds,
                      const Thresholds& th, std::int64_t d) {
  const Classification after = classify(switched, ds, th);
  return after.in_bplus && after.d == d - 1;
}


}  // namespace

const char* forward_violation(const BipartiteGraph& graph, const SwitchTuple& t) {
  if (const char* why = shape_violation(graph, t)) return why;
  if (!graph.has_edge(t.u1, t.f1) || !graph.has_edge(t.u1, t.f2) || !graph.has_edge(t.u2, t.f1) ||
      !graph.has_edge(t.u2, t.f2)) {
    return "no 4-cycle on {u1,u2} x {f1,f2}";
  }
  if (!graph.has_edge(t.w1, t.g1) || !graph.has_edge(t.w2, t.g2)) {
    return "w1g1 or w2g2 is not an edge";
  }
  if (graph.has_edge(t.u1, t.g1) || graph.has_edge(t.u2, t.g2) || graph.has_edge(t.w1, t.f1) ||
      graph.has_edge(t.w2, t.f2)) {
    return "an edge to be added is already present";
  }
  return nullptr;
}

const char* reverse_violation(const BipartiteGraph& graph, const SwitchTuple& t) {
  if (const char* why = shape_violation(graph, t)) return why;
  if (!graph.has_edge(t.u1, t.g1) || !graph.has_edge(t.u2, t.g2) || !graph.has_edge(t.u1, t.f2) ||
      !graph.has_edge(t.u2, t.f1) || !graph.has_edge(t.w1, t.f1) || !graph.has_edge(t.w2, t.f2)) {
    return "a required edge is missing";
  }
  if (graph.has_edge(t.u1, t.f1) || graph.has_edge(t.u2, t.f2) || graph.has_edge(t.w1, t.g1) ||
      graph.has_edge(t.w2, t.g2)) {
    return "an edge to be added is already present";
  }
  return nullptr;
}

BipartiteGraph apply_forward(const BipartiteGraph& graph, const SwitchTuple& t) {
  if (const char* why = forward_violation(graph, t)) throw Error(ErrorCode::kNotASwitching, why);
  BipartiteGraph out = graph;
  out.remove_edge(t.u1, t.f1);
  out.remove_edge(t.u2, t.f2);
  out.remove_edge(t.w1, t.g1);
  out.remove_edge(t.w2, t.g2);
  out.add_edge(t.u1, t.g1);
  out.add_edge(t.u2, t.g2);
  out.add_edge(t.w1, t.f1);
  out.add_edge(t.w2, t.f2);
  return out;
}

BipartiteGraph apply_reverse(const BipartiteGraph& graph, const SwitchTuple& t) {
  if (const char* why = reverse_violation(graph, t)) throw Error(ErrorCode::kNotASwitching, why);
  BipartiteGraph out = graph;
  out.remove_edge(t.u1, t.g1);
  out.remove_edge(t.u2, t.g2);
  out.remove_edge(t.w1, t.f1);
  out.remove_edge(t.w2, t.f2);
  out.add_edge(t.u1, t.f1);
  out.add_edge(t.u2, t.f2);
  out.add_edge(t.w1, t.g1);
  out.add_edge(t.w2, t.g2);
  return out;
}

std::vector<SwitchTuple> forward_candidates(const BipartiteGraph& graph,
                                            const Classification& cls) {
  if (cls.d == 0) throw Error(ErrorCode::kNoFourCycle, "graph has no 4-cycle");
  const CycleMembers on_cycle = members(graph, cls);
  std::vector<Edge> free_edges;
  for (const Edge& e : graph.edges()) {
    if (!on_cycle.right[e.second]) free_edges.push_back(e);
  }
  std::vector<SwitchTuple> out;
  for (const FourCycle& c : cls.four_cycles) {
    for (int su = 0; su < 2; ++su) {
      for (int sf = 0; sf < 2; ++sf) {
        const int u1 = c.left[su], u2 = c.left[1 - su];
        const int f1 = c.right[sf], f2 = c.right[1 - sf];
        for (const auto& [w1, g1] : free_edges) {
          if (w1 == u1 || w1 == u2 || g1 == f1 || g1 == f2) continue;
          for (const auto& [w2, g2] : free_edges) {
            if (w2 == u1 || w2 == u2 || w2 == w1 || g2 == f1 || g2 == f2 || g2 == g1) continue;
            out.push_back({u1, u2, w1, w2, f1, f2, g1, g2});
          }
        }
      }
    }
  }
  return out;
}

const char* condition_name(Condition c) {
  switch (c) {
    case Condition::kI: return "I";
    case Condition::kII: return "II";
    case Condition::kIII: return "III";
    case Condition::kIPrime: return "I'";
    case Condition::kIIPrime: return "II'";
  }
  return "?";
}

LegalityVerdict check_forward(const BipartiteGraph& graph, const DegreeSequence& ds,
                              const SwitchTuple& t) {
  return check_forward(graph, ds, classify(graph, ds), t);
}

LegalityVerdict check_forward(const BipartiteGraph& graph, const DegreeSequence& ds,
                              const Classification& cls, const SwitchTuple& t) {
  require_bplus(cls, true);
  const BipartiteGraph switched = apply_forward(graph, t);
  LegalityVerdict v;
  v.ground_truth = lands_in_forward(switched, ds, thresholds(ds), cls.d);
  v.legal = v.ground_truth;

  const CycleMembers on_cycle = members(graph, cls);
  if (on_cycle.right[t.g1] || on_cycle.right[t.g2]) v.conditions.push_back(Condition::kI);
  if (within_three(graph, t.u1, t.g1) || within_three(graph, t.w1, t.f1) ||
      within_three(graph, t.u2, t.g2) || within_three(graph, t.w2, t.f2)) {
    v.conditions.push_back(Condition::kII);
  }
  if (share_left(graph, t.g1, t.g2)) v.conditions.push_back(Condition::kIII);
  return v;
}

LegalityVerdict check_reverse(const BipartiteGraph& graph, const DegreeSequence& ds,
                              const SwitchTuple& t) {
  return check_reverse(graph, ds, classify(graph, ds), t);
}

LegalityVerdict check_reverse(const BipartiteGraph& graph, const DegreeSequence& ds,
                              const Classification& cls, const SwitchTuple& t) {
  require_bplus(cls, false);
  const BipartiteGraph switched = apply_reverse(graph, t);
  LegalityVerdict v;
  const Classification after = classify(switched, ds);
  v.ground_truth = after.in_bplus && after.d == cls.d + 1;
  v.legal = v.ground_truth;

  const CycleMembers on_cycle = members(graph, cls);
  if (on_cycle.left[t.u1] || on_cycle.left[t.u2] || on_cycle.right[t.f1] ||
      on_cycle.right[t.f2] || on_cycle.right[t.g1] || on_cycle.right[t.g2]) {
    v.conditions.push_back(Condition::kIPrime);
  }
  if (within_three(graph, t.u1, t.f1) || within_three(graph, t.w1, t.g1) ||
      within_three(graph, t.u2, t.f2) || within_three(graph, t.w2, t.g2)) {
    v.conditions.push_back(Condition::kIIPrime);
  }
  return v;
}

Rng::Rng(std::uint64_t seed) : seed_(seed), engine_(splitmix64(seed)) {}

Rng Rng::substream(std::uint64_t index) const {
  return Rng(splitmix64(seed_ ^ splitmix64(index + 0xD1B54A32D192ED03ULL)));
}

std::uint64_t Rng::below(std::uint64_t bound) {
  return std::uniform_int_distribution<std::uint64_t>(0, bound - 1)(engine_);
}

PairingResult pairing_sample(const DegreeSequence& ds, Rng& rng, std::int64_t max_retries) {
  const std::int64_t m = edge_count(ds);
  if (ds.total() < 1) throw Error(ErrorCode::kPreconditionFailed, "pairing needs M >= 1");
  std::vector<int> left_points;
  left_points.reserve(static_cast<std::size_t>(ds.total()));
  for (std::size_t j = 0; j < ds.n(); ++j) {
    left_points.insert(left_points.end(), static_cast<std::size_t>(ds.k()[j]), static_cast<int>(j));
  }
  std::vector<int> right_points;
  right_points.reserve(left_points.size());
  for (int i = 0; i < m; ++i) right_points.insert(right_points.end(), ds.r(), i);

  PairingResult out;
  for (;;) {
    for (std::size_t i = right_points.size(); i > 1; --i) {
      std::swap(right_points[i - 1], right_points[rng.below(i)]);
    }
    BipartiteGraph graph(static_cast<int>(ds.n()), static_cast<int>(m));
    bool simple = true;
    for (std::size_t p = 0; p < left_points.size() && simple; ++p) {
      if (graph.has_edge(left_points[p], right_points[p])) {
        simple = false;
      } else {
        graph.add_edge(left_points[p], right_points[p]);
      }
    }
    if (simple) {
      out.graph = std::move(graph);
      return out;
    }
    if (++out.rejections > max_retries) {
      throw Error(ErrorCode::kRetryLimitExceeded,
                  "pairing rejected " + std::to_string(out.rejections) + " times");
    }
  }
}

SwitchSample sample_no4cycle(const DegreeSequence& ds, Rng& rng, std::int64_t max_steps,
                             std::int64_t max_retries) {
  const Thresholds th = thresholds(ds);
  SwitchSample out;
  auto reject = [&] {
    if (++out.rejections > max_retries) {
      throw Error(ErrorCode::kRetryLimitExceeded,
                  "rejected " + std::to_string(out.rejections) + " draws");
    }
  };
  for (;;) {
    PairingResult draw = pairing_sample(ds, rng, max_retries - out.rejections);
    out.rejections += draw.rejections;
    BipartiteGraph graph = std::move(draw.graph);
    Classification cls = classify(graph, ds, th);
    if (!cls.in_bplus) {
      reject();
      continue;
    }
    out.d_trajectory.assign(1, cls.d);
    bool stuck = false;
    while (cls.d > 0) {
      std::vector<SwitchTuple> cands = forward_candidates(graph, cls);
      for (std::size_t i = cands.size(); i > 1; --i) {
        std::swap(cands[i - 1], cands[rng.below(i)]);
      }
      bool moved = false;
      for (const SwitchTuple& t : cands) {
        if (forward_violation(graph, t)) continue;
        BipartiteGraph next = apply_forward(graph, t);
        Classification next_cls = classify(next, ds, th);
        if (next_cls.in_bplus && next_cls.d == cls.d - 1) {
          graph = std::move(next);
          cls = std::move(next_cls);
          moved = true;
          break;
        }
      }
      if (!moved) {
        stuck = true;
        break;
      }
      if (++out.steps > max_steps) {
        throw Error(ErrorCode::kStepLimit,
                    "no 4-cycle-free graph after " + std::to_string(max_steps) + " switchings");
      }
      out.d_trajectory.push_back(cls.d);
    }
    if (stuck) {
      reject();
      continue;
    }
    out.graph = std::move(graph);
    return out;
  }
}

bool has_four_cycle(const BipartiteGraph& graph) {
  std::vector<std::uint64_t> wedges;
  const std::uint64_t m = static_cast<std::uint64_t>(graph.n_right());
  for (int j = 0; j < graph.n_left(); ++j) {
    const auto& nb = graph.right_neighbors(j);
    for (std::size_t a = 0; a < nb.size(); ++a) {
      for (std::size_t b = a + 1; b < nb.size(); ++b) {
        wedges.push_back(static_cast<std::uint64_t>(nb[a]) * m + static_cast<std::uint64_t>(nb[b]));
      }
    }
  }
  std::sort(wedges.begin(), wedges.end());
  return std::adjacent_find(wedges.begin(), wedges.end()) != wedges.end();
}

GirthEstimate monte_carlo_girth(const DegreeSequence& ds, const Rng& rng, std::int64_t trials,
                                unsigned workers, std::int64_t max_retries) {
  if (trials < 1) throw Error(ErrorCode::kPreconditionFailed, "trials must be >= 1");
  edge_count(ds);
  if (workers == 0) workers = 1;
  struct Tally {
    std::int64_t hits = 0;
    std::int64_t rejections = 0;
    std::exception_ptr failure;
  };
  std::vector<Tally> tallies(workers);
  auto run = [&](unsigned w) {
    try {
      Rng local = rng.substream(w);
      const std::int64_t begin = trials * w / workers;
      const std::int64_t end = trials * (w + 1) / workers;
      for (std::int64_t t = begin; t < end; ++t) {
        PairingResult draw = pairing_sample(ds, local, max_retries);
        tallies[w].rejections += draw.rejections;
        if (!has_four_cycle(draw.graph)) ++tallies[w].hits;
      }
    } catch (...) {
      tallies[w].failure = std::current_exception();
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& th : pool) th.join();
  }
  GirthEstimate out;
  std::int64_t hits = 0;
  for (const Tally& t : tallies) {
    if (t.failure) std::rethrow_exception(t.failure);
    hits += t.hits;
    out.rejections += t.rejections;
  }
  out.trials = trials;
  out.p_hat = static_cast<double>(hits) / static_cast<double>(trials);
  out.ci_halfwidth =
      1.96 * std::sqrt(out.p_hat * (1.0 - out.p_hat) / static_cast<double>(trials));
  out.predicted = girth6_probability(ds).value;
  return out;
}

}  // namespace linhyper
