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

#include "exact_oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <thread>

#include <boost/math/special_functions/gamma.hpp>

#include "error.hpp"

namespace linhyper {

namespace {

constexpr std::size_t kMaxLeftVertices = 64;

double log_factorial(std::int64_t n) {
  return boost::math::lgamma(static_cast<double>(n) + 1.0);
}

BigInt factorial(std::int64_t n) {
  BigInt f = 1;
  for (std::int64_t i = 2; i <= n; ++i) f *= i;
  return f;
}

// Calls fn(mask) for every way of picking `need` bits out of `avail`, in
// lexicographic order of the chosen bit positions.
template <class Fn>
void for_each_subset(std::uint64_t avail, int need, Fn&& fn) {
  std::vector<int> bits;
  for (std::uint64_t rest = avail; rest != 0; rest &= rest - 1) {
    bits.push_back(std::countr_zero(rest));
  }
  const int size = static_cast<int>(bits.size());
  if (need < 0 || need > size) return;
  if (need == 0) {
    fn(std::uint64_t{0});
    return;
  }
  std::vector<int> idx(need);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    std::uint64_t mask = 0;
    for (int t : idx) mask |= std::uint64_t{1} << bits[t];
    fn(mask);
    int t = need - 1;
    while (t >= 0 && idx[t] == size - need + t) --t;
    if (t < 0) return;
    ++idx[t];
    for (int u = t + 1; u < need; ++u) idx[u] = idx[u - 1] + 1;
  }
}

// Fills right vertices e_1..e_m in order. Vertices whose residual degree
// equals the number of columns still to fill are forced into the current
// column; a residual above that count prunes the branch.
class ColumnSearch {
 public:
  explicit ColumnSearch(const DegreeSequence& ds)
      : n_(static_cast<int>(ds.n())),
        r_(ds.r()),
        m_(static_cast<int>(ds.total() / ds.r())),
        residual_(ds.k().begin(), ds.k().end()),
        columns_(m_),
        buffers_(m_ + 1) {}

  int columns() const { return m_; }

  void candidates(int col, std::vector<std::uint64_t>& out) const {
    out.clear();
    const std::int64_t left = m_ - col;
    std::uint64_t forced = 0;
    std::uint64_t avail = 0;
    for (int v = 0; v < n_; ++v) {
      const std::int64_t res = residual_[v];
      if (res > left) return;
      if (res == left && res > 0) {
        forced |= std::uint64_t{1} << v;
      } else if (res > 0) {
        avail |= std::uint64_t{1} << v;
      }
    }
    const int need = r_ - std::popcount(forced);
    for_each_subset(avail, need, [&](std::uint64_t mask) { out.push_back(forced | mask); });
  }

  void take(int col, std::uint64_t mask) {
    columns_[col] = mask;
    for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
      --residual_[std::countr_zero(rest)];
    }
  }

  void give(std::uint64_t mask) {
    for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
      ++residual_[std::countr_zero(rest)];
    }
  }

  template <class Leaf>
  void descend(int col, Leaf& leaf) {
    if (col == m_) {
      leaf(std::span<const std::uint64_t>(columns_));
      return;
    }
    auto& cands = buffers_[col];
    candidates(col, cands);
    for (std::size_t idx = 0; idx < cands.size(); ++idx) {
      const std::uint64_t mask = cands[idx];
      take(col, mask);
      descend(col + 1, leaf);
      give(mask);
    }
  }

 private:
  int n_;
  int r_;
  int m_;
  std::vector<std::int64_t> residual_;
  std::vector<std::uint64_t> columns_;
  std::vector<std::vector<std::uint64_t>> buffers_;
};

// Runs `make_leaf(worker)` leaves over the whole search tree, splitting the
// choices for e_1 into contiguous chunks, one per worker.
template <class Leaf>
void sweep(const DegreeSequence& ds, std::vector<Leaf>& leaves) {
  const unsigned workers = static_cast<unsigned>(leaves.size());
  ColumnSearch probe(ds);
  if (probe.columns() == 0) {
    std::vector<std::uint64_t> none;
    leaves[0](std::span<const std::uint64_t>(none));
    return;
  }
  std::vector<std::uint64_t> roots;
  probe.candidates(0, roots);

  auto run = [&](unsigned w) {
    ColumnSearch search(ds);
    const std::size_t begin = roots.size() * w / workers;
    const std::size_t end = roots.size() * (w + 1) / workers;
    for (std::size_t idx = begin; idx < end; ++idx) {
      search.take(0, roots[idx]);
      search.descend(1, leaves[w]);
      search.give(roots[idx]);
    }
  };
  if (workers == 1) {
    run(0);
    return;
  }
  std::vector<std::thread> threads;
  for (unsigned w = 0; w < workers; ++w) threads.emplace_back(run, w);
  for (auto& t : threads) t.join();
}

bool columns_distinct(std::span<const std::uint64_t> columns) {
  for (std::size_t a = 0; a < columns.size(); ++a) {
    for (std::size_t b = a + 1; b < columns.size(); ++b) {
      if (columns[a] == columns[b]) return false;
    }
  }
  return true;
}

bool columns_four_cycle_free(std::span<const std::uint64_t> columns) {
  for (std::size_t a = 0; a < columns.size(); ++a) {
    for (std::size_t b = a + 1; b < columns.size(); ++b) {
      if (std::popcount(columns[a] & columns[b]) >= 2) return false;
    }
  }
  return true;
}

void require_enumerable(const DegreeSequence& ds, const Guard& guard) {
  check_guard(ds, guard);
  if (ds.n() > kMaxLeftVertices) {
    throw Error(ErrorCode::kTooLarge, "at most 64 left vertices are supported");
  }
}

// Backtracking over sets of distinct r-subsets. Edges are produced in
// lexicographic order; the next edge must contain the lowest vertex that
// still has positive residual degree, because no later edge could.
class EdgeSetSearch {
 public:
  explicit EdgeSetSearch(const DegreeSequence& ds)
      : n_(static_cast<int>(ds.n())),
        r_(ds.r()),
        residual_(ds.k().begin(), ds.k().end()) {}

  void run(std::int64_t edges_left, HypergraphCounts& out) {
    std::vector<int> none;
    descend(edges_left, none, true, out);
  }

 private:
  void descend(std::int64_t edges_left, const std::vector<int>& prev, bool linear,
               HypergraphCounts& out) {
    if (edges_left == 0) {
      out.simple += 1;
      if (linear) out.linear += 1;
      return;
    }
    int lowest = -1;
    std::uint64_t avail = 0;
    for (int v = 0; v < n_; ++v) {
      if (residual_[v] > edges_left) return;
      if (residual_[v] > 0) {
        if (lowest < 0) {
          lowest = v;
        } else {
          avail |= std::uint64_t{1} << v;
        }
      }
    }
    if (lowest < 0) return;
    for_each_subset(avail, r_ - 1, [&](std::uint64_t rest) {
      const std::uint64_t mask = rest | (std::uint64_t{1} << lowest);
      std::vector<int> edge;
      for (std::uint64_t bits = mask; bits != 0; bits &= bits - 1) {
        edge.push_back(std::countr_zero(bits));
      }
      if (!prev.empty() && !(prev < edge)) return;
      bool still_linear = linear;
      if (still_linear) {
        for (std::uint64_t other : chosen_) {
          if (std::popcount(other & mask) > 1) {
            still_linear = false;
            break;
          }
        }
      }
      for (int v : edge) --residual_[v];
      chosen_.push_back(mask);
      descend(edges_left - 1, edge, still_linear, out);
      chosen_.pop_back();
      for (int v : edge) ++residual_[v];
    });
  }

  int n_;
  int r_;
  std::vector<std::int64_t> residual_;
  std::vector<std::uint64_t> chosen_;
};

std::int64_t count_embeddings(const BipartiteGraph& graph, const PatternShape& shape) {
  std::vector<std::vector<int>> shape_left_nbrs(shape.n_right);
  std::vector<int> shape_left_deg(shape.n_left, 0);
  for (const auto& [l, r] : shape.edges) {
    shape_left_nbrs[r].push_back(l);
    ++shape_left_deg[l];
  }
  std::vector<int> left_map(shape.n_left, -1);
  std::vector<int> right_map(shape.n_right, -1);
  std::vector<char> left_used(graph.n_left(), 0);
  std::vector<char> right_used(graph.n_right(), 0);
  std::int64_t total = 0;

  std::function<void(int)> place_right = [&](int idx) {
    if (idx == shape.n_right) {
      ++total;
      return;
    }
    for (int e = 0; e < graph.n_right(); ++e) {
      if (right_used[e]) continue;
      bool ok = true;
      for (int l : shape_left_nbrs[idx]) {
        if (!graph.has_edge(left_map[l], e)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      right_used[e] = 1;
      right_map[idx] = e;
      place_right(idx + 1);
      right_used[e] = 0;
    }
  };
  std::function<void(int)> place_left = [&](int idx) {
    if (idx == shape.n_left) {
      place_right(0);
      return;
    }
    for (int v = 0; v < graph.n_left(); ++v) {
      if (left_used[v]) continue;
      if (static_cast<int>(graph.right_neighbors(v).size()) < shape_left_deg[idx]) continue;
      left_used[v] = 1;
      left_map[idx] = v;
      place_left(idx + 1);
      left_used[v] = 0;
    }
  };
  place_left(0);
  return total;
}

PatternShape cycles_shape(int n_left, int n_right,
                          std::initializer_list<std::array<int, 4>> cycles) {
  PatternShape shape{n_left, n_right, {}};
  for (const auto& c : cycles) {
    for (int l : {c[0], c[1]}) {
      for (int r : {c[2], c[3]}) shape.edges.emplace_back(l, r);
    }
  }
  // Overlapping cycles share edges.
  std::sort(shape.edges.begin(), shape.edges.end());
  shape.edges.erase(std::unique(shape.edges.begin(), shape.edges.end()), shape.edges.end());
  return shape;
}

}  // namespace

double search_space_estimate(const DegreeSequence& ds) {
  if (!ds.divisible()) return 0.0;
  const std::int64_t m = ds.total() / ds.r();
  double log_space = log_factorial(ds.total()) - static_cast<double>(m) * log_factorial(ds.r());
  for (std::int64_t kj : ds.k()) log_space -= log_factorial(kj);
  return std::exp(log_space);
}

void check_guard(const DegreeSequence& ds, const Guard& guard) {
  edge_count(ds);
  if (guard.max_space) {
    const double space = search_space_estimate(ds);
    if (space > *guard.max_space) {
      throw Error(ErrorCode::kTooLarge,
                  "estimated search space " + std::to_string(space) +
                      " exceeds --max-space " + std::to_string(*guard.max_space));
    }
    return;
  }
  if (ds.total() > guard.max_total_degree || ds.n() > guard.max_vertices) {
    throw Error(ErrorCode::kTooLarge,
                "instance (n = " + std::to_string(ds.n()) + ", M = " +
                    std::to_string(ds.total()) + ") exceeds the guard M <= " +
                    std::to_string(guard.max_total_degree) + ", n <= " +
                    std::to_string(guard.max_vertices) + "; raise it with --max-space");
  }
}

BipartiteGraph graph_from_columns(int n_left, std::span<const std::uint64_t> columns) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < columns.size(); ++i) {
    for (std::uint64_t rest = columns[i]; rest != 0; rest &= rest - 1) {
      edges.emplace_back(std::countr_zero(rest), static_cast<int>(i));
    }
  }
  return BipartiteGraph::from_edges(n_left, static_cast<int>(columns.size()), edges);
}

BigInt enumerate_bigraphs(const DegreeSequence& ds, ClassFilter filter,
                          const std::function<void(const BipartiteGraph&)>& visitor,
                          const Guard& guard) {
  require_enumerable(ds, guard);
  const int n = static_cast<int>(ds.n());
  const Thresholds th = ds.total() >= 2 ? thresholds(ds) : Thresholds{};
  std::uint64_t count = 0;
  auto leaf = [&](std::span<const std::uint64_t> columns) {
    std::optional<BipartiteGraph> graph;
    switch (filter) {
      case ClassFilter::kAll:
        break;
      case ClassFilter::kB0:
        if (!columns_distinct(columns)) return;
        break;
      case ClassFilter::kNoFourCycle:
        if (!columns_four_cycle_free(columns)) return;
        break;
      case ClassFilter::kBPlus:
        graph = graph_from_columns(n, columns);
        if (!classify(*graph, ds, th).in_bplus) return;
        break;
    }
    ++count;
    if (visitor) {
      if (!graph) graph = graph_from_columns(n, columns);
      visitor(*graph);
    }
  };
  std::vector<decltype(leaf)> leaves{leaf};
  sweep(ds, leaves);
  return count;
}

HypergraphCounts count_hypergraphs(const DegreeSequence& ds, const Guard& guard) {
  require_enumerable(ds, guard);
  HypergraphCounts out;
  EdgeSetSearch search(ds);
  search.run(ds.total() / ds.r(), out);
  return out;
}

OracleReport full_report(const DegreeSequence& ds, const OracleOptions& options) {
  require_enumerable(ds, options.guard);
  OracleReport report;
  report.edges = ds.total() / ds.r();
  const Thresholds th = ds.total() >= 2 ? thresholds(ds) : Thresholds{};
  report.n2 = th.n2;
  const int n = static_cast<int>(ds.n());

  struct Tally {
    std::uint64_t b = 0;
    std::uint64_t b0 = 0;
    std::uint64_t bplus = 0;
    std::vector<std::uint64_t> cd;
  };
  const unsigned workers = std::max(1u, options.workers);
  std::vector<Tally> tallies(workers);
  for (auto& t : tallies) t.cd.assign(th.n2 + 1, 0);

  auto make_leaf = [&](Tally& tally) {
    return [&, tally_ptr = &tally](std::span<const std::uint64_t> columns) {
      Tally& t = *tally_ptr;
      ++t.b;
      if (columns_distinct(columns)) ++t.b0;
      const Classification cls = classify(graph_from_columns(n, columns), ds, th);
      if (cls.in_bplus) {
        ++t.bplus;
        ++t.cd[cls.d];
      }
    };
  };
  std::vector<decltype(make_leaf(tallies[0]))> leaves;
  for (auto& t : tallies) leaves.push_back(make_leaf(t));
  sweep(ds, leaves);

  report.cd_profile.assign(th.n2 + 1, 0);
  for (const auto& t : tallies) {
    report.count_b += t.b;
    report.count_b0 += t.b0;
    report.count_bplus += t.bplus;
    for (std::size_t d = 0; d < t.cd.size(); ++d) report.cd_profile[d] += t.cd[d];
  }
  const HypergraphCounts hyper = count_hypergraphs(ds, options.guard);
  report.count_h = hyper.simple;
  report.count_l = hyper.linear;

  const BigInt orderings = factorial(report.edges);
  BigInt profile_sum = 0;
  for (const auto& c : report.cd_profile) profile_sum += c;
  auto fail = [](const std::string& what) {
    throw Error(ErrorCode::kInvariantViolation, what);
  };
  if (orderings * report.count_h != report.count_b0) {
    fail("(M/r)! |H| != |B0|: " + BigInt(orderings * report.count_h).str() + " vs " +
         report.count_b0.str());
  }
  if (profile_sum != report.count_bplus) {
    fail("sum of |C_d| != |B+|: " + profile_sum.str() + " vs " + report.count_bplus.str());
  }
  if (orderings * report.count_l != report.cd_profile[0]) {
    fail("|L| != |C_0| / (M/r)!: " + report.count_l.str() + " vs " +
         report.cd_profile[0].str() + " / " + orderings.str());
  }
  if (report.count_l > report.count_h || report.count_bplus > report.count_b0 ||
      report.count_b0 > report.count_b) {
    fail("count ordering violated");
  }
  return report;
}

std::vector<PatternShape> pattern_shapes(Pattern pattern) {
  switch (pattern) {
    case Pattern::kK32:
      return {cycles_shape(3, 2, {{0, 1, 0, 1}, {1, 2, 0, 1}})};
    case Pattern::kK23:
      return {cycles_shape(2, 3, {{0, 1, 0, 1}, {0, 1, 1, 2}})};
    case Pattern::kTwoFourCyclesSharedRight:
      return {
          // sharing one left and one right vertex
          cycles_shape(3, 3, {{0, 1, 0, 1}, {1, 2, 1, 2}}),
          // sharing only the right vertex
          cycles_shape(4, 3, {{0, 1, 0, 1}, {2, 3, 1, 2}}),
      };
    case Pattern::kThreeFourCyclesFourLeft:
      return {
          cycles_shape(3, 6, {{0, 1, 0, 1}, {0, 2, 2, 3}, {1, 2, 4, 5}}),  // triangle
          cycles_shape(4, 6, {{0, 1, 0, 1}, {1, 2, 2, 3}, {2, 3, 4, 5}}),  // path
          cycles_shape(4, 6, {{0, 1, 0, 1}, {1, 2, 2, 3}, {1, 3, 4, 5}}),  // star
      };
  }
  return {};
}

std::int64_t automorphism_count(const PatternShape& shape) {
  std::vector<Edge> edges = shape.edges;
  std::sort(edges.begin(), edges.end());
  std::vector<int> lp(shape.n_left);
  std::iota(lp.begin(), lp.end(), 0);
  std::int64_t count = 0;
  do {
    std::vector<int> rp(shape.n_right);
    std::iota(rp.begin(), rp.end(), 0);
    do {
      std::vector<Edge> mapped;
      for (const auto& [l, r] : edges) mapped.emplace_back(lp[l], rp[r]);
      std::sort(mapped.begin(), mapped.end());
      if (mapped == edges) ++count;
    } while (std::next_permutation(rp.begin(), rp.end()));
  } while (std::next_permutation(lp.begin(), lp.end()));
  return count;
}

std::int64_t count_copies(const BipartiteGraph& graph, const PatternShape& shape) {
  return count_embeddings(graph, shape) / automorphism_count(shape);
}

Rational pattern_expectation(const DegreeSequence& ds, Pattern pattern, const Guard& guard) {
  const auto shapes = pattern_shapes(pattern);
  std::vector<std::int64_t> auts;
  for (const auto& s : shapes) auts.push_back(automorphism_count(s));
  BigInt copies = 0;
  const BigInt total = enumerate_bigraphs(
      ds, ClassFilter::kAll,
      [&](const BipartiteGraph& graph) {
        for (std::size_t s = 0; s < shapes.size(); ++s) {
          copies += count_embeddings(graph, shapes[s]) / auts[s];
        }
      },
      guard);
  if (total == 0) {
    throw Error(ErrorCode::kPreconditionFailed, "B_r(k) is empty");
  }
  return Rational(copies, total);
}

Rational mckay_pattern_bound(const DegreeSequence& ds, Pattern pattern) {
  const std::int64_t m = edge_count(ds);
  const int n = static_cast<int>(ds.n());
  Rational total = 0;
  for (const PatternShape& shape : pattern_shapes(pattern)) {
    std::vector<std::int64_t> left_deg(shape.n_left, 0);
    std::vector<std::int64_t> right_deg(shape.n_right, 0);
    for (const auto& [a, b] : shape.edges) {
      ++left_deg[a];
      ++right_deg[b];
    }
    const std::int64_t e_l = static_cast<std::int64_t>(shape.edges.size());
    const std::int64_t l_max =
        std::max(*std::max_element(left_deg.begin(), left_deg.end()),
                 *std::max_element(right_deg.begin(), right_deg.end()));
    const std::int64_t g_max = std::max<std::int64_t>(ds.k_max(), ds.r());
    const std::int64_t gamma = 2 * g_max * (g_max + l_max - 1) + 2;
    if (ds.total() - gamma < e_l) {
      throw Error(ErrorCode::kPreconditionFailed,
                  "E_g - Gamma = " + std::to_string(ds.total() - gamma) + " < E_l = " +
                      std::to_string(e_l));
    }
    if (shape.n_left > n || shape.n_right > m) continue;

    BigInt left_sum = 0;
    std::vector<int> image(shape.n_left);
    std::vector<char> used(n, 0);
    std::function<void(int, BigInt)> place = [&](int a, BigInt prod) {
      if (a == shape.n_left) {
        left_sum += prod;
        return;
      }
      for (int j = 0; j < n; ++j) {
        if (used[j]) continue;
        const BigInt f = falling_factorial(ds.k()[j], left_deg[a]);
        if (f == 0) continue;
        used[j] = 1;
        place(a + 1, prod * f);
        used[j] = 0;
      }
    };
    place(0, 1);
    BigInt right_factor = falling_factorial(m, shape.n_right);
    for (std::int64_t d : right_deg) right_factor *= falling_factorial(ds.r(), d);
    total += Rational(left_sum * right_factor,
                      falling_factorial(ds.total() - gamma, e_l) * automorphism_count(shape));
  }
  return total;
}

Rational subgraph_probability(const DegreeSequence& ds, std::span<const Edge> fixed_edges,
                              const Guard& guard) {
  require_enumerable(ds, guard);
  const auto m = static_cast<std::size_t>(ds.total() / ds.r());
  std::vector<std::uint64_t> required(m, 0);
  for (const auto& [l, r] : fixed_edges) {
    if (l < 0 || static_cast<std::size_t>(l) >= ds.n() || r < 0 ||
        static_cast<std::size_t>(r) >= m) {
      throw Error(ErrorCode::kInvalidArgument, "fixed edge out of range");
    }
    required[r] |= std::uint64_t{1} << l;
  }
  std::uint64_t hits = 0;
  std::uint64_t total = 0;
  auto leaf = [&](std::span<const std::uint64_t> columns) {
    ++total;
    for (std::size_t i = 0; i < columns.size(); ++i) {
      if ((columns[i] & required[i]) != required[i]) return;
    }
    ++hits;
  };
  std::vector<decltype(leaf)> leaves{leaf};
  sweep(ds, leaves);
  if (total == 0) {
    throw Error(ErrorCode::kPreconditionFailed, "B_r(k) is empty");
  }
  return Rational(BigInt(hits), BigInt(total));
}

DegreeTwoProfile degree_two_profile(const DegreeSequence& ds) {
  std::int64_t labeled_edges = 0;
  for (std::int64_t kj : ds.k()) {
    if (kj != 0 && kj != 2) {
      throw Error(ErrorCode::kInvalidArgument, "every degree must be 0 or 2");
    }
    labeled_edges += kj / 2;
  }
  const std::int64_t m = edge_count(ds);
  if (m > 10) {
    throw Error(ErrorCode::kTooLarge, "degree-two profile supports at most 10 right vertices");
  }
  const std::int64_t n2 = ds.total() >= 2 ? thresholds(ds).n2 : 0;
  const int r = ds.r();
  const int size = static_cast<int>(m);

  std::vector<int> residual(size, r);
  std::vector<int> double_at(size, 0);
  std::map<BigInt, std::uint64_t> by_denominator;  // prod mu! -> multigraphs
  std::vector<std::uint64_t> by_doubles(n2 + 1, 0);
  BigInt denominator = 1;
  int doubles = 0;
  bool tame = true;  // multiplicities <= 2 and double edges form a matching

  std::function<void(int, int)> fill = [&](int a, int b) {
    if (a == size) {
      ++by_denominator[denominator];
      if (tame && doubles <= n2) ++by_doubles[doubles];
      return;
    }
    if (b >= size) {
      if (residual[a] == 0) fill(a + 1, a + 2);
      return;
    }
    int capacity = 0;
    for (int c = b; c < size; ++c) capacity += residual[c];
    if (capacity < residual[a]) return;
    const int top = std::min(residual[a], residual[b]);
    for (int mu = 0; mu <= top; ++mu) {
      const BigInt saved_den = denominator;
      const bool saved_tame = tame;
      const int saved_doubles = doubles;
      residual[a] -= mu;
      residual[b] -= mu;
      denominator *= factorial(mu);
      if (mu >= 3) tame = false;
      if (mu == 2) {
        ++doubles;
        if (++double_at[a] > 1 || ++double_at[b] > 1) tame = false;
      }
      fill(a, b + 1);
      if (mu == 2) {
        --double_at[a];
        --double_at[b];
      }
      residual[a] += mu;
      residual[b] += mu;
      denominator = saved_den;
      tame = saved_tame;
      doubles = saved_doubles;
    }
  };
  if (size == 0) {
    by_denominator[1] = labeled_edges == 0 ? 1 : 0;
    if (labeled_edges == 0) by_doubles[0] = 1;
  } else {
    fill(0, 1);
  }

  const BigInt labelings = factorial(labeled_edges);
  DegreeTwoProfile out;
  for (const auto& [den, graphs] : by_denominator) out.count_b += labelings / den * graphs;
  out.cd_profile.assign(n2 + 1, 0);
  for (std::int64_t d = 0; d <= n2; ++d) {
    out.cd_profile[d] = (labelings >> d) * by_doubles[d];
  }
  return out;
}

}  // namespace linhyper
