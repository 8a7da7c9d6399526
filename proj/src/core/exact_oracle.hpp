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

// Brute-force enumeration of every labeled object for a degree sequence.
// This is the ground truth the asymptotic formulas and switching claims are
// checked against, so everything here is exact (arbitrary-precision counts,
// rational expectations).

#ifndef LINHYPER_CORE_EXACT_ORACLE_HPP_
#define LINHYPER_CORE_EXACT_ORACLE_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "bigraph.hpp"
#include "degree_model.hpp"

namespace linhyper {

// Admission rule for brute-force work. By default an instance must have
// M <= max_total_degree and n <= max_vertices; when max_space is set it
// replaces both limits with search_space_estimate(ds) <= max_space.
struct Guard {
  std::int64_t max_total_degree = 16;
  std::size_t max_vertices = 10;
  std::optional<double> max_space;
};

// M! / ((r!)^{M/r} prod k_j!), the number of half-edge pairings divided by
// the relabelings of each graph. Upper-bounds |B_r(k)|.
double search_space_estimate(const DegreeSequence& ds);

// Throws Error(kNotDivisible) or Error(kTooLarge).
void check_guard(const DegreeSequence& ds, const Guard& guard);

enum class ClassFilter { kAll, kB0, kBPlus, kNoFourCycle };

// Graph with left vertex j adjacent to right vertex i iff bit j of
// columns[i] is set.
BipartiteGraph graph_from_columns(int n_left, std::span<const std::uint64_t> columns);

// Visits every conforming labeled bipartite graph passing `filter` exactly
// once and returns how many there were. Right vertices are filled in index
// order, each as an r-subset in lexicographic order. `visitor` may be empty.
BigInt enumerate_bigraphs(const DegreeSequence& ds, ClassFilter filter,
                          const std::function<void(const BipartiteGraph&)>& visitor,
                          const Guard& guard = {});

struct HypergraphCounts {
  BigInt simple;  // |H_r(k)|
  BigInt linear;  // |L_r(k)|
};

// Direct backtracking over sets of distinct r-subsets of [n]; shares no code
// with the bipartite enumeration.
HypergraphCounts count_hypergraphs(const DegreeSequence& ds, const Guard& guard = {});

struct OracleReport {
  std::int64_t edges = 0;  // M/r
  std::int64_t n2 = 0;
  BigInt count_b;
  BigInt count_b0;
  BigInt count_bplus;
  BigInt count_h;
  BigInt count_l;
  // |C_0|, |C_1|, ..., |C_{N2}|
  std::vector<BigInt> cd_profile;
};

struct OracleOptions {
  Guard guard;
  unsigned workers = 1;
};

// All counts in one sweep over B_r(k) plus the independent hypergraph count.
// The identities linking them are checked before returning; a failure throws
// Error(kInvariantViolation).
OracleReport full_report(const DegreeSequence& ds, const OracleOptions& options = {});

// Small bipartite pattern graph, matched side-preservingly.
struct PatternShape {
  int n_left = 0;
  int n_right = 0;
  std::vector<Edge> edges;
};

enum class Pattern {
  kK32,
  kK23,
  kTwoFourCyclesSharedRight,  // two 4-cycles through one right vertex
  kThreeFourCyclesFourLeft,   // three 4-cycles on at most four left vertices
};

// The shapes whose copies make up a pattern.
std::vector<PatternShape> pattern_shapes(Pattern pattern);

// Side-preserving automorphisms of the shape.
std::int64_t automorphism_count(const PatternShape& shape);

// Number of distinct subgraphs of `graph` isomorphic to `shape`.
std::int64_t count_copies(const BipartiteGraph& graph, const PatternShape& shape);

// Expected number of copies of the pattern's shapes in a uniform element of
// B_r(k), exactly.
Rational pattern_expectation(const DegreeSequence& ds, Pattern pattern,
                             const Guard& guard = {});

// P(fixed_edges are all present) for a uniform element of B_r(k), exactly.
// Sum of mckay_upper_bound over every placement of the pattern's shapes in
// B_r(k): an upper bound on pattern_expectation. Throws
// Error(kPreconditionFailed) when the bound's condition fails for a shape.
Rational mckay_pattern_bound(const DegreeSequence& ds, Pattern pattern);

Rational subgraph_probability(const DegreeSequence& ds, std::span<const Edge> fixed_edges,
                              const Guard& guard = {});

// Exact |B| and C_d profile for sequences whose entries are all 0 or 2. Such
// graphs are loopless r-regular multigraphs on the right vertices with
// labeled edges, which is far cheaper to enumerate. Throws
// Error(kInvalidArgument) for other sequences and Error(kTooLarge) for more
// than 10 right vertices.
struct DegreeTwoProfile {
  BigInt count_b;
  std::vector<BigInt> cd_profile;
};
DegreeTwoProfile degree_two_profile(const DegreeSequence& ds);

}  // namespace linhyper

#endif  // LINHYPER_CORE_EXACT_ORACLE_HPP_
