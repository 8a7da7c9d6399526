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

// Labeled bipartite graphs, uniform hypergraphs, and the correspondence
// between them: the biadjacency matrix of the graph is the incidence matrix
// of the hypergraph. Left vertices v_1..v_n are hypergraph vertices, right
// vertices e_1..e_m are hyperedges. All indices are 0-based in this API.

#ifndef LINHYPER_CORE_BIGRAPH_HPP_
#define LINHYPER_CORE_BIGRAPH_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "degree_model.hpp"

namespace linhyper {

enum class Side { kLeft, kRight };

struct Vertex {
  Side side;
  int index;

  static Vertex left(int j) { return {Side::kLeft, j}; }
  static Vertex right(int i) { return {Side::kRight, i}; }
  friend bool operator==(const Vertex&, const Vertex&) = default;
};

// (left, right)
using Edge = std::pair<int, int>;

class BipartiteGraph {
 public:
  BipartiteGraph() = default;
  BipartiteGraph(int n_left, int n_right);

  // Throws Error(kInvalidArgument) on out-of-range endpoints or repeated
  // edges.
  static BipartiteGraph from_edges(int n_left, int n_right,
                                   std::span<const Edge> edges);

  int n_left() const noexcept { return static_cast<int>(left_adj_.size()); }
  int n_right() const noexcept { return static_cast<int>(right_adj_.size()); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  // Sorted neighbour lists.
  const std::vector<int>& right_neighbors(int left) const { return left_adj_[left]; }
  const std::vector<int>& left_neighbors(int right) const { return right_adj_[right]; }

  bool has_edge(int left, int right) const;
  // Mutators keep the neighbour lists sorted. add_edge throws on an existing
  // edge, remove_edge on a missing one.
  void add_edge(int left, int right);
  void remove_edge(int left, int right);

  std::vector<std::int64_t> left_degrees() const;
  std::vector<std::int64_t> right_degrees() const;
  // Sorted by (left, right).
  std::vector<Edge> edges() const;

  // Left degrees equal k and every one of the M/r right vertices has degree r.
  bool conforms_to(const DegreeSequence& ds) const;

  friend bool operator==(const BipartiteGraph& a, const BipartiteGraph& b) {
    return a.left_adj_ == b.left_adj_ && a.right_adj_ == b.right_adj_;
  }

 private:
  std::vector<std::vector<int>> left_adj_;
  std::vector<std::vector<int>> right_adj_;
  std::size_t edge_count_ = 0;
};

// Multiset of edges over vertices 0..n-1; each edge is a sorted vector and
// may repeat a vertex (a loop).
struct Hypergraph {
  int n = 0;
  std::vector<std::vector<int>> edges;

  // Multiset equality of sorted edges; edge order is irrelevant.
  friend bool operator==(const Hypergraph& a, const Hypergraph& b);
};

// A copy of K_{2,2}. Both pairs are stored in increasing order.
struct FourCycle {
  std::array<int, 2> left;
  std::array<int, 2> right;

  friend auto operator<=>(const FourCycle&, const FourCycle&) = default;
};

enum class Property {
  kNoK32,          // (i)   no K_{3,2}: three left vertices on two right ones
  kNoK23,          // (ii)  no K_{2,3}
  kDisjointRight,  // (iii) no right vertex on two 4-cycles
  kSpreadLeft,     // (iv)  any three 4-cycles cover at least five left vertices
  kBoundedCount,   // (v)   at most N2 4-cycles
};

// "i" .. "v"
std::string_view roman(Property p);

struct Classification {
  std::vector<FourCycle> four_cycles;
  std::int64_t d = 0;
  // N2 of the degree sequence, 0 when M < 2 (property (v) is then vacuous).
  std::int64_t n2 = 0;
  bool in_b0 = false;
  bool in_bplus = false;
  std::vector<Property> failed_properties;
};

// Throws Error(kWrongRightDegree) unless every right vertex has degree r.
Hypergraph to_hypergraph(const BipartiteGraph& graph, int r);

// Columns follow the canonical edge order: lexicographic on the sorted
// vertex lists, ties by input position. Throws Error(kLoopPresent) if an edge
// repeats a vertex.
BipartiteGraph from_hypergraph(const Hypergraph& hypergraph);

// All K_{2,2} copies, sorted lexicographically on (j1, j2, i1, i2).
std::vector<FourCycle> four_cycles(const BipartiteGraph& graph);

// True iff some a left vertices and b right vertices span all a*b edges.
bool has_copy(const BipartiteGraph& graph, int a, int b);

// Shortest-path length; nullopt when y is unreachable from x.
std::optional<int> distance(const BipartiteGraph& graph, Vertex x, Vertex y);

// Evaluates properties (i)-(v) exactly. Throws Error(kNonConforming) if the
// graph does not conform to ds.
Classification classify(const BipartiteGraph& graph, const DegreeSequence& ds);
// Same, with the thresholds of ds already computed (hot loops).
Classification classify(const BipartiteGraph& graph, const DegreeSequence& ds,
                        const Thresholds& th);

struct HyperProperties {
  // Number of (vertex, edge) pairs where the vertex repeats inside the edge.
  std::int64_t loops = 0;
  // Edges equal to an earlier edge.
  std::int64_t repeated_edges = 0;
  std::int64_t max_link_multiplicity = 0;
  // Links contained in exactly two edges, sorted.
  std::vector<std::array<int, 2>> double_links;
  bool is_simple = false;
  bool is_linear = false;
  // Hypergraph-side counterparts (i)'-(v)' of the bipartite properties. (v)'
  // uses N2 of the hypergraph's own degree sequence and is skipped when that
  // is undefined (non-uniform edges or M < 2).
  std::vector<Property> failed_dual;
};

HyperProperties hyper_properties(const Hypergraph& hypergraph);

}  // namespace linhyper

#endif  // LINHYPER_CORE_BIGRAPH_HPP_
