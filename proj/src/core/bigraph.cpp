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

#include "bigraph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <string>

#include "error.hpp"

namespace linhyper {

namespace {

void check_range(int value, int bound, const char* what) {
  if (value < 0 || value >= bound) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string(what) + " index " + std::to_string(value) +
                    " out of range [0, " + std::to_string(bound) + ")");
  }
}

void insert_sorted(std::vector<int>& list, int value) {
  list.insert(std::lower_bound(list.begin(), list.end(), value), value);
}

void erase_sorted(std::vector<int>& list, int value) {
  list.erase(std::lower_bound(list.begin(), list.end(), value));
}

std::size_t intersection_size(const std::vector<int>& a, const std::vector<int>& b) {
  std::size_t count = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      ++count;
      ++ia;
      ++ib;
    }
  }
  return count;
}

// Is there a third 4-cycle, other than cycles[a] and cycles[b], whose left
// pair adds at most 4 - |pool| new vertices to `pool`?
bool third_cycle_within(const std::vector<FourCycle>& cycles,
                        const std::map<std::array<int, 2>, std::vector<std::size_t>>& by_pair,
                        const std::map<int, std::vector<std::size_t>>& by_vertex,
                        const std::vector<int>& pool, std::size_t a, std::size_t b) {
  auto other = [a, b](std::size_t idx) { return idx != a && idx != b; };
  if (pool.size() <= 2) return cycles.size() >= 3;
  if (pool.size() == 3) {
    for (int v : pool) {
      auto it = by_vertex.find(v);
      if (it == by_vertex.end()) continue;
      for (std::size_t idx : it->second) {
        if (other(idx)) return true;
      }
    }
    return false;
  }
  for (std::size_t x = 0; x < pool.size(); ++x) {
    for (std::size_t y = x + 1; y < pool.size(); ++y) {
      auto it = by_pair.find({pool[x], pool[y]});
      if (it == by_pair.end()) continue;
      for (std::size_t idx : it->second) {
        if (other(idx)) return true;
      }
    }
  }
  return false;
}

bool spread_left_holds(const std::vector<FourCycle>& cycles) {
  std::map<std::array<int, 2>, std::vector<std::size_t>> by_pair;
  std::map<int, std::vector<std::size_t>> by_vertex;
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    by_pair[cycles[i].left].push_back(i);
    by_vertex[cycles[i].left[0]].push_back(i);
    by_vertex[cycles[i].left[1]].push_back(i);
  }
  for (std::size_t a = 0; a < cycles.size(); ++a) {
    for (std::size_t b = a + 1; b < cycles.size(); ++b) {
      std::vector<int> pool = {cycles[a].left[0], cycles[a].left[1], cycles[b].left[0],
                               cycles[b].left[1]};
      std::sort(pool.begin(), pool.end());
      pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
      if (third_cycle_within(cycles, by_pair, by_vertex, pool, a, b)) return false;
    }
  }
  return true;
}

}  // namespace

std::string_view roman(Property p) {
  switch (p) {
    case Property::kNoK32: return "i";
    case Property::kNoK23: return "ii";
    case Property::kDisjointRight: return "iii";
    case Property::kSpreadLeft: return "iv";
    case Property::kBoundedCount: return "v";
  }
  return "?";
}

BipartiteGraph::BipartiteGraph(int n_left, int n_right) {
  if (n_left < 0 || n_right < 0) {
    throw Error(ErrorCode::kInvalidArgument, "negative vertex count");
  }
  left_adj_.resize(n_left);
  right_adj_.resize(n_right);
}

BipartiteGraph BipartiteGraph::from_edges(int n_left, int n_right,
                                          std::span<const Edge> edges) {
  BipartiteGraph graph(n_left, n_right);
  for (const auto& [left, right] : edges) {
    check_range(left, n_left, "left");
    check_range(right, n_right, "right");
    graph.left_adj_[left].push_back(right);
    graph.right_adj_[right].push_back(left);
  }
  for (auto& list : graph.left_adj_) {
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
      throw Error(ErrorCode::kInvalidArgument, "repeated edge in bipartite graph");
    }
  }
  for (auto& list : graph.right_adj_) std::sort(list.begin(), list.end());
  graph.edge_count_ = edges.size();
  return graph;
}

bool BipartiteGraph::has_edge(int left, int right) const {
  const auto& a = left_adj_[left];
  const auto& b = right_adj_[right];
  return a.size() <= b.size() ? std::binary_search(a.begin(), a.end(), right)
                              : std::binary_search(b.begin(), b.end(), left);
}

void BipartiteGraph::add_edge(int left, int right) {
  check_range(left, n_left(), "left");
  check_range(right, n_right(), "right");
  if (has_edge(left, right)) {
    throw Error(ErrorCode::kInvalidArgument, "edge already present");
  }
  insert_sorted(left_adj_[left], right);
  insert_sorted(right_adj_[right], left);
  ++edge_count_;
}

void BipartiteGraph::remove_edge(int left, int right) {
  check_range(left, n_left(), "left");
  check_range(right, n_right(), "right");
  if (!has_edge(left, right)) {
    throw Error(ErrorCode::kInvalidArgument, "edge not present");
  }
  erase_sorted(left_adj_[left], right);
  erase_sorted(right_adj_[right], left);
  --edge_count_;
}

std::vector<std::int64_t> BipartiteGraph::left_degrees() const {
  std::vector<std::int64_t> out;
  out.reserve(left_adj_.size());
  for (const auto& list : left_adj_) out.push_back(static_cast<std::int64_t>(list.size()));
  return out;
}

std::vector<std::int64_t> BipartiteGraph::right_degrees() const {
  std::vector<std::int64_t> out;
  out.reserve(right_adj_.size());
  for (const auto& list : right_adj_) out.push_back(static_cast<std::int64_t>(list.size()));
  return out;
}

std::vector<Edge> BipartiteGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (int j = 0; j < n_left(); ++j) {
    for (int i : left_adj_[j]) out.emplace_back(j, i);
  }
  return out;
}

bool BipartiteGraph::conforms_to(const DegreeSequence& ds) const {
  if (static_cast<std::size_t>(n_left()) != ds.n() || !ds.divisible()) return false;
  if (n_right() != ds.total() / ds.r()) return false;
  for (int j = 0; j < n_left(); ++j) {
    if (static_cast<std::int64_t>(left_adj_[j].size()) != ds.k()[j]) return false;
  }
  for (const auto& list : right_adj_) {
    if (static_cast<int>(list.size()) != ds.r()) return false;
  }
  return true;
}

bool operator==(const Hypergraph& a, const Hypergraph& b) {
  if (a.n != b.n || a.edges.size() != b.edges.size()) return false;
  auto ea = a.edges;
  auto eb = b.edges;
  for (auto& e : ea) std::sort(e.begin(), e.end());
  for (auto& e : eb) std::sort(e.begin(), e.end());
  std::sort(ea.begin(), ea.end());
  std::sort(eb.begin(), eb.end());
  return ea == eb;
}

Hypergraph to_hypergraph(const BipartiteGraph& graph, int r) {
  Hypergraph out;
  out.n = graph.n_left();
  out.edges.reserve(graph.n_right());
  for (int i = 0; i < graph.n_right(); ++i) {
    const auto& members = graph.left_neighbors(i);
    if (static_cast<int>(members.size()) != r) {
      throw Error(ErrorCode::kWrongRightDegree,
                  "right vertex e" + std::to_string(i + 1) + " has degree " +
                      std::to_string(members.size()) + ", expected " + std::to_string(r));
    }
    out.edges.push_back(members);
  }
  return out;
}

BipartiteGraph from_hypergraph(const Hypergraph& hypergraph) {
  std::vector<std::vector<int>> sorted_edges = hypergraph.edges;
  for (std::size_t i = 0; i < sorted_edges.size(); ++i) {
    auto& e = sorted_edges[i];
    std::sort(e.begin(), e.end());
    for (int v : e) check_range(v, hypergraph.n, "vertex");
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
      throw Error(ErrorCode::kLoopPresent,
                  "edge " + std::to_string(i + 1) + " repeats a vertex");
    }
  }
  std::vector<std::size_t> order(sorted_edges.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return sorted_edges[a] < sorted_edges[b];
  });

  std::vector<Edge> edges;
  for (std::size_t col = 0; col < order.size(); ++col) {
    for (int v : sorted_edges[order[col]]) edges.emplace_back(v, static_cast<int>(col));
  }
  return BipartiteGraph::from_edges(hypergraph.n, static_cast<int>(order.size()), edges);
}

std::vector<FourCycle> four_cycles(const BipartiteGraph& graph) {
  std::vector<FourCycle> cycles;
  const int m = graph.n_right();
  // shared[j] collects the common left neighbours of the current e_i and e_j.
  std::vector<std::vector<int>> shared(m);
  std::vector<int> touched;
  for (int i = 0; i < m; ++i) {
    for (int v : graph.left_neighbors(i)) {
      for (int j : graph.right_neighbors(v)) {
        if (j <= i) continue;
        if (shared[j].empty()) touched.push_back(j);
        shared[j].push_back(v);
      }
    }
    for (int j : touched) {
      const auto& common = shared[j];
      for (std::size_t a = 0; a < common.size(); ++a) {
        for (std::size_t b = a + 1; b < common.size(); ++b) {
          cycles.push_back({{common[a], common[b]}, {i, j}});
        }
      }
      shared[j].clear();
    }
    touched.clear();
  }
  std::sort(cycles.begin(), cycles.end());
  return cycles;
}

bool has_copy(const BipartiteGraph& graph, int a, int b) {
  if (a < 1 || b < 1) {
    throw Error(ErrorCode::kInvalidArgument, "has_copy needs a, b >= 1");
  }
  // Anchor on a left vertex v of the copy: the b right vertices are a subset
  // of N(v) whose common neighbourhood must hold a left vertices.
  for (int v = 0; v < graph.n_left(); ++v) {
    const auto& nbrs = graph.right_neighbors(v);
    const int deg = static_cast<int>(nbrs.size());
    if (deg < b) continue;
    std::vector<int> idx(b);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      std::vector<int> common = graph.left_neighbors(nbrs[idx[0]]);
      for (int t = 1; t < b && static_cast<int>(common.size()) >= a; ++t) {
        const auto& other = graph.left_neighbors(nbrs[idx[t]]);
        std::vector<int> next;
        std::set_intersection(common.begin(), common.end(), other.begin(), other.end(),
                              std::back_inserter(next));
        common = std::move(next);
      }
      if (static_cast<int>(common.size()) >= a) return true;
      int t = b - 1;
      while (t >= 0 && idx[t] == deg - b + t) --t;
      if (t < 0) break;
      ++idx[t];
      for (int u = t + 1; u < b; ++u) idx[u] = idx[u - 1] + 1;
    }
  }
  return false;
}

std::optional<int> distance(const BipartiteGraph& graph, Vertex x, Vertex y) {
  const int n = graph.n_left();
  auto id = [n](Vertex v) { return v.side == Side::kLeft ? v.index : n + v.index; };
  check_range(x.index, x.side == Side::kLeft ? n : graph.n_right(), "vertex");
  check_range(y.index, y.side == Side::kLeft ? n : graph.n_right(), "vertex");
  const int source = id(x);
  const int target = id(y);
  if (source == target) return 0;

  std::vector<int> dist(n + graph.n_right(), -1);
  std::deque<int> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const int cur = queue.front();
    queue.pop_front();
    const auto& nbrs =
        cur < n ? graph.right_neighbors(cur) : graph.left_neighbors(cur - n);
    const int offset = cur < n ? n : 0;
    for (int w : nbrs) {
      const int next = w + offset;
      if (dist[next] >= 0) continue;
      dist[next] = dist[cur] + 1;
      if (next == target) return dist[next];
      queue.push_back(next);
    }
  }
  return std::nullopt;
}

Classification classify(const BipartiteGraph& graph, const DegreeSequence& ds) {
  return classify(graph, ds, ds.total() >= 2 ? thresholds(ds) : Thresholds{});
}

Classification classify(const BipartiteGraph& graph, const DegreeSequence& ds,
                        const Thresholds& th) {
  if (!graph.conforms_to(ds)) {
    throw Error(ErrorCode::kNonConforming,
                "graph degrees do not match the degree sequence");
  }
  Classification out;
  out.four_cycles = four_cycles(graph);
  out.d = static_cast<std::int64_t>(out.four_cycles.size());
  out.n2 = th.n2;

  std::vector<std::vector<int>> columns;
  columns.reserve(graph.n_right());
  for (int i = 0; i < graph.n_right(); ++i) columns.push_back(graph.left_neighbors(i));
  std::sort(columns.begin(), columns.end());
  out.in_b0 = std::adjacent_find(columns.begin(), columns.end()) == columns.end();

  // K_{3,2} and K_{2,3} each contain three 4-cycles.
  if (out.d >= 3 && has_copy(graph, 3, 2)) out.failed_properties.push_back(Property::kNoK32);
  if (out.d >= 3 && has_copy(graph, 2, 3)) out.failed_properties.push_back(Property::kNoK23);

  std::vector<int> right_use(graph.n_right(), 0);
  bool shared_right = false;
  for (const auto& c : out.four_cycles) {
    for (int e : c.right) shared_right |= ++right_use[e] > 1;
  }
  if (shared_right) out.failed_properties.push_back(Property::kDisjointRight);

  if (!spread_left_holds(out.four_cycles)) {
    out.failed_properties.push_back(Property::kSpreadLeft);
  }
  if (ds.total() >= 2 && out.d > out.n2) {
    out.failed_properties.push_back(Property::kBoundedCount);
  }
  out.in_bplus = out.failed_properties.empty();
  return out;
}

HyperProperties hyper_properties(const Hypergraph& hypergraph) {
  HyperProperties out;
  std::vector<std::vector<int>> edges = hypergraph.edges;
  for (auto& e : edges) {
    std::sort(e.begin(), e.end());
    for (int v : e) check_range(v, hypergraph.n, "vertex");
  }

  for (const auto& e : edges) {
    for (std::size_t a = 0; a + 1 < e.size(); ++a) {
      if (e[a] == e[a + 1] && (a == 0 || e[a - 1] != e[a])) ++out.loops;
    }
  }
  {
    auto sorted = edges;
    std::sort(sorted.begin(), sorted.end());
    const auto distinct = std::unique(sorted.begin(), sorted.end()) - sorted.begin();
    out.repeated_edges = static_cast<std::int64_t>(sorted.size()) - distinct;
  }

  // Each edge contributes once to every distinct link it contains.
  std::map<std::array<int, 2>, std::int64_t> link_mult;
  std::vector<std::vector<std::array<int, 2>>> links_of_edge(edges.size());
  for (std::size_t idx = 0; idx < edges.size(); ++idx) {
    const auto& e = edges[idx];
    auto& links = links_of_edge[idx];
    for (std::size_t a = 0; a < e.size(); ++a) {
      for (std::size_t b = a + 1; b < e.size(); ++b) links.push_back({e[a], e[b]});
    }
    std::sort(links.begin(), links.end());
    links.erase(std::unique(links.begin(), links.end()), links.end());
    for (const auto& link : links) ++link_mult[link];
  }
  for (const auto& [link, mult] : link_mult) {
    out.max_link_multiplicity = std::max(out.max_link_multiplicity, mult);
    if (mult == 2) out.double_links.push_back(link);
  }

  bool pairwise_le1 = true;
  bool pairwise_le2 = true;
  for (std::size_t a = 0; a < edges.size(); ++a) {
    for (std::size_t b = a + 1; b < edges.size(); ++b) {
      const std::size_t common = intersection_size(edges[a], edges[b]);
      pairwise_le1 &= common <= 1;
      pairwise_le2 &= common <= 2;
    }
  }
  out.is_simple = out.loops == 0 && out.repeated_edges == 0;
  out.is_linear = out.loops == 0 && pairwise_le1;

  // (i)'..(v)'
  if (!pairwise_le2) out.failed_dual.push_back(Property::kNoK32);
  if (out.max_link_multiplicity > 2) out.failed_dual.push_back(Property::kNoK23);

  std::map<std::array<int, 2>, bool> is_double;
  for (const auto& link : out.double_links) is_double[link] = true;
  bool one_per_edge = true;
  for (const auto& links : links_of_edge) {
    int doubles = 0;
    for (const auto& link : links) doubles += is_double.count(link) ? 1 : 0;
    one_per_edge &= doubles <= 1;
  }
  if (!one_per_edge) out.failed_dual.push_back(Property::kDisjointRight);

  std::vector<std::vector<int>> partners(hypergraph.n);
  for (const auto& link : out.double_links) {
    if (link[0] == link[1]) continue;
    partners[link[0]].push_back(link[1]);
    partners[link[1]].push_back(link[0]);
  }
  bool spread = true;
  for (const auto& p : partners) {
    if (p.size() >= 3) spread = false;
    if (p.size() == 2 && (partners[p[0]].size() != 1 || partners[p[1]].size() != 1)) {
      spread = false;
    }
  }
  if (!spread) out.failed_dual.push_back(Property::kSpreadLeft);

  std::vector<std::int64_t> degrees(hypergraph.n, 0);
  bool uniform = !edges.empty();
  for (const auto& e : edges) {
    uniform &= e.size() == edges.front().size();
    for (int v : e) ++degrees[v];
  }
  if (uniform && edges.front().size() >= 2) {
    const DegreeSequence ds(degrees, static_cast<int>(edges.front().size()));
    if (ds.total() >= 2 &&
        static_cast<std::int64_t>(out.double_links.size()) > thresholds(ds).n2) {
      out.failed_dual.push_back(Property::kBoundedCount);
    }
  }
  return out;
}

}  // namespace linhyper
