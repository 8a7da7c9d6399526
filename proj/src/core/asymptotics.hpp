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

// Closed-form enumeration estimates and the bounds used alongside them.
// Everything is evaluated in log space; the error arguments are reported
// but never enforced, since the formulas are asymptotic statements.

#ifndef LINHYPER_CORE_ASYMPTOTICS_HPP_
#define LINHYPER_CORE_ASYMPTOTICS_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "degree_model.hpp"

namespace linhyper {

struct Estimate {
  double log_value = 0.0;
  // exp(log_value), +infinity when that overflows a double.
  double value = 1.0;
  double leading_log = 0.0;
  // Named exponent terms; log_value = leading_log + their sum.
  std::vector<std::pair<std::string, double>> corrections;
  // Argument of the O(.) error term.
  double error_scale = 0.0;
};

// ln( M! / ((M/r)! (r!)^{M/r} prod k_i!) ). Throws Error(kNotDivisible).
double log_leading_term(const DegreeSequence& ds);

// Linear r-uniform hypergraphs: leading term times
// exp(-(r-1)M_2/2M - (r-1)^2 M_2^2 / 4M^2).
Estimate estimate_linear(const DegreeSequence& ds);
// Simple r-uniform hypergraphs: leading term times exp(-(r-1)M_2/2M).
Estimate estimate_simple(const DegreeSequence& ds);
// Conforming bipartite graphs; the simple estimate times (M/r)!.
Estimate estimate_bigraph(const DegreeSequence& ds);
// Probability that a uniform conforming bipartite graph has no 4-cycle.
Estimate girth6_probability(const DegreeSequence& ds);

// (r-1)^2 M_2^2 / (4 d M^2), the leading factor of |C_d| / |C_{d-1}|.
double switching_ratio(const DegreeSequence& ds, std::int64_t d);

// Degree sequence of a bipartite graph on {a_1..a_n} u {b_1..b_m}.
struct BipartiteDegrees {
  std::vector<std::int64_t> left;
  std::vector<std::int64_t> right;
};

// Upper bound on P(L is a subgraph) for a uniform bipartite graph with
// degrees g, where `sub` holds the degrees of L:
//   prod (g_i)_{l_i} prod (g'_j)_{l'_j} / (E_g - Gamma)_{E_l},
//   Gamma = 2 g_max (g_max + l_max - 1) + 2.
// Throws Error(kPreconditionFailed) when E_g - Gamma < E_l.
Rational mckay_upper_bound(const BipartiteDegrees& g, const BipartiteDegrees& sub);

struct SumBounds {
  double sigma1 = 0.0;
  double sigma2 = 0.0;
  // n_0 .. n_N
  std::vector<double> n_values;
  double total = 0.0;
};

// Sandwich for sum_i n_i with n_0 = 1, n_i = (A(i) - (i-1) C(i)) n_{i-1} / i.
// a[i-1] and c[i-1] hold A(i) and C(i). Throws Error(kPreconditionFailed)
// naming the failed hypotheses, and Error(kInvariantViolation) should the
// computed sum fall outside [sigma1, sigma2].
SumBounds sum_bounds(std::span<const double> a, std::span<const double> c, double c_hat);

}  // namespace linhyper

#endif  // LINHYPER_CORE_ASYMPTOTICS_HPP_
