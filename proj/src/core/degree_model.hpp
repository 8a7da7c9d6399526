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

// Degree sequences (r, k) and the scalar quantities derived from them.

#ifndef LINHYPER_CORE_DEGREE_MODEL_HPP_
#define LINHYPER_CORE_DEGREE_MODEL_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace linhyper {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Left degrees k_1..k_n together with the common right degree r. Immutable
// once constructed. Divisibility r | M is not required here; only the
// hypergraph counts need it (see edge_count()).
class DegreeSequence {
 public:
  // Throws Error(kInvalidR) if r < 2 and Error(kNegativeDegree) if some
  // entry of k is negative.
  DegreeSequence(std::vector<std::int64_t> k, int r);

  int r() const noexcept { return r_; }
  std::span<const std::int64_t> k() const noexcept { return k_; }
  std::size_t n() const noexcept { return k_.size(); }
  // M = sum of k.
  std::int64_t total() const noexcept { return total_; }
  std::int64_t k_max() const noexcept { return k_max_; }
  bool divisible() const noexcept { return total_ % r_ == 0; }

  friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;

 private:
  std::vector<std::int64_t> k_;
  int r_;
  std::int64_t total_ = 0;
  std::int64_t k_max_ = 0;
};

// Falling factorial (a)_b = a(a-1)...(a-b+1); (a)_0 = 1 and (a)_b = 0 when
// 0 <= a < b.
BigInt falling_factorial(std::int64_t a, std::int64_t b);

// M_t = sum_i (k_i)_t. Requires t >= 1.
BigInt moment(const DegreeSequence& ds, int t);

// Number of right vertices M/r; throws Error(kNotDivisible) if r does not
// divide M.
std::int64_t edge_count(const DegreeSequence& ds);

// N2 bounds the number of 4-cycles admitted into the well-behaved class;
// Q1 and Q2 are the two cut-offs it is assembled from (N2 = 3 * Q1).
// Logarithms are natural.
struct Thresholds {
  std::int64_t n2 = 0;
  std::int64_t q1 = 0;
  std::int64_t q2 = 0;
  // r^4 k_max^4 (k_max + r) / M. Reported only; small values indicate the
  // asymptotic formulas are in their regime of validity.
  double sparsity_indicator = 0.0;
};

// Throws Error(kDegenerateM) when M < 2.
Thresholds thresholds(const DegreeSequence& ds);

}  // namespace linhyper

#endif  // LINHYPER_CORE_DEGREE_MODEL_HPP_
