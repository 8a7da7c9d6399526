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

#include "degree_model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "error.hpp"

namespace linhyper {

namespace {

BigInt ceil_div(const BigInt& num, const BigInt& den) {
  return (num + den - 1) / den;
}

std::int64_t to_int64(const BigInt& value) {
  if (value > std::numeric_limits<std::int64_t>::max()) {
    throw Error(ErrorCode::kInvalidArgument, "threshold exceeds 64-bit range");
  }
  return static_cast<std::int64_t>(value);
}

}  // namespace

DegreeSequence::DegreeSequence(std::vector<std::int64_t> k, int r)
    : k_(std::move(k)), r_(r) {
  if (r_ < 2) {
    throw Error(ErrorCode::kInvalidR,
                "edge size r must be at least 2, got " + std::to_string(r_));
  }
  for (std::size_t j = 0; j < k_.size(); ++j) {
    if (k_[j] < 0) {
      throw Error(ErrorCode::kNegativeDegree,
                  "k[" + std::to_string(j + 1) + "] = " + std::to_string(k_[j]));
    }
    total_ += k_[j];
    k_max_ = std::max(k_max_, k_[j]);
  }
}

BigInt falling_factorial(std::int64_t a, std::int64_t b) {
  BigInt result = 1;
  for (std::int64_t i = 0; i < b; ++i) {
    if (a - i <= 0) return 0;
    result *= a - i;
  }
  return result;
}

BigInt moment(const DegreeSequence& ds, int t) {
  if (t < 1) {
    throw Error(ErrorCode::kInvalidArgument, "moment order must be >= 1");
  }
  BigInt sum = 0;
  for (std::int64_t kj : ds.k()) {
    if (kj >= t) sum += falling_factorial(kj, t);
  }
  return sum;
}

std::int64_t edge_count(const DegreeSequence& ds) {
  if (!ds.divisible()) {
    throw Error(ErrorCode::kNotDivisible,
                "r = " + std::to_string(ds.r()) + " does not divide M = " +
                    std::to_string(ds.total()));
  }
  return ds.total() / ds.r();
}

Thresholds thresholds(const DegreeSequence& ds) {
  const std::int64_t m_total = ds.total();
  if (m_total < 2) {
    throw Error(ErrorCode::kDegenerateM,
                "thresholds need M >= 2, got M = " + std::to_string(m_total));
  }
  const BigInt big_m = m_total;
  const BigInt m2 = moment(ds, 2);
  const BigInt m4 = moment(ds, 4);
  const BigInt rm1 = ds.r() - 1;

  const auto log_term =
      static_cast<std::int64_t>(std::ceil(std::log(static_cast<double>(m_total))));
  const BigInt pair_term = ceil_div(2 * rm1 * rm1 * m2 * m2, big_m * big_m);
  const BigInt fused_term =
      ceil_div(rm1 * rm1 * rm1 * rm1 * m2 * m2 * m4, big_m * big_m * big_m * big_m);

  Thresholds th;
  th.q1 = std::max(log_term, to_int64(pair_term));
  th.q2 = std::max(log_term, to_int64(fused_term));
  th.n2 = 3 * th.q1;

  const double r = ds.r();
  const double kmax = static_cast<double>(ds.k_max());
  th.sparsity_indicator =
      std::pow(r, 4) * std::pow(kmax, 4) * (kmax + r) / static_cast<double>(m_total);
  return th;
}

}  // namespace linhyper
