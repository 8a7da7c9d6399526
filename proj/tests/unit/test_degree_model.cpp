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

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "degree_model.hpp"
#include "error.hpp"
#include "oracles.hpp"

namespace linhyper {
namespace {

std::vector<std::int64_t> repeat(std::int64_t value, int count) {
  return std::vector<std::int64_t>(count, value);
}

TEST(DegreeSequence, CachesTotalAndMax) {
  DegreeSequence ones(repeat(1, 6), 3);
  EXPECT_EQ(ones.total(), 6);
  EXPECT_EQ(ones.k_max(), 1);
  DegreeSequence fig({2, 3, 1, 2, 2, 2}, 3);
  EXPECT_EQ(fig.total(), 12);
  EXPECT_EQ(fig.k_max(), 3);
  DegreeSequence zeros({0, 0}, 3);
  EXPECT_EQ(zeros.total(), 0);
  EXPECT_EQ(zeros.k_max(), 0);
  EXPECT_EQ(zeros.n(), 2u);
}

TEST(DegreeSequence, RejectsBadInput) {
  try {
    DegreeSequence({1, -1}, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNegativeDegree);
  }
  try {
    DegreeSequence({1, 1}, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidR);
  }
  // Divisibility is only needed later.
  EXPECT_NO_THROW(DegreeSequence({1, 1, 1, 1}, 3));
}

TEST(Moment, Examples) {
  DegreeSequence ds({2, 3, 1}, 3);
  EXPECT_EQ(moment(ds, 2), 8);
  EXPECT_EQ(moment(ds, 3), 6);
  EXPECT_EQ(moment(DegreeSequence(repeat(1, 6), 3), 2), 0);
  EXPECT_THROW(moment(ds, 0), Error);
}

TEST(EdgeCount, Examples) {
  EXPECT_EQ(edge_count(DegreeSequence(repeat(1, 6), 3)), 2);
  EXPECT_EQ(edge_count(DegreeSequence(repeat(3, 4), 3)), 4);
  try {
    edge_count(DegreeSequence(repeat(1, 4), 3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotDivisible);
  }
}

TEST(Thresholds, Examples) {
  const Thresholds twos = thresholds(DegreeSequence(repeat(2, 10), 3));
  EXPECT_EQ(twos.q1, 8);
  EXPECT_EQ(twos.n2, 24);
  const Thresholds ones = thresholds(DegreeSequence(repeat(1, 30), 3));
  EXPECT_EQ(ones.q1, 4);
  EXPECT_EQ(ones.n2, 12);
  const Thresholds sixty = thresholds(DegreeSequence(repeat(2, 30), 3));
  EXPECT_DOUBLE_EQ(sixty.sparsity_indicator, 108.0);
  try {
    thresholds(DegreeSequence({1}, 3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDegenerateM);
  }
}

TEST(Thresholds, Q2MatchesDefinition) {
  // k = (3,3,3,3), r = 3: M = 12, M2 = 24, M4 = 0.
  const Thresholds th = thresholds(DegreeSequence(repeat(3, 4), 3));
  EXPECT_EQ(th.q2, 3);  // max{ceil(ln 12), 0}
  EXPECT_EQ(th.q1, 32);  // ceil(2 * 4 * 576 / 144)
  EXPECT_EQ(th.n2, 96);
}

TEST(DegreeModelProperties, RandomSequences) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    std::vector<std::int64_t> k(n);
    for (auto& x : k) x = static_cast<std::int64_t>(rng() % 7);
    const int r = 2 + static_cast<int>(rng() % 4);
    DegreeSequence ds(k, r);
    EXPECT_EQ(moment(ds, 1), ds.total());
    for (int t = 2; t <= 6; ++t) {
      EXPECT_LE(moment(ds, t), ds.k_max() * moment(ds, t - 1));
      if (t > ds.k_max()) EXPECT_EQ(moment(ds, t), 0);
    }
    if (ds.total() >= 2) {
      const Thresholds th = thresholds(ds);
      EXPECT_EQ(th.n2 % 3, 0);
      EXPECT_EQ(th.n2, 3 * th.q1);
      EXPECT_GE(th.n2 / 3, static_cast<std::int64_t>(std::ceil(std::log(ds.total()))));
      EXPECT_EQ(th.n2, oracle::n2(ds));
    }
  }
}

TEST(DegreeModel, LargeMomentsDoNotOverflow) {
  // M = 10^9: M2^2 M4 is about 10^42, far beyond 64 bits.
  std::vector<std::int64_t> k(1'000'000, 1000);
  DegreeSequence ds(k, 4);
  EXPECT_EQ(moment(ds, 2), BigInt(1'000'000) * 1000 * 999);
  const Thresholds th = thresholds(ds);
  // ceil(2 * 9 * M2^2 / M^2) and ceil(81 * M2^2 * M4 / M^4), exactly.
  const BigInt m = ds.total();
  const BigInt m2 = moment(ds, 2);
  const BigInt m4 = moment(ds, 4);
  const BigInt q1_num = 18 * m2 * m2, q1_den = m * m;
  const BigInt q2_num = 81 * m2 * m2 * m4, q2_den = m * m * m * m;
  EXPECT_EQ(th.q1, static_cast<std::int64_t>((q1_num + q1_den - 1) / q1_den));
  EXPECT_EQ(th.q2, static_cast<std::int64_t>((q2_num + q2_den - 1) / q2_den));
}

}  // namespace
}  // namespace linhyper
