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
#include <numbers>
#include <random>

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <gtest/gtest.h>

#include "asymptotics.hpp"
#include "error.hpp"
#include "exact_oracle.hpp"
#include "oracles.hpp"

namespace linhyper {
namespace {

using Float = boost::multiprecision::cpp_dec_float_50;

std::vector<std::int64_t> repeat(std::int64_t value, int count) {
  return std::vector<std::int64_t>(count, value);
}

double correction(const Estimate& est, const std::string& name) {
  for (const auto& [n, v] : est.corrections)
    if (n == name) return v;
  ADD_FAILURE() << "no correction " << name;
  return 0.0;
}

// The formulas evaluated from exact integers and rationals, then one log.
struct ExactForms {
  Float log_leading;
  Float log_bigraph_leading;
  Float loop;         // (r-1) M2 / 2M
  Float double_link;  // (r-1)^2 M2^2 / 4M^2
};

ExactForms exact_forms(const DegreeSequence& ds) {
  const std::int64_t big_m = ds.total();
  const std::int64_t m = big_m / ds.r();
  BigInt den = oracle::fact(m);
  BigInt den_b = 1;
  for (std::int64_t i = 0; i < m; ++i) den_b *= oracle::fact(ds.r());
  for (auto kj : ds.k()) den_b *= oracle::fact(kj);
  den *= den_b;
  BigInt m2 = 0;
  for (auto kj : ds.k()) m2 += BigInt(kj) * (kj - 1);
  ExactForms f;
  f.log_leading = log(Float(oracle::fact(big_m)) / Float(den));
  f.log_bigraph_leading = log(Float(oracle::fact(big_m)) / Float(den_b));
  if (big_m > 0) {
    const Rational loop(BigInt(ds.r() - 1) * m2, BigInt(2 * big_m));
    const Rational dl(BigInt(ds.r() - 1) * (ds.r() - 1) * m2 * m2, BigInt(4) * big_m * big_m);
    f.loop = Float(numerator(loop)) / Float(denominator(loop));
    f.double_link = Float(numerator(dl)) / Float(denominator(dl));
  }
  return f;
}

TEST(LeadingTerm, Examples) {
  EXPECT_NEAR(log_leading_term(DegreeSequence(repeat(1, 6), 3)), std::log(10.0), 1e-12);
  const double threes = 479001600.0 / (24.0 * 1296.0 * 1296.0);
  EXPECT_NEAR(log_leading_term(DegreeSequence(repeat(3, 4), 3)), std::log(threes), 1e-12);
  EXPECT_EQ(log_leading_term(DegreeSequence({}, 3)), 0.0);
  EXPECT_THROW(log_leading_term(DegreeSequence(repeat(1, 4), 3)), Error);
}

TEST(EstimateLinear, Examples) {
  const Estimate ones = estimate_linear(DegreeSequence(repeat(1, 6), 3));
  EXPECT_NEAR(ones.value, 10.0, 1e-9);
  const Estimate twos = estimate_linear(DegreeSequence(repeat(2, 300), 3));
  EXPECT_DOUBLE_EQ(correction(twos, "loop_term"), -1.0);
  // (r-1)^2 M2^2 / 4M^2 = 4 * 600^2 / (4 * 600^2)
  EXPECT_DOUBLE_EQ(correction(twos, "double_link_term"), -1.0);
  // M2 = 24: loop term 2 * 24 / 24 = 2, double-link term 4 * 576 / 576 = 4.
  const Estimate threes = estimate_linear(DegreeSequence(repeat(3, 4), 3));
  const double threes_leading = 479001600.0 / (24.0 * 1296.0 * 1296.0);
  EXPECT_NEAR(threes.value, threes_leading * std::exp(-6.0), 1e-12);
  EXPECT_GT(threes.error_scale, 1.0);
  const Estimate empty = estimate_linear(DegreeSequence({}, 3));
  EXPECT_EQ(empty.value, 1.0);
  EXPECT_EQ(empty.error_scale, 0.0);
  EXPECT_THROW(estimate_linear(DegreeSequence(repeat(1, 4), 3)), Error);
}

TEST(EstimateSimple, Examples) {
  EXPECT_NEAR(estimate_simple(DegreeSequence(repeat(1, 6), 3)).value, 10.0, 1e-9);
  const Estimate e = estimate_simple(DegreeSequence(repeat(2, 10), 4));
  EXPECT_DOUBLE_EQ(correction(e, "loop_term"), -1.5);
  const DegreeSequence flat(repeat(1, 12), 4);
  EXPECT_DOUBLE_EQ(estimate_simple(flat).log_value, estimate_linear(flat).log_value);
  EXPECT_DOUBLE_EQ(estimate_simple(flat).log_value, log_leading_term(flat));
}

TEST(EstimateBigraph, Examples) {
  EXPECT_NEAR(estimate_bigraph(DegreeSequence(repeat(1, 6), 3)).value, 20.0, 1e-9);
  const Estimate threes = estimate_bigraph(DegreeSequence(repeat(3, 4), 3));
  EXPECT_NEAR(threes.value, 479001600.0 / (1296.0 * 1296.0) * std::exp(-2.0), 1e-9);
  EXPECT_DOUBLE_EQ(threes.error_scale, 81.0 / 12.0);
}

TEST(Girth6, Examples) {
  EXPECT_EQ(girth6_probability(DegreeSequence(repeat(1, 9), 3)).value, 1.0);
  for (int n : {3, 30, 300}) {
    EXPECT_NEAR(girth6_probability(DegreeSequence(repeat(2, n), 3)).value, std::exp(-1.0), 1e-12);
  }
  for (int n : {2, 20, 200}) {
    EXPECT_NEAR(girth6_probability(DegreeSequence(repeat(2, n), 4)).value, 0.10540, 1e-5);
  }
}

TEST(SwitchingRatio, Examples) {
  const DegreeSequence twos(repeat(2, 30), 3);
  EXPECT_DOUBLE_EQ(switching_ratio(twos, 1), 1.0);
  EXPECT_DOUBLE_EQ(switching_ratio(twos, 2), 0.5);
  EXPECT_EQ(switching_ratio(DegreeSequence(repeat(1, 9), 3), 3), 0.0);
}

TEST(Estimate, Overflow) {
  const Estimate huge = estimate_bigraph(DegreeSequence(repeat(2, 3000), 3));
  EXPECT_TRUE(std::isinf(huge.value));
  EXPECT_TRUE(std::isfinite(huge.log_value));
}

TEST(AsymptoticsProperties, RandomSequences) {
  std::mt19937_64 rng(31);
  int checked = 0;
  while (checked < 400) {
    const int r = 2 + static_cast<int>(rng() % 4);
    const int n = static_cast<int>(rng() % 40);
    std::vector<std::int64_t> k(n);
    for (auto& x : k) x = static_cast<std::int64_t>(rng() % 5);
    const DegreeSequence ds(k, r);
    if (!ds.divisible() || ds.total() > 100) continue;
    ++checked;
    const Estimate lin = estimate_linear(ds);
    const Estimate sim = estimate_simple(ds);
    const Estimate big = estimate_bigraph(ds);
    const Estimate g6 = girth6_probability(ds);
    for (const Estimate* e : {&lin, &sim, &big, &g6}) {
      double sum = e->leading_log;
      for (const auto& [name, v] : e->corrections) sum += v;
      EXPECT_NEAR(e->log_value, sum, 1e-12 * (1 + std::abs(sum)));
      EXPECT_GE(e->error_scale, 0.0);
    }
    EXPECT_LE(lin.log_value, sim.log_value);
    const std::int64_t m = ds.total() / r;
    EXPECT_NEAR(sim.log_value + std::lgamma(m + 1.0), big.log_value,
                1e-12 * (1 + std::abs(big.log_value)));
    EXPECT_NEAR(g6.log_value, lin.log_value - sim.log_value, 1e-12 * (1 + std::abs(sim.log_value)));
    EXPECT_GT(g6.value, 0.0);
    EXPECT_LE(g6.value, 1.0);

    const ExactForms f = exact_forms(ds);
    const double lin_exact = static_cast<double>(f.log_leading - f.loop - f.double_link);
    const double sim_exact = static_cast<double>(f.log_leading - f.loop);
    const double big_exact = static_cast<double>(f.log_bigraph_leading - f.loop);
    // Relative error of the estimate itself: |exp(a - b) - 1| ~ |a - b|.
    EXPECT_LT(std::abs(lin.log_value - lin_exact), 1e-10);
    EXPECT_LT(std::abs(sim.log_value - sim_exact), 1e-10);
    EXPECT_LT(std::abs(big.log_value - big_exact), 1e-10);
    if (ds.total() > 0) {
      EXPECT_NEAR(switching_ratio(ds, 1), static_cast<double>(f.double_link),
                  1e-12 * (1 + static_cast<double>(f.double_link)));
    }
  }
}

TEST(McKay, Examples) {
  const BipartiteDegrees g{repeat(1, 30), repeat(3, 10)};
  BipartiteDegrees l{repeat(0, 30), repeat(0, 10)};
  l.left[0] = 1;
  l.right[0] = 1;
  EXPECT_EQ(mckay_upper_bound(g, l), Rational(3, 10));
  const BipartiteDegrees none{repeat(0, 30), repeat(0, 10)};
  EXPECT_EQ(mckay_upper_bound(g, none), 1);

  const BipartiteDegrees small{repeat(1, 6), repeat(3, 2)};
  BipartiteDegrees one{repeat(0, 6), repeat(0, 2)};
  one.left[0] = 1;
  one.right[0] = 1;
  try {
    mckay_upper_bound(small, one);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kPreconditionFailed);
  }
}

TEST(McKay, DominatesExactProbabilities) {
  // Maximum degree two and M = 12 leave room for Gamma = 10 plus two edges
  // of a matching.
  const std::vector<std::int64_t> k{2, 2, 2, 2, 2, 1, 1};
  const DegreeSequence ds(k, 2);
  const BipartiteDegrees g{k, repeat(2, 6)};
  for (int a = 0; a < 7; ++a) {
    for (int b = 0; b < 6; ++b) {
      BipartiteDegrees l{repeat(0, 7), repeat(0, 6)};
      l.left[a] = l.right[b] = 1;
      const std::vector<Edge> one{{a, b}};
      EXPECT_LE(subgraph_probability(ds, one), mckay_upper_bound(g, l));
    }
  }
  const std::vector<Edge> pair{{0, 0}, {5, 1}};
  BipartiteDegrees l{repeat(0, 7), repeat(0, 6)};
  l.left[0] = l.left[5] = l.right[0] = l.right[1] = 1;
  EXPECT_LE(subgraph_probability(ds, pair), mckay_upper_bound(g, l));
  l.left[1] = l.right[2] = 1;
  EXPECT_THROW(mckay_upper_bound(g, l), Error);

  // The worked example: P(a1 b1) = 1/10 by symmetry.
  const BipartiteDegrees big{repeat(1, 30), repeat(3, 10)};
  BipartiteDegrees single{repeat(0, 30), repeat(0, 10)};
  single.left[0] = single.right[0] = 1;
  EXPECT_LE(Rational(1, 10), mckay_upper_bound(big, single));
}

TEST(McKay, PatternBoundDominatesExpectation) {
  // Gamma for K_{3,2} already exceeds M here.
  EXPECT_THROW(mckay_pattern_bound(DegreeSequence(repeat(3, 6), 3), Pattern::kK32), Error);
  const DegreeSequence ds(repeat(2, 21), 3);
  EXPECT_GT(mckay_pattern_bound(ds, Pattern::kK32), 0);
  EXPECT_EQ(mckay_pattern_bound(ds, Pattern::kK23), 0);
}

TEST(SumBounds, Examples) {
  const std::vector<double> zero{0.0, 0.0};
  const SumBounds z = sum_bounds(zero, zero, 0.05);
  EXPECT_EQ(z.n_values, (std::vector<double>{1.0, 0.0, 0.0}));
  const double tail = std::pow(0.1 * std::numbers::e, 2);
  EXPECT_NEAR(z.sigma1, 1.0 - tail, 1e-15);
  EXPECT_NEAR(z.sigma2, 1.0 + tail, 1e-15);

  const int n = 60;
  const double a = 2.0;
  const std::vector<double> av(n, a), cv(n, 0.0);
  const SumBounds s = sum_bounds(av, cv, 0.1);
  double partial = 0.0, term = 1.0;
  for (int i = 0; i <= n; ++i) {
    partial += term;
    term *= a / (i + 1);
  }
  EXPECT_NEAR(s.total, partial, 1e-12);
  // Both bounds collapse onto e^2 here, so only rounding separates them.
  EXPECT_NEAR(s.sigma1, std::exp(2.0), 1e-12);
  EXPECT_NEAR(s.sigma2, std::exp(2.0), 1e-12);
}

TEST(SumBounds, ReportsFailedHypotheses) {
  const std::vector<double> a{1.0, 1.0}, c{0.0, 0.0};
  try {
    sum_bounds(a, c, 0.4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kPreconditionFailed);
    EXPECT_NE(std::string(e.what()).find("c_hat"), std::string::npos);
  }
  try {
    sum_bounds(a, c, 0.2);  // A_2 / N = 0.5 > c_hat
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("A_2/N"), std::string::npos);
  }
  const std::vector<double> one{1.0};
  EXPECT_THROW(sum_bounds(one, one, 0.1), Error);
  const std::vector<double> neg{-1.0, 0.0, 0.0};
  EXPECT_THROW(sum_bounds(neg, std::vector<double>(3, 0.0), 0.1), Error);
}

TEST(SumBounds, RandomValidInputs) {
  std::mt19937_64 rng(33);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int checked = 0;
  while (checked < 500) {
    const int n = 2 + static_cast<int>(rng() % 80);
    const double c_hat = 0.001 + unit(rng) * 0.33;
    std::vector<double> a(n), c(n);
    for (int i = 0; i < n; ++i) {
      a[i] = unit(rng) * c_hat * n;
      c[i] = (unit(rng) * 2 - 1) * c_hat;
      if (a[i] - i * c[i] < 0) c[i] = 0.999 * a[i] / i;
    }
    if (c_hat >= 1.0 / 3.0) continue;
    ++checked;
    const SumBounds s = sum_bounds(a, c, c_hat);
    EXPECT_LE(s.sigma1, s.total);
    EXPECT_LE(s.total, s.sigma2);
  }
}

}  // namespace
}  // namespace linhyper
