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

#include "asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <boost/math/special_functions/gamma.hpp>

#include "error.hpp"

namespace linhyper {

namespace {

double log_factorial(std::int64_t n) {
  return boost::math::lgamma(static_cast<double>(n) + 1.0);
}

double to_double(const Rational& q) { return static_cast<double>(q); }

// (r-1) M_2 / (2M)
Rational loop_exponent(const DegreeSequence& ds) {
  if (ds.total() == 0) return 0;
  return Rational(BigInt(ds.r() - 1) * moment(ds, 2), BigInt(2 * ds.total()));
}

// (r-1)^2 M_2^2 / (4M^2)
Rational double_link_exponent(const DegreeSequence& ds) {
  if (ds.total() == 0) return 0;
  const BigInt m2 = moment(ds, 2);
  const BigInt rm1 = ds.r() - 1;
  const BigInt big_m = ds.total();
  return Rational(rm1 * rm1 * m2 * m2, 4 * big_m * big_m);
}

double linear_error_scale(const DegreeSequence& ds) {
  if (ds.total() == 0) return 0.0;
  const double r = ds.r();
  const double kmax = static_cast<double>(ds.k_max());
  return std::pow(r, 4) * std::pow(kmax, 4) * (kmax + r) / static_cast<double>(ds.total());
}

double log_bigraph_leading(const DegreeSequence& ds) {
  const std::int64_t m = edge_count(ds);
  double log_value = log_factorial(ds.total()) - static_cast<double>(m) * log_factorial(ds.r());
  for (std::int64_t kj : ds.k()) log_value -= log_factorial(kj);
  return log_value;
}

Estimate assemble(double leading_log,
                  std::vector<std::pair<std::string, double>> corrections,
                  double error_scale) {
  Estimate est;
  est.leading_log = leading_log;
  est.log_value = leading_log;
  for (const auto& [name, term] : corrections) est.log_value += term;
  est.corrections = std::move(corrections);
  est.error_scale = error_scale;
  est.value = est.log_value > std::log(std::numeric_limits<double>::max())
                  ? std::numeric_limits<double>::infinity()
                  : std::exp(est.log_value);
  return est;
}

}  // namespace

double log_leading_term(const DegreeSequence& ds) {
  return log_bigraph_leading(ds) - log_factorial(edge_count(ds));
}

Estimate estimate_linear(const DegreeSequence& ds) {
  return assemble(log_leading_term(ds),
                  {{"loop_term", -to_double(loop_exponent(ds))},
                   {"double_link_term", -to_double(double_link_exponent(ds))}},
                  linear_error_scale(ds));
}

Estimate estimate_simple(const DegreeSequence& ds) {
  const double r = ds.r();
  const double kmax = static_cast<double>(ds.k_max());
  const double scale =
      ds.total() == 0 ? 0.0 : std::pow(r, 4) * std::pow(kmax, 3) / static_cast<double>(ds.total());
  return assemble(log_leading_term(ds), {{"loop_term", -to_double(loop_exponent(ds))}}, scale);
}

Estimate estimate_bigraph(const DegreeSequence& ds) {
  const double r = ds.r();
  const double kmax = static_cast<double>(ds.k_max());
  const double scale =
      ds.total() == 0 ? 0.0 : r * r * kmax * kmax / static_cast<double>(ds.total());
  return assemble(log_bigraph_leading(ds), {{"loop_term", -to_double(loop_exponent(ds))}},
                  scale);
}

Estimate girth6_probability(const DegreeSequence& ds) {
  edge_count(ds);
  return assemble(0.0, {{"double_link_term", -to_double(double_link_exponent(ds))}},
                  linear_error_scale(ds));
}

double switching_ratio(const DegreeSequence& ds, std::int64_t d) {
  if (d < 1) throw Error(ErrorCode::kInvalidArgument, "switching_ratio needs d >= 1");
  if (ds.total() <= 0) throw Error(ErrorCode::kInvalidArgument, "switching_ratio needs M > 0");
  return to_double(double_link_exponent(ds) / d);
}

Rational mckay_upper_bound(const BipartiteDegrees& g, const BipartiteDegrees& sub) {
  if (sub.left.size() != g.left.size() || sub.right.size() != g.right.size()) {
    throw Error(ErrorCode::kInvalidArgument, "subgraph degrees must match the vertex sets");
  }
  std::int64_t e_g = 0;
  std::int64_t e_sub = 0;
  std::int64_t g_max = 0;
  std::int64_t sub_max = 0;
  for (std::int64_t x : g.left) {
    e_g += x;
    g_max = std::max(g_max, x);
  }
  for (std::int64_t x : g.right) g_max = std::max(g_max, x);
  for (std::int64_t x : sub.left) {
    e_sub += x;
    sub_max = std::max(sub_max, x);
  }
  for (std::int64_t x : sub.right) sub_max = std::max(sub_max, x);

  const std::int64_t gamma = 2 * g_max * (g_max + sub_max - 1) + 2;
  if (e_g - gamma < e_sub) {
    throw Error(ErrorCode::kPreconditionFailed,
                "E_g - Gamma = " + std::to_string(e_g - gamma) + " < E_l = " +
                    std::to_string(e_sub));
  }
  BigInt numerator = 1;
  for (std::size_t i = 0; i < g.left.size(); ++i) {
    numerator *= falling_factorial(g.left[i], sub.left[i]);
  }
  for (std::size_t j = 0; j < g.right.size(); ++j) {
    numerator *= falling_factorial(g.right[j], sub.right[j]);
  }
  return Rational(numerator, falling_factorial(e_g - gamma, e_sub));
}

SumBounds sum_bounds(std::span<const double> a, std::span<const double> c, double c_hat) {
  const std::size_t count = a.size();
  std::string failed;
  auto note = [&failed](const std::string& what) {
    failed += failed.empty() ? what : "; " + what;
  };
  if (c.size() != count) note("A and C must have the same length");
  if (count < 2) note("N >= 2");
  if (!(c_hat > 0.0 && c_hat < 1.0 / 3.0)) note("0 < c_hat < 1/3");
  if (failed.empty()) {
    for (std::size_t i = 1; i <= count; ++i) {
      if (a[i - 1] < 0.0) note("A(" + std::to_string(i) + ") >= 0");
      if (a[i - 1] - static_cast<double>(i - 1) * c[i - 1] < 0.0) {
        note("A(" + std::to_string(i) + ") - (i-1)C(i) >= 0");
      }
    }
  }
  double a1 = 0, a2 = 0, c1 = 0, c2 = 0;
  if (failed.empty()) {
    a1 = *std::min_element(a.begin(), a.end());
    a2 = *std::max_element(a.begin(), a.end());
    c1 = *std::min_element(c.begin(), c.end());
    c2 = *std::max_element(c.begin(), c.end());
    if (std::max({a2 / static_cast<double>(count), std::abs(c1), std::abs(c2)}) > c_hat) {
      note("max{A_2/N, |C_1|, |C_2|} <= c_hat");
    }
  }
  if (!failed.empty()) throw Error(ErrorCode::kPreconditionFailed, failed);

  SumBounds out;
  out.n_values.resize(count + 1);
  out.n_values[0] = 1.0;
  for (std::size_t i = 1; i <= count; ++i) {
    out.n_values[i] = (a[i - 1] - static_cast<double>(i - 1) * c[i - 1]) * out.n_values[i - 1] /
                      static_cast<double>(i);
  }
  for (double v : out.n_values) out.total += v;
  const double tail = std::pow(2.0 * std::numbers::e * c_hat, static_cast<double>(count));
  out.sigma1 = std::exp(a1 - 0.5 * a1 * c2) - tail;
  out.sigma2 = std::exp(a2 - 0.5 * a2 * c1 + 0.5 * a2 * c1 * c1) + tail;
  // The sandwich is exact; allow for rounding in the three evaluations.
  const double slack = 1e-12 * std::max(1.0, std::abs(out.total));
  if (!(out.sigma1 <= out.total + slack && out.total <= out.sigma2 + slack)) {
    throw Error(ErrorCode::kInvariantViolation,
                "sum " + std::to_string(out.total) + " outside [" + std::to_string(out.sigma1) +
                    ", " + std::to_string(out.sigma2) + "]");
  }
  return out;
}

}  // namespace linhyper
