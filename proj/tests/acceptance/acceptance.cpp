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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Criteria 1 and 4 go through the command-line tool.

#include <algorithm>
#include <array>
#include <bit>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <sys/wait.h>

#include <boost/math/distributions/chi_squared.hpp>
#include <json.hpp>

#include "asymptotics.hpp"
#include "bigraph.hpp"
#include "error.hpp"
#include "exact_oracle.hpp"
#include "switching.hpp"
#include "verify.hpp"

#ifndef LINHYPER_CLI
#error "LINHYPER_CLI must name the command-line binary"
#endif

namespace lh = linhyper;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

unsigned workers() { return std::max(1u, std::min(8u, std::thread::hardware_concurrency())); }

struct Run {
  int status = -1;
  std::string out;
  double seconds = 0.0;
};

Run run_cli(const std::string& args) {
  const auto start = Clock::now();
  const std::string cmd = std::string("\"") + LINHYPER_CLI + "\" " + args + " 2>&1";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  r.seconds = seconds_since(start);
  return r;
}

std::string fmt(double x, int precision = 4) {
  std::ostringstream os;
  os.precision(precision);
  os << x;
  return os.str();
}

Outcome criterion1() {
  struct Case {
    const char* k;
    std::map<std::string, std::string> want;
  };
  const std::vector<Case> cases{
      {"1,1,1,1,1,1", {{"count_b", "20"}, {"count_b0", "20"}, {"count_h", "10"}, {"count_l", "10"}}},
      {"3,3,3,3", {{"count_h", "1"}, {"count_l", "0"}}}};
  Outcome o{true, ""};
  for (const Case& c : cases) {
    const Run r = run_cli(std::string("exact -r 3 -k ") + c.k);
    if (r.status != 0) return {false, std::string("exit ") + std::to_string(r.status) + ": " + r.out};
    const auto j = nlohmann::json::parse(r.out);
    for (const auto& [key, value] : c.want) {
      if (j["report"][key] != value) {
        o.pass = false;
        o.detail += std::string("k=") + c.k + " " + key + "=" + j["report"][key].dump() + "; ";
      }
    }
    if (r.seconds >= 1.0) o.pass = false;
    o.detail += std::string("k=(") + c.k + ") " + fmt(r.seconds, 2) + " s; ";
  }
  return o;
}

Outcome criterion2(const lh::VerifyReport& rep, double secs) {
  int random = 0, bad = 0;
  std::string first;
  for (const auto& row : rep.rows) {
    random += row.instance.random;
    if (!row.ok()) {
      ++bad;
      if (first.empty()) first = row.failure;
    }
  }
  Outcome o;
  o.pass = rep.identities_ok && bad == 0 && random == 50 && secs < 300.0;
  o.detail = std::to_string(rep.rows.size()) + " instances (" + std::to_string(random) +
             " random), " + std::to_string(bad) + " failing, " + fmt(secs, 3) + " s" +
             (first.empty() ? "" : "; first failure: " + first);
  return o;
}

double rel_err(double est, const lh::BigInt& exact) {
  const double x = static_cast<double>(exact);
  if (x == 0.0) return est == 0.0 ? 0.0 : INFINITY;
  return std::abs(est - x) / x;
}

Outcome criterion3(const lh::VerifyReport& rep) {
  int checked = 0;
  double worst = 0.0;
  for (const auto& row : rep.rows) {
    const auto k = row.instance.ds.k();
    if (std::any_of(k.begin(), k.end(), [](std::int64_t x) { return x > 1; })) continue;
    ++checked;
    worst = std::max({worst, rel_err(row.est_linear.value, row.report->count_l),
                      rel_err(row.est_simple.value, row.report->count_h),
                      rel_err(row.est_bigraph.value, row.report->count_b)});
  }
  return {checked > 0 && worst <= 1e-9,
          std::to_string(checked) + " instances with M2=0, worst relative error " + fmt(worst)};
}

Outcome criterion4() {
  const auto path = std::filesystem::temp_directory_path() / "linhyper_two_link.json";
  {
    std::ofstream f(path);
    f << R"({"n_left":6,"n_right":4,"edges":[[1,1],[1,2],[2,1],[2,2],[2,3],[3,1],)"
      << R"([4,2],[4,4],[5,3],[5,4],[6,3],[6,4]]})";
  }
  const Run r = run_cli("classify --input \"" + path.string() + "\"");
  std::filesystem::remove(path);
  if (r.status != 0) return {false, "exit " + std::to_string(r.status) + ": " + r.out};
  const auto cls = nlohmann::json::parse(r.out)["classification"];
  const auto want = nlohmann::json::parse(
      R"([{"left":[1,2],"right":[1,2]},{"left":[5,6],"right":[3,4]}])");
  const bool pass = cls["d"] == 2 && cls["four_cycles"] == want && cls["in_bplus"] == true;
  return {pass, "d=" + cls["d"].dump() + " cycles=" + cls["four_cycles"].dump() +
                    " in_bplus=" + cls["in_bplus"].dump()};
}

// Criterion 5 ------------------------------------------------------------

struct SweepStats {
  std::int64_t graphs = 0;
  std::int64_t forward = 0;
  std::int64_t reverse = 0;
  std::int64_t unsound = 0;
  std::int64_t involution_failures = 0;
  std::int64_t landing_failures = 0;

  void add(const SweepStats& o) {
    graphs += o.graphs;
    forward += o.forward;
    reverse += o.reverse;
    unsound += o.unsound;
    involution_failures += o.involution_failures;
    landing_failures += o.landing_failures;
  }
};

void sweep_graph(const lh::BipartiteGraph& g, int r, SweepStats& s) {
  const lh::DegreeSequence ds(g.left_degrees(), r);
  const lh::Classification cls = lh::classify(g, ds);
  ++s.graphs;
  if (!cls.in_bplus) return;
  const auto edges = g.edges();
  if (cls.d >= 1) {
    for (const lh::FourCycle& c : cls.four_cycles) {
      for (int su = 0; su < 2; ++su) {
        for (int sf = 0; sf < 2; ++sf) {
          for (const auto& [w1, g1] : edges) {
            for (const auto& [w2, g2] : edges) {
              const lh::SwitchTuple t{c.left[su], c.left[1 - su], w1, w2,
                                      c.right[sf], c.right[1 - sf], g1, g2};
              if (lh::forward_violation(g, t)) continue;
              ++s.forward;
              const lh::LegalityVerdict v = lh::check_forward(g, ds, cls, t);
              if (!v.legal && v.conditions.empty()) ++s.unsound;
              const lh::BipartiteGraph h = lh::apply_forward(g, t);
              if (lh::reverse_violation(h, t) || lh::apply_reverse(h, t) != g) {
                ++s.involution_failures;
              }
              if (v.legal) {
                const lh::Classification after = lh::classify(h, ds);
                if (!after.in_bplus || after.d != cls.d - 1) ++s.landing_failures;
              }
            }
          }
        }
      }
    }
  }
  if (cls.d + 1 <= cls.n2) {
    for (const auto& [w1, f1] : edges) {
      for (const auto& [w2, f2] : edges) {
        for (int u1 : g.left_neighbors(f2)) {
          for (int u2 : g.left_neighbors(f1)) {
            for (int g1 : g.right_neighbors(u1)) {
              for (int g2 : g.right_neighbors(u2)) {
                const lh::SwitchTuple t{u1, u2, w1, w2, f1, f2, g1, g2};
                if (lh::reverse_violation(g, t)) continue;
                ++s.reverse;
                const lh::LegalityVerdict v = lh::check_reverse(g, ds, cls, t);
                if (!v.legal && v.conditions.empty()) ++s.unsound;
                const lh::BipartiteGraph h = lh::apply_reverse(g, t);
                if (lh::forward_violation(h, t) || lh::apply_forward(h, t) != g) {
                  ++s.involution_failures;
                }
              }
            }
          }
        }
      }
    }
  }
}

std::vector<std::uint64_t> r_subsets(int n, int r) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (std::popcount(mask) == r) out.push_back(mask);
  }
  return out;
}

Outcome criterion5() {
  const auto start = Clock::now();
  constexpr int kRight = 4;
  SweepStats total;
  for (int n = 4; n <= 6; ++n) {
    for (int r = 2; r <= std::min(n, 4); ++r) {
      const auto cols = r_subsets(n, r);
      const std::size_t c = cols.size();
      const std::size_t count = c * c * c * c;
      std::atomic<std::size_t> next{0};
      std::mutex mu;
      auto work = [&] {
        SweepStats local;
        for (;;) {
          const std::size_t idx = next.fetch_add(1);
          if (idx >= count) break;
          std::array<std::uint64_t, kRight> picked;
          std::size_t rest = idx;
          for (auto& p : picked) {
            p = cols[rest % c];
            rest /= c;
          }
          sweep_graph(lh::graph_from_columns(n, picked), r, local);
        }
        std::lock_guard<std::mutex> lock(mu);
        total.add(local);
      };
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < workers(); ++w) pool.emplace_back(work);
      for (auto& t : pool) t.join();
    }
  }
  const double secs = seconds_since(start);
  const bool pass = total.unsound == 0 && total.involution_failures == 0 &&
                    total.landing_failures == 0 && total.forward > 0 && total.reverse > 0 &&
                    secs < 600.0;
  return {pass, std::to_string(total.graphs) + " graphs, " + std::to_string(total.forward) +
                    " forward and " + std::to_string(total.reverse) + " reverse switchings; " +
                    std::to_string(total.unsound) + " unsound, " +
                    std::to_string(total.involution_failures) + " involution failures, " +
                    std::to_string(total.landing_failures) + " bad landings; " + fmt(secs, 3) +
                    " s"};
}

// Criterion 6 ------------------------------------------------------------

double agreement_factor(double exact, double predicted) {
  if (exact <= 0.0 || predicted <= 0.0 || !std::isfinite(exact)) return INFINITY;
  return std::max(exact / predicted, predicted / exact);
}

std::string k_string(const lh::DegreeSequence& ds) {
  std::string s;
  for (auto x : ds.k()) s += (s.empty() ? "" : ",") + std::to_string(x);
  return "r=" + std::to_string(ds.r()) + " k=(" + s + ")";
}

Outcome criterion6(const lh::VerifyReport& rep) {
  int eligible = 0, outside = 0;
  std::string worst_case;
  double worst = 0.0;
  for (const auto& row : rep.rows) {
    const auto& cd = row.report->cd_profile;
    if (cd.size() < 2 || cd[1] < 1) continue;
    ++eligible;
    const double exact = cd[0] == 0 ? INFINITY : static_cast<double>(cd[1]) / static_cast<double>(cd[0]);
    const double f = agreement_factor(exact, row.ratio_predicted);
    if (f > 3.0) ++outside;
    if (f > worst || worst_case.empty()) {
      worst = f;
      worst_case = k_string(row.instance.ds);
    }
  }
  std::vector<double> factors;
  std::string trend;
  for (int n : {6, 9, 12}) {
    const lh::DegreeSequence ds(std::vector<std::int64_t>(n, 2), 3);
    const lh::DegreeTwoProfile p = lh::degree_two_profile(ds);
    const double c0 = static_cast<double>(p.cd_profile.at(0));
    const double c1 = p.cd_profile.size() > 1 ? static_cast<double>(p.cd_profile[1]) : 0.0;
    const double f = agreement_factor(c0 > 0 ? c1 / c0 : INFINITY, lh::switching_ratio(ds, 1));
    factors.push_back(f);
    trend += " n=" + std::to_string(n) + ":" + fmt(f);
  }
  const bool monotone = factors[1] < factors[0] && factors[2] < factors[1];
  return {eligible > 0 && outside == 0 && monotone,
          std::to_string(eligible) + " battery instances with |C_1|>=1, " + std::to_string(outside) +
              " outside factor 3 (worst " + fmt(worst) + " at " + worst_case +
              "); scaling factors" + trend + (monotone ? " (improving)" : " (not improving)")};
}

Outcome criterion7() {
  const auto start = Clock::now();
  const lh::DegreeSequence ds(std::vector<std::int64_t>(300, 2), 3);
  const lh::GirthEstimate g = lh::monte_carlo_girth(ds, lh::Rng(20260101), 10000, 4);
  const double secs = seconds_since(start);
  return {g.p_hat >= 0.318 && g.p_hat <= 0.418 && secs < 120.0,
          "p_hat=" + fmt(g.p_hat) + " +/- " + fmt(g.ci_halfwidth) + ", predicted " +
              fmt(g.predicted) + ", seed 20260101, 4 workers, " + fmt(secs, 3) + " s"};
}

// Criterion 8 ------------------------------------------------------------

Outcome criterion8(const std::vector<lh::BatteryInstance>& instances, const lh::Guard& guard) {
  int applicable = 0, violated = 0, skipped = 0;
  for (const auto& inst : instances) {
    for (lh::Pattern p : {lh::Pattern::kK32, lh::Pattern::kK23, lh::Pattern::kTwoFourCyclesSharedRight,
                          lh::Pattern::kThreeFourCyclesFourLeft}) {
      lh::Rational bound;
      try {
        bound = lh::mckay_pattern_bound(inst.ds, p);
      } catch (const lh::Error& e) {
        if (e.code() != lh::ErrorCode::kPreconditionFailed) throw;
        ++skipped;
        continue;
      }
      ++applicable;
      if (lh::pattern_expectation(inst.ds, p, guard) > bound) ++violated;
    }
  }

  // Instances small enough to enumerate yet large enough for the condition.
  int extra = 0, extra_violated = 0;
  const std::vector<std::int64_t> k{2, 2, 2, 2, 2, 1, 1};
  const lh::DegreeSequence ds(k, 2);
  const lh::BipartiteDegrees g{k, std::vector<std::int64_t>(6, 2)};
  auto check = [&](const std::vector<lh::Edge>& fixed) {
    lh::BipartiteDegrees l{std::vector<std::int64_t>(7, 0), std::vector<std::int64_t>(6, 0)};
    for (const auto& [a, b] : fixed) {
      ++l.left[a];
      ++l.right[b];
    }
    ++extra;
    if (lh::subgraph_probability(ds, fixed) > lh::mckay_upper_bound(g, l)) ++extra_violated;
  };
  for (int a = 0; a < 7; ++a) {
    for (int b = 0; b < 6; ++b) {
      check({{a, b}});
      for (int a2 = a + 1; a2 < 7; ++a2) {
        for (int b2 = 0; b2 < 6; ++b2) {
          if (b2 != b) check({{a, b}, {a2, b2}});
        }
      }
    }
  }
  // P(v_1 e_1) = 3/30 by symmetry of the right vertices.
  const lh::BipartiteDegrees big{std::vector<std::int64_t>(30, 1), std::vector<std::int64_t>(10, 3)};
  lh::BipartiteDegrees one{std::vector<std::int64_t>(30, 0), std::vector<std::int64_t>(10, 0)};
  one.left[0] = one.right[0] = 1;
  ++extra;
  if (lh::Rational(1, 10) > lh::mckay_upper_bound(big, one)) ++extra_violated;

  return {violated == 0 && extra_violated == 0,
          "battery: " + std::to_string(applicable) + " (instance, pattern) pairs meet the condition, " +
              std::to_string(skipped) + " do not, " + std::to_string(violated) +
              " violations; supplementary edge sets: " + std::to_string(extra) + " checked, " +
              std::to_string(extra_violated) + " violations"};
}

Outcome criterion9() {
  std::mt19937_64 rng(20260109);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int bad = 0;
  double min_gap = INFINITY;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 99);
    const double c_hat = 0.005 + unit(rng) * 0.32;
    std::vector<double> a(n), c(n);
    for (int i = 0; i < n; ++i) {
      a[i] = unit(rng) * c_hat * n;
      c[i] = (2.0 * unit(rng) - 1.0) * c_hat;
      if (i > 0 && a[i] - i * c[i] < 0.0) c[i] = 0.999 * a[i] / i;
    }
    try {
      const lh::SumBounds s = lh::sum_bounds(a, c, c_hat);
      if (!(s.sigma1 <= s.total && s.total <= s.sigma2)) ++bad;
      min_gap = std::min({min_gap, s.total - s.sigma1, s.sigma2 - s.total});
    } catch (const lh::Error& e) {
      ++bad;
    }
  }
  return {bad == 0, "100 inputs, " + std::to_string(bad) + " outside the sandwich, smallest margin " +
                        fmt(min_gap)};
}

Outcome criterion10() {
  const lh::DegreeSequence ds(std::vector<std::int64_t>(6, 1), 3);
  std::map<std::vector<lh::Edge>, int> counts;
  lh::enumerate_bigraphs(ds, lh::ClassFilter::kAll,
                         [&](const lh::BipartiteGraph& g) { counts[g.edges()] = 0; });
  lh::Rng rng(20260101);
  const int draws = 2000;
  for (int i = 0; i < draws; ++i) ++counts.at(lh::pairing_sample(ds, rng).graph.edges());
  const double expected = static_cast<double>(draws) / static_cast<double>(counts.size());
  double stat = 0.0;
  for (const auto& [g, c] : counts) stat += (c - expected) * (c - expected) / expected;
  const boost::math::chi_squared dist(static_cast<double>(counts.size() - 1));
  const double critical = boost::math::quantile(boost::math::complement(dist, 0.001));
  return {counts.size() == 20 && stat < critical,
          std::to_string(counts.size()) + " graphs, chi2=" + fmt(stat) + " < " + fmt(critical) +
              " required"};
}

}  // namespace

int main() {
  int failures = 0;
  auto report = [&](int id, const char* name, const std::function<Outcome()>& fn) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::printf("%s criterion %d (%s): %s\n", o.pass ? "PASS" : "FAIL", id, name, o.detail.c_str());
    std::fflush(stdout);
  };

  lh::VerifyOptions vopts;
  vopts.workers = workers();
  const auto start = Clock::now();
  const lh::VerifyReport rep = lh::run_verification(vopts);
  const double verify_secs = seconds_since(start);

  report(1, "exact small-instance counts", criterion1);
  report(2, "identity suite", [&] { return criterion2(rep, verify_secs); });
  report(3, "formulas where corrections vanish", [&] { return criterion3(rep); });
  report(4, "two-link example classification", criterion4);
  report(5, "switching soundness sweep", criterion5);
  report(6, "leading switching ratio", [&] { return criterion6(rep); });
  report(7, "girth Monte Carlo", criterion7);
  report(8, "McKay bound domination", [&] {
    std::vector<lh::BatteryInstance> inst;
    for (const auto& row : rep.rows) inst.push_back(row.instance);
    return criterion8(inst, vopts.battery.guard);
  });
  report(9, "summation sandwich", criterion9);
  report(10, "pairing sampler uniformity", criterion10);
  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
