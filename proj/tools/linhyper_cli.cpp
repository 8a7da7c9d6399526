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

// linhyper command-line front end. Built on the C interface only.
//
// Exit codes: 0 success, 1 an internal identity failed, 2 bad input or an
// instance outside the configured limits.

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "linhyper/linhyper.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitIdentity = 1;
constexpr int kExitUser = 2;
constexpr std::uint64_t kDefaultSeed = 20260101;

struct UserError {
  std::string message;
};

struct IdentityError {
  std::string message;
};

struct RunConfig {
  int r = 0;
  std::string k;
  std::string input;
  std::uint64_t seed = kDefaultSeed;
  std::int64_t trials = 10000;
  double max_space = 0.0;
  std::string format = "json";
  unsigned workers = 1;
};

void check(lh_status status) {
  if (status == LH_OK) return;
  std::string msg = lh_last_error();
  if (status == LH_ERR_INVARIANT_VIOLATION) throw IdentityError{msg};
  throw UserError{msg};
}

std::string take(char* s) {
  std::string out(s);
  lh_string_free(s);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UserError{"cannot read " + path};
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::int64_t> parse_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UserError{"bad entry '" + item + "' in -k"};
    }
  }
  return out;
}

class DegSeq {
 public:
  explicit DegSeq(const RunConfig& cfg) {
    if (!cfg.k.empty()) {
      if (cfg.r == 0) throw UserError{"-k needs -r"};
      const std::vector<std::int64_t> k = parse_list(cfg.k);
      check(lh_degseq_new(k.data(), k.size(), cfg.r, &ds_));
    } else if (!cfg.input.empty()) {
      check(lh_degseq_from_json(read_file(cfg.input).c_str(), &ds_));
    } else {
      throw UserError{"give a degree sequence with -r/-k or --input"};
    }
  }
  ~DegSeq() { lh_degseq_free(ds_); }
  DegSeq(const DegSeq&) = delete;
  DegSeq& operator=(const DegSeq&) = delete;
  const lh_degseq* get() const { return ds_; }

 private:
  lh_degseq* ds_ = nullptr;
};

std::string number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string cell(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_float()) return number(v.get<double>());
  if (v.is_null()) return "";
  if (v.is_array()) {
    std::string s;
    for (const Json& x : v) {
      if (!s.empty()) s += ",";
      s += cell(x);
    }
    return s;
  }
  return v.dump();
}

void csv_row(const std::vector<std::string>& fields) {
  std::string line;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) line += ",";
    line += csv_field(fields[i]);
  }
  std::cout << line << "\r\n";
}

void emit_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

bool csv(const RunConfig& cfg) { return cfg.format == "csv"; }

lh_guard guard_for(const RunConfig& cfg) {
  lh_guard g;
  lh_guard_default(&g);
  g.max_space = cfg.max_space;
  return g;
}

int cmd_exact(const RunConfig& cfg) {
  DegSeq ds(cfg);
  const lh_guard guard = guard_for(cfg);
  char* out = nullptr;
  check(lh_exact_json(ds.get(), &guard, cfg.workers, &out));
  const Json j = Json::parse(take(out));
  if (csv(cfg)) {
    const Json& rep = j["report"];
    csv_row({"r", "k", "count_b", "count_b0", "count_bplus", "count_h", "count_l", "cd_profile"});
    csv_row({cell(j["r"]), cell(j["k"]), cell(rep["count_b"]), cell(rep["count_b0"]),
             cell(rep["count_bplus"]), cell(rep["count_h"]), cell(rep["count_l"]),
             cell(rep["cd_profile"])});
  } else {
    emit_json(j);
  }
  return 0;
}

int cmd_estimate(const RunConfig& cfg) {
  DegSeq ds(cfg);
  const lh_estimate_kind kinds[] = {LH_ESTIMATE_LINEAR, LH_ESTIMATE_SIMPLE, LH_ESTIMATE_BIGRAPH,
                                    LH_ESTIMATE_GIRTH6};
  Json rows = Json::array();
  for (lh_estimate_kind kind : kinds) {
    char* out = nullptr;
    check(lh_estimate_json(ds.get(), kind, &out));
    Json row{{"formula", lh_estimate_name(kind)}};
    row.update(Json::parse(take(out)));
    rows.push_back(row);
  }
  if (csv(cfg)) {
    csv_row({"formula", "log_value", "value", "error_scale"});
    for (const Json& row : rows) {
      csv_row({cell(row["formula"]), cell(row["log_value"]), cell(row["value"]),
               cell(row["error_scale"])});
    }
  } else {
    char* out = nullptr;
    check(lh_degseq_describe_json(ds.get(), &out));
    Json j = Json::parse(take(out));
    j["estimates"] = rows;
    emit_json(j);
  }
  return 0;
}

int cmd_classify(const RunConfig& cfg) {
  if (cfg.input.empty()) throw UserError{"classify needs --input with a graph or hypergraph"};
  const std::string text = read_file(cfg.input);
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const std::exception& e) {
    throw UserError{std::string("invalid JSON: ") + e.what()};
  }
  lh_bigraph* graph = nullptr;
  if (doc.is_object() && doc.contains("n_left")) {
    check(lh_bigraph_from_json(text.c_str(), &graph));
  } else {
    check(lh_bigraph_from_hypergraph_json(text.c_str(), &graph));
  }
  char* out = nullptr;
  const lh_status status = lh_classify_json(graph, cfg.r, &out);
  lh_bigraph_free(graph);
  check(status);
  const Json j = Json::parse(take(out));
  if (csv(cfg)) {
    const Json& c = j["classification"];
    std::string cycles;
    for (const Json& fc : c["four_cycles"]) {
      if (!cycles.empty()) cycles += ";";
      cycles += "v" + cell(fc["left"][0]) + " v" + cell(fc["left"][1]) + " x e" +
                cell(fc["right"][0]) + " e" + cell(fc["right"][1]);
    }
    csv_row({"d", "n2", "in_b0", "in_bplus", "failed_properties", "four_cycles"});
    csv_row({cell(c["d"]), cell(c["n2"]), cell(c["in_b0"]), cell(c["in_bplus"]),
             cell(c["failed_properties"]), cycles});
  } else {
    emit_json(j);
  }
  return 0;
}

int cmd_sample(const RunConfig& cfg, bool pairing, std::int64_t max_steps) {
  DegSeq ds(cfg);
  char* out = nullptr;
  check(lh_sample_json(ds.get(), cfg.seed, pairing ? LH_SAMPLE_PAIRING : LH_SAMPLE_NO4CYCLE,
                       max_steps, &out));
  const Json j = Json::parse(take(out));
  if (csv(cfg)) {
    csv_row({"seed", "left", "right"});
    for (const Json& e : j["graph"]["edges"]) {
      csv_row({std::to_string(cfg.seed), cell(e[0]), cell(e[1])});
    }
  } else {
    emit_json(j);
  }
  return 0;
}

int cmd_girth(const RunConfig& cfg) {
  DegSeq ds(cfg);
  if (cfg.trials < 1) throw UserError{"--trials must be at least 1"};
  lh_girth g;
  check(lh_girth_estimate(ds.get(), cfg.seed, cfg.trials, cfg.workers, &g));
  const Json j{{"seed", cfg.seed},         {"workers", cfg.workers},
               {"trials", g.trials},       {"p_hat", g.p_hat},
               {"ci_halfwidth", g.ci_halfwidth}, {"predicted", g.predicted},
               {"rejections", g.rejections}};
  if (csv(cfg)) {
    csv_row({"seed", "workers", "trials", "p_hat", "ci_halfwidth", "predicted", "rejections"});
    csv_row({std::to_string(cfg.seed), std::to_string(cfg.workers), std::to_string(g.trials),
             number(g.p_hat), number(g.ci_halfwidth), number(g.predicted),
             std::to_string(g.rejections)});
  } else {
    emit_json(j);
  }
  return 0;
}

struct VerifyFlags {
  int n_max = 6;
  int k_max = 3;
  std::vector<int> r_values{3, 4};
  int random = 50;
  int random_n_max = 7;
  std::int64_t max_total_degree = 18;
  bool ratio_check = false;
};

int cmd_verify(const RunConfig& cfg, const VerifyFlags& flags) {
  lh_verify_options opts;
  lh_verify_options_default(&opts);
  opts.n_max = flags.n_max;
  opts.k_max = flags.k_max;
  opts.r_values = flags.r_values.data();
  opts.r_count = flags.r_values.size();
  opts.random_instances = flags.random;
  opts.random_n_max = flags.random_n_max;
  opts.seed = cfg.seed;
  opts.guard.max_total_degree = flags.max_total_degree;
  opts.guard.max_space = cfg.max_space;
  opts.workers = cfg.workers;
  opts.ratio_check = flags.ratio_check ? 1 : 0;
  char* out = nullptr;
  int ok = 0;
  check(lh_verify_json(&opts, &out, &ok));
  Json j = Json::parse(take(out));
  j["seed"] = cfg.seed;
  if (csv(cfg)) {
    std::vector<std::string> header{"r", "k", "random", "count_b", "count_h", "count_l"};
    for (const char* f : {"linear", "simple", "bigraph"}) {
      header.push_back(std::string("estimate_") + f);
      header.push_back(std::string("ratio_") + f);
      header.push_back(std::string("error_scale_") + f);
    }
    for (const char* f : {"step1", "partition", "linear_identity", "involution"}) {
      header.push_back(f);
    }
    if (flags.ratio_check) {
      for (const char* f : {"c0", "c1", "c1_over_c0", "predicted_ratio"}) header.push_back(f);
    }
    header.push_back("seed");
    csv_row(header);
    for (const Json& row : j["rows"]) {
      std::vector<std::string> fields{cell(row["r"]),       cell(row["k"]),
                                      cell(row["random"]),  cell(row.value("count_b", Json())),
                                      cell(row.value("count_h", Json())),
                                      cell(row.value("count_l", Json()))};
      for (const char* f : {"linear", "simple", "bigraph"}) {
        fields.push_back(cell(row[f]["estimate"]));
        fields.push_back(cell(row[f].value("ratio", Json())));
        fields.push_back(cell(row[f]["error_scale"]));
      }
      for (const char* f : {"step1", "partition", "linear", "involution"}) {
        fields.push_back(cell(row["identities"][f]));
      }
      if (flags.ratio_check) {
        const Json& rc = row["ratio_check"];
        fields.push_back(cell(rc.value("c0", Json())));
        fields.push_back(cell(rc.value("c1", Json())));
        fields.push_back(cell(rc["exact"]));
        fields.push_back(cell(rc["predicted"]));
      }
      fields.push_back(std::to_string(cfg.seed));
      csv_row(fields);
    }
  } else {
    emit_json(j);
  }
  if (!ok) {
    std::cerr << "linhyper: identity failure in verification battery\n";
    return kExitIdentity;
  }
  return 0;
}

void add_common(CLI::App* cmd, RunConfig& cfg, bool degree_input, bool random) {
  if (degree_input) {
    cmd->add_option("-r", cfg.r, "Edge size r");
    cmd->add_option("-k", cfg.k, "Comma-separated degrees; wins over --input");
  }
  cmd->add_option("--input", cfg.input, "JSON input file");
  cmd->add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--workers", cfg.workers, "Worker threads")->check(CLI::Range(1u, 256u));
  cmd->add_option("--max-space", cfg.max_space,
                  "Enumeration limit on M!/((r!)^m prod k!) replacing the default M <= 16, n <= 10");
  if (random) {
    cmd->add_option("--seed", cfg.seed, "Random seed")->default_val(kDefaultSeed);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"linhyper: exact and asymptotic counts of linear hypergraphs"};
  app.require_subcommand(1);
  RunConfig cfg;
  VerifyFlags vflags;
  bool pairing = false;
  std::int64_t max_steps = 100000;

  auto* exact = app.add_subcommand("exact", "Exact counts by enumeration");
  add_common(exact, cfg, true, false);
  auto* estimate = app.add_subcommand("estimate", "Asymptotic estimates");
  add_common(estimate, cfg, true, false);
  auto* classify = app.add_subcommand("classify", "Classify a bipartite graph or hypergraph");
  add_common(classify, cfg, false, false);
  classify->add_option("-r", cfg.r, "Edge size r (default: inferred)");
  auto* sample = app.add_subcommand("sample", "Random graph without 4-cycles");
  add_common(sample, cfg, true, true);
  sample->add_flag("--pairing", pairing, "Plain pairing-model draw from B_r(k)");
  sample->add_option("--max-steps", max_steps, "Switching step limit");
  auto* girth = app.add_subcommand("girth", "Monte Carlo probability of no 4-cycle");
  add_common(girth, cfg, true, true);
  girth->add_option("--trials", cfg.trials, "Number of pairing draws");
  auto* verify = app.add_subcommand("verify", "Identity and formula checks over a battery");
  add_common(verify, cfg, false, true);
  verify->add_option("--n-max", vflags.n_max, "Largest n in the exhaustive battery");
  verify->add_option("--k-max", vflags.k_max, "Largest degree");
  verify->add_option("--r", vflags.r_values, "Edge sizes")->delimiter(',');
  verify->add_option("--random", vflags.random, "Random instances added to the battery");
  verify->add_option("--random-n-max", vflags.random_n_max, "Largest n of random instances");
  verify->add_option("--max-total-degree", vflags.max_total_degree, "Battery limit on M");
  verify->add_flag("--ratio-check", vflags.ratio_check, "Report |C_1|/|C_0| per instance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUser;
  }

  try {
    if (*exact) return cmd_exact(cfg);
    if (*estimate) return cmd_estimate(cfg);
    if (*classify) return cmd_classify(cfg);
    if (*sample) return cmd_sample(cfg, pairing, max_steps);
    if (*girth) return cmd_girth(cfg);
    if (*verify) return cmd_verify(cfg, vflags);
  } catch (const UserError& e) {
    std::cerr << "linhyper: " << e.message << "\n";
    return kExitUser;
  } catch (const IdentityError& e) {
    std::cerr << "linhyper: " << e.message << "\n";
    return kExitIdentity;
  }
  return kExitUser;
}
