// Copyright 2026 The bdprop Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// bdprop: command-line front end for the testers, the hard-instance sampler
// and the lower-bound suites.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bdprop/collision.h"
#include "bdprop/graph.h"
#include "bdprop/graph_io.h"
#include "bdprop/hard_instances.h"
#include "bdprop/kwise.h"
#include "bdprop/lowerbound/expectation.h"
#include "bdprop/lowerbound/suites.h"
#include "bdprop/rng.h"
#include "bdprop/testers.h"
#include "bdprop/walk.h"
#include "run_record.h"

namespace {

using bdprop::tools::Json;

constexpr int kOk = 0;
constexpr int kPropertyFailure = 1;
constexpr int kInputError = 2;

struct Common {
  uint64_t seed = 1;
  uint64_t trials = 1;
  std::string out;
  std::string format = "json";
};

void AddCommon(CLI::App* sub, Common& c) {
  sub->add_option("--seed", c.seed, "Master seed (u64)")->capture_default_str();
  sub->add_option("--trials", c.trials, "Independent trials")
      ->check(CLI::Range(uint64_t{1}, uint64_t{1} << 32))
      ->capture_default_str();
  sub->add_option("--out", c.out, "Output path (stdout when omitted)");
  sub->add_option("--format", c.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
}

Json Header(const std::string& name, const Common& c) {
  Json r;
  r["subcommand"] = name;
  r["seed"] = c.seed;
  r["trials"] = c.trials;
  return r;
}

Json LedgerJson(const bdprop::QueryLedger& l) {
  Json j;
  j["classical_queries"] = l.classical_queries;
  j["modeled_quantum_queries"] = l.modeled_quantum_queries;
  j["walk_steps"] = l.walk_steps;
  return j;
}

// ---- test-bip / test-exp ---------------------------------------------------

struct TesterFlags {
  std::string graph;
  double eps = 0.1;
  uint32_t degree = 0;
  std::string mode = "fully-random";
  std::string counting;
  uint32_t T = 0, K = 0, L = 0, k_indep = 0;
  uint32_t k_factor = 4;
  double injected_failure = 0;
  double log_power = 1;
  std::string expect;
  double min_rate = 2.0 / 3.0;
  double alpha = 0.3;
  double mu = 0.12;

  CLI::Option* T_opt = nullptr;
  CLI::Option* K_opt = nullptr;
  CLI::Option* L_opt = nullptr;
  CLI::Option* k_opt = nullptr;
  CLI::Option* d_opt = nullptr;
};

void AddTesterFlags(CLI::App* sub, TesterFlags& f, bool expansion) {
  sub->add_option("--graph", f.graph, "Graph file (text or JSON)")->required();
  sub->add_option("--eps", f.eps, "Distance parameter in (0,1)")->capture_default_str();
  f.d_opt = sub->add_option("--degree", f.degree, "Degree bound d (default: from file)");
  sub->add_option("--mode", f.mode, "Coin source")
      ->check(CLI::IsMember({"fully-random", "kwise"}))
      ->capture_default_str();
  sub->add_option("--counting", f.counting, "exact or skeleton (default by mode)")
      ->check(CLI::IsMember({"exact", "skeleton"}));
  f.T_opt = sub->add_option("--T", f.T, "Override outer repetitions")->check(CLI::PositiveNumber);
  f.K_opt = sub->add_option("--K", f.K, "Override walks per repetition")->check(CLI::PositiveNumber);
  f.L_opt = sub->add_option("--L", f.L, "Override walk length")->check(CLI::PositiveNumber);
  f.k_opt = sub->add_option("--k-indep", f.k_indep, "Override independence k")
                ->check(CLI::PositiveNumber);
  sub->add_option("--k-factor", f.k_factor, "k = k_factor * L * ceil(log2 2d)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_option("--injected-failure", f.injected_failure, "Finder failure probability")
      ->check(CLI::Range(0.0, 0.999999))
      ->capture_default_str();
  sub->add_option("--log-power", f.log_power, "Exponent of the log factor in modeled cost")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_option("--expect", f.expect, "Expected verdict; exit 1 when its rate is below --min-rate")
      ->check(CLI::IsMember({"accept", "reject"}));
  sub->add_option("--min-rate", f.min_rate, "Rate required by --expect")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  if (expansion) {
    sub->add_option("--alpha", f.alpha, "Expansion parameter in (0,1)")->capture_default_str();
    sub->add_option("--mu", f.mu, "Threshold exponent in (0,1/4)")->capture_default_str();
  }
}

bdprop::ParamOverrides Overrides(const TesterFlags& f) {
  bdprop::ParamOverrides o;
  if (f.T_opt->count()) o.T = f.T;
  if (f.K_opt->count()) o.K = f.K;
  if (f.L_opt->count()) o.L = f.L;
  if (f.k_opt->count()) o.k_indep = f.k_indep;
  o.k_factor = f.k_factor;
  return o;
}

bdprop::TesterOptions Options(const TesterFlags& f) {
  bdprop::TesterOptions opt;
  opt.coins = f.mode == "kwise" ? bdprop::CoinMode::kKWise : bdprop::CoinMode::kFullyRandom;
  if (f.counting == "exact") opt.counting = bdprop::CountingMode::kExact;
  if (f.counting == "skeleton") opt.counting = bdprop::CountingMode::kSkeleton;
  opt.injected_failure = f.injected_failure;
  opt.log_power = f.log_power;
  return opt;
}

Json TesterEcho(const TesterFlags& f, const bdprop::TesterOptions& opt, bool expansion) {
  Json p;
  p["graph"] = f.graph;
  p["eps"] = f.eps;
  p["mode"] = bdprop::ToString(opt.coins);
  p["counting"] = bdprop::ToString(opt.counting_mode());
  p["k_factor"] = f.k_factor;
  p["injected_failure"] = f.injected_failure;
  p["log_power"] = f.log_power;
  if (expansion) {
    p["alpha"] = f.alpha;
    p["mu"] = f.mu;
  }
  return p;
}

template <typename RunOne>
int RunTester(const Common& c, const TesterFlags& f,
              Json record, RunOne&& run_one, bool per_rep_collisions) {
  bdprop::tools::Stopwatch sw;
  Json rows = Json::array();
  bdprop::QueryLedger total;
  uint64_t accepts = 0;
  for (uint64_t t = 0; t < c.trials; ++t) {
    const uint64_t s = bdprop::DeriveSeed(c.seed, t);
    const bdprop::TesterVerdict v = run_one(s);
    Json row;
    row["trial"] = t;
    row["seed"] = s;
    row["accept"] = v.accept;
    row["repetitions"] = v.repetitions.size();
    uint64_t max_x = 0, sum_x = 0;
    Json xs = Json::array();
    for (const auto& rep : v.repetitions) {
      max_x = std::max(max_x, rep.collisions);
      sum_x += rep.collisions;
      xs.push_back(rep.collisions);
    }
    row["max_collisions"] = max_x;
    row["total_collisions"] = sum_x;
    if (per_rep_collisions) row["collisions"] = xs;
    row["classical_queries"] = v.ledger.classical_queries;
    row["modeled_quantum_queries"] = v.ledger.modeled_quantum_queries;
    row["walk_steps"] = v.ledger.walk_steps;
    rows.push_back(row);
    total += v.ledger;
    accepts += v.accept;
  }
  const double n = static_cast<double>(c.trials);
  const double ar = accepts / n;
  Json agg;
  agg["accepts"] = accepts;
  agg["rejects"] = c.trials - accepts;
  agg["accept_rate"] = ar;
  agg["reject_rate"] = 1.0 - ar;
  agg["rate_std_error"] = std::sqrt(ar * (1.0 - ar) / n);
  int code = kOk;
  if (!f.expect.empty()) {
    const double rate = f.expect == "accept" ? ar : 1.0 - ar;
    agg["expect"] = f.expect;
    agg["min_rate"] = f.min_rate;
    agg["expectation_met"] = rate >= f.min_rate;
    if (rate < f.min_rate) code = kPropertyFailure;
  }
  record["per_trial"] = rows;
  record["aggregate"] = agg;
  record["ledger_totals"] = LedgerJson(total);
  record["timestamp"] = sw.Timestamp();
  bdprop::tools::WriteOutput(c.out, bdprop::tools::Render(record, rows, c.format));
  return code;
}

int CmdTestBip(const Common& c, const TesterFlags& f) {
  const auto g = bdprop::ReadGraphFile(f.graph);
  const uint32_t d = f.d_opt->count() ? f.degree : g.degree_bound();
  const auto p = bdprop::DeriveBipParams(g.num_vertices(), f.eps, d, Overrides(f));
  const auto opt = Options(f);
  Json record = Header("test-bip", c);
  record["params"] = TesterEcho(f, opt, false);
  record["derived"] = {{"n", p.n}, {"d", p.d}, {"T", p.T}, {"K", p.K}, {"L", p.L},
                       {"k_indep", p.k_indep}};
  return RunTester(
      c, f, record,
      [&](uint64_t s) { return bdprop::TestBipartiteness(g, p, opt, s); }, false);
}

int CmdTestExp(const Common& c, const TesterFlags& f) {
  const auto g = bdprop::ReadGraphFile(f.graph);
  const uint32_t d = f.d_opt->count() ? f.degree : g.degree_bound();
  const auto p =
      bdprop::DeriveExpParams(g.num_vertices(), f.eps, f.alpha, f.mu, d, Overrides(f));
  const auto opt = Options(f);
  Json record = Header("test-exp", c);
  record["params"] = TesterEcho(f, opt, true);
  record["derived"] = {{"n", p.n},
                       {"d", p.d},
                       {"T", p.T},
                       {"K", p.K},
                       {"L", p.L},
                       {"k_indep", p.k_indep},
                       {"threshold", static_cast<double>(p.threshold)},
                       {"threshold_count", p.threshold_count},
                       {"outer_retries", p.outer_retries}};
  return RunTester(
      c, f, record,
      [&](uint64_t s) { return bdprop::TestExpansion(g, p, opt, s); }, true);
}

// ---- gen-pml ------------------------------------------------------------------

struct PmlFlags {
  uint64_t n = 0;
  uint64_t m = 0;
  uint32_t l = 1;
  uint32_t c = 6;
  CLI::Option* m_opt = nullptr;
};

std::string Suffixed(const std::string& prefix, uint64_t t, uint64_t trials,
                     const std::string& ext) {
  return trials > 1 ? prefix + "-" + std::to_string(t) + ext : prefix + ext;
}

int CmdGenPml(const Common& c, const PmlFlags& f) {
  if (c.out.empty()) throw std::invalid_argument("gen-pml: --out prefix is required");
  bdprop::tools::Stopwatch sw;
  bdprop::PmlParams p;
  p.N = f.n;
  p.l = f.l;
  p.c = f.c;
  p.M = f.m_opt->count() ? f.m : bdprop::DefaultHostSize(f.n, f.l);
  p.Validate();

  Json rows = Json::array();
  for (uint64_t t = 0; t < c.trials; ++t) {
    const uint64_t s = bdprop::DeriveSeed(c.seed, t);
    bdprop::Rng rng(s);
    const auto host = bdprop::SampleMatchingUnion(p, rng);
    const auto ind = bdprop::SampleInduced(host, rng);
    const auto host_graph = host.ToGraph();
    Json row;
    row["trial"] = t;
    row["seed"] = s;
    row["failed"] = ind.failed;
    row["host_edges"] = host_graph.num_edges();
    row["block_counts"] = ind.block_counts;
    const std::string host_path = Suffixed(c.out, t, c.trials, ".host.txt");
    bdprop::tools::WriteOutput(host_path, bdprop::FormatGraphText(host_graph));
    row["host_file"] = host_path;
    if (ind.induced) {
      uint32_t max_deg = 0;
      for (bdprop::Vertex v = 0; v < ind.induced->num_vertices(); ++v) {
        max_deg = std::max(max_deg, ind.induced->degree(v));
      }
      const std::string graph_path = Suffixed(c.out, t, c.trials, ".graph.txt");
      bdprop::tools::WriteOutput(graph_path, bdprop::FormatGraphText(*ind.induced));
      row["graph_file"] = graph_path;
      row["induced_vertices"] = ind.induced->num_vertices();
      row["induced_edges"] = ind.induced->num_edges();
      row["max_degree"] = max_deg;
    }
    row["chosen"] = ind.chosen;
    rows.push_back(row);
  }
  Json record = Header("gen-pml", c);
  record["params"] = {{"n", p.N}, {"m", p.M}, {"l", p.l}, {"c", p.c}};
  record["per_trial"] = rows;
  uint64_t failed = 0;
  for (const auto& r : rows) failed += r["failed"].get<bool>();
  record["aggregate"] = {{"failed", failed}, {"failure_rate", failed / double(c.trials)}};
  record["timestamp"] = sw.Timestamp();
  bdprop::tools::WriteOutput(c.out + ".json", record.dump(2) + "\n");
  if (c.format == "csv") bdprop::tools::WriteOutput(c.out + ".csv", bdprop::tools::ToCsv(rows));
  return kOk;
}

// ---- verify-lb -----------------------------------------------------------------

struct LbFlags {
  uint32_t kmax = 6;
  uint64_t samples = 1000000;
  std::vector<std::string> hosts;
};

std::vector<std::pair<uint64_t, uint32_t>> ParseHosts(const std::vector<std::string>& in) {
  if (in.empty()) return bdprop::lb::ExpectationGridHosts();
  std::vector<std::pair<uint64_t, uint32_t>> out;
  for (const auto& h : in) {
    const auto colon = h.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("--host expects M:l, got " + h);
    try {
      out.emplace_back(std::stoull(h.substr(0, colon)),
                       static_cast<uint32_t>(std::stoul(h.substr(colon + 1))));
    } catch (const std::logic_error&) {
      throw std::invalid_argument("--host expects M:l, got " + h);
    }
  }
  return out;
}

Json SuiteJson(const bdprop::lb::SuiteResult& s) {
  Json j;
  j["kind"] = "suite";
  j["name"] = s.name;
  j["passed"] = s.passed;
  j["checked"] = s.checked;
  j["failures"] = s.failures;
  j["notes"] = s.notes;
  return j;
}

int CmdVerifyLb(const Common& c, const LbFlags& f) {
  namespace lb = bdprop::lb;
  bdprop::tools::Stopwatch sw;
  const auto hosts = ParseHosts(f.hosts);
  std::vector<lb::SuiteResult> suites;
  suites.push_back(lb::RunPropPartSuite(f.kmax));
  suites.push_back(lb::RunMobiusSuite(f.kmax));
  suites.push_back(lb::RunProp2GridSuite(std::min(f.kmax, 4u)));
  suites.push_back(lb::RunPropFinalSuite(std::min(f.kmax, 5u), c.seed));
  suites.push_back(lb::RunMultiplicitySuite(c.seed));

  Json rows = Json::array();
  bool ok = true;
  for (const auto& s : suites) {
    rows.push_back(SuiteJson(s));
    ok = ok && s.passed;
  }
  Json cells = Json::array();
  if (f.samples > 0) {
    for (uint64_t t = 0; t < c.trials; ++t) {
      const auto grid = lb::RunExpectationGrid(f.samples, bdprop::DeriveSeed(c.seed, t), hosts);
      ok = ok && grid.summary.passed;
      Json s = SuiteJson(grid.summary);
      s["trial"] = t;
      rows.push_back(s);
      for (const auto& cell : grid.cells) {
        Json j;
        j["kind"] = "cell";
        j["trial"] = t;
        j["monomial"] = cell.monomial;
        j["M"] = cell.M;
        j["l"] = cell.l;
        j["exact"] = cell.exact;
        j["exact_value"] = cell.exact_value;
        j["denominator"] = cell.denominator;
        j["realizable"] = cell.realizable;
        j["mc_mean"] = cell.mc.mean;
        j["mc_std_error"] = cell.mc.std_error;
        j["sigma"] = cell.sigma;
        j["samples"] = cell.mc.samples;
        j["passed"] = cell.passed;
        j["note"] = cell.note;
        cells.push_back(j);
        rows.push_back(j);
      }
    }
  }
  Json record = Header("verify-lb", c);
  record["params"] = {{"kmax", f.kmax}, {"samples", f.samples}};
  Json hj = Json::array();
  for (const auto& [M, l] : hosts) hj.push_back({{"M", M}, {"l", l}});
  record["params"]["hosts"] = hj;
  Json sj = Json::array();
  for (const auto& s : suites) sj.push_back(SuiteJson(s));
  record["suites"] = sj;
  record["grid"] = cells;
  record["passed"] = ok;
  record["timestamp"] = sw.Timestamp();
  bdprop::tools::WriteOutput(c.out, bdprop::tools::Render(record, rows, c.format));
  return ok ? kOk : kPropertyFailure;
}

// ---- bench ---------------------------------------------------------------------

int CmdBench(const Common& c) {
  using Clock = std::chrono::steady_clock;
  bdprop::tools::Stopwatch sw;
  Json rows = Json::array();
  Json timings = Json::array();
  for (uint64_t t = 0; t < c.trials; ++t) {
    const uint64_t s = bdprop::DeriveSeed(c.seed, t);
    Json row, tm;
    row["trial"] = t;
    row["seed"] = s;

    auto t0 = Clock::now();
    bdprop::Rng rng = bdprop::MakeRng(s, 0);
    const auto fam = bdprop::KWiseFamily::Random(uint64_t{1} << 24, 64, rng);
    uint64_t acc = 0;
    for (uint64_t j = 0; j < 10000; ++j) acc = acc * 31 + fam.EvalSymbol(j, 6);
    row["kwise_checksum"] = acc;
    auto t1 = Clock::now();
    tm["kwise_eval_s"] = std::chrono::duration<double>(t1 - t0).count();

    const auto host = bdprop::SampleMatchingUnion({1024, 1024, 1, 3}, rng).ToGraph();
    bdprop::QueryLedger ledger;
    uint64_t ends = 0;
    for (uint64_t w = 0; w < 1000; ++w) {
      const auto coins = bdprop::WalkCoins::FullyRandom(s, w, 256, 2 * host.degree_bound());
      ends = ends * 1000003 + bdprop::Endpoint(host, static_cast<bdprop::Vertex>(w), coins, ledger);
    }
    row["walk_checksum"] = ends;
    row["walk_queries"] = ledger.classical_queries;
    auto t2 = Clock::now();
    tm["walks_s"] = std::chrono::duration<double>(t2 - t1).count();

    std::vector<uint64_t> keys(4096);
    for (auto& k : keys) k = bdprop::UniformIndex(rng, uint64_t{1} << 22);
    bdprop::CollisionQuery q;
    q.domain_size = keys.size();
    q.codomain_size = uint64_t{1} << 22;
    q.evaluator = [&keys](uint64_t x) { return bdprop::CodomainPoint{keys[x], 0}; };
    const auto rep = bdprop::FindCollision(q, bdprop::ExcludeSet{}, rng);
    row["collision_found"] = rep.found.has_value();
    row["collision_evals"] = rep.classical_evals;
    auto t3 = Clock::now();
    tm["collision_s"] = std::chrono::duration<double>(t3 - t2).count();

    const bdprop::lb::Monomial p({{1, 2, 1}, {2, 3, 2}, {3, 4, 1}, {1, 4, 2}, {1, 3, 3}});
    const auto e = bdprop::lb::ExactExpectation(p);
    row["expectation_denominator"] = e.denominator().ToString();
    auto t4 = Clock::now();
    tm["exact_expectation_s"] = std::chrono::duration<double>(t4 - t3).count();

    rows.push_back(row);
    tm["trial"] = t;
    timings.push_back(tm);
  }
  Json record = Header("bench", c);
  record["per_trial"] = rows;
  record["timestamp"] = sw.Timestamp();
  record["timestamp"]["per_trial"] = timings;
  bdprop::tools::WriteOutput(c.out, bdprop::tools::Render(record, rows, c.format));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bdprop: property testers, hard instances and lower-bound checks"};
  app.require_subcommand(1);

  Common bip_c, exp_c, pml_c, lb_c, bench_c;
  TesterFlags bip_f, exp_f;
  PmlFlags pml_f;
  LbFlags lb_f;

  auto* bip = app.add_subcommand("test-bip", "Run the bipartiteness tester");
  AddCommon(bip, bip_c);
  AddTesterFlags(bip, bip_f, false);

  auto* exp = app.add_subcommand("test-exp", "Run the expansion tester");
  AddCommon(exp, exp_c);
  AddTesterFlags(exp, exp_f, true);

  auto* pml = app.add_subcommand("gen-pml", "Sample a matching-union hard instance");
  AddCommon(pml, pml_c);
  pml->add_option("--n", pml_f.n, "Sample size N")->required()->check(CLI::PositiveNumber);
  pml_f.m_opt = pml->add_option("--m", pml_f.m, "Host size M (default: smallest valid above N(1+N^-0.1))");
  pml->add_option("--l", pml_f.l, "Number of blocks")->check(CLI::PositiveNumber)->capture_default_str();
  pml->add_option("--c", pml_f.c, "Matchings per block")->check(CLI::PositiveNumber)->capture_default_str();

  auto* vlb = app.add_subcommand("verify-lb", "Run the lower-bound identity suites and expectation grid");
  AddCommon(vlb, lb_c);
  vlb->add_option("--kmax", lb_f.kmax, "Largest partition size (<= 8)")
      ->check(CLI::Range(1u, 8u))
      ->capture_default_str();
  vlb->add_option("--samples", lb_f.samples, "Monte Carlo samples per host (0 skips the grid)")
      ->capture_default_str();
  vlb->add_option("--host", lb_f.hosts, "Grid host M:l (repeatable)");

  auto* bench = app.add_subcommand("bench", "Time fixed workloads");
  AddCommon(bench, bench_c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (*bip) return CmdTestBip(bip_c, bip_f);
    if (*exp) return CmdTestExp(exp_c, exp_f);
    if (*pml) return CmdGenPml(pml_c, pml_f);
    if (*vlb) return CmdVerifyLb(lb_c, lb_f);
    if (*bench) return CmdBench(bench_c);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
