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


// Acceptance runner: one PASS/FAIL line per criterion. Tolerances and desk
// parameters are pinned below.

#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bdprop/collision.h"
#include "bdprop/graph.h"
#include "bdprop/graph_io.h"
#include "bdprop/hard_instances.h"
#include "bdprop/kwise.h"
#include "bdprop/lowerbound/suites.h"
#include "bdprop/rng.h"
#include "bdprop/testers.h"
#include "json.hpp"

namespace bdprop {
namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  const char* title;
  double time_limit_s;
  std::function<Outcome()> run;
};

std::string Fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double Sigma(double p, double n) { return std::sqrt(p * (1 - p) / n); }

// ---- 1 -------------------------------------------------------------------------

BoundedDegreeGraph RandomBipartite(size_t n, uint32_t d, uint64_t seed) {
  Rng rng(seed);
  const size_t half = n / 2;
  std::set<std::pair<Vertex, Vertex>> edges;
  for (uint32_t r = 0; r < d; ++r) {
    std::vector<Vertex> perm(half);
    for (size_t i = 0; i < half; ++i) perm[i] = static_cast<Vertex>(half + i);
    std::shuffle(perm.begin(), perm.end(), rng);
    for (size_t i = 0; i < half; ++i) edges.emplace(static_cast<Vertex>(i), perm[i]);
  }
  return BoundedDegreeGraph::FromEdges(n, d, {edges.begin(), edges.end()});
}

Outcome OneSidedness() {
  constexpr uint64_t kRuns = 10000, kKWiseRuns = 100;
  const std::vector<std::pair<std::string, BoundedDegreeGraph>> graphs{
      {"C4", CycleGraph(4)}, {"C1000", CycleGraph(1000)}, {"bip500", RandomBipartite(500, 3, 11)}};
  std::ostringstream os;
  bool ok = true;
  for (size_t gi = 0; gi < graphs.size(); ++gi) {
    const auto& [name, g] = graphs[gi];
    if (!IsBipartiteExact(g)) return {false, name + " is not bipartite"};
    const auto p = DeriveBipParams(g.num_vertices(), 0.1, g.degree_bound(), {.T = 4, .K = 16, .L = 64});
    uint64_t rejects = 0;
    for (uint64_t t = 0; t < kRuns; ++t) {
      rejects += !TestBipartiteness(g, p, {}, DeriveSeed(100 + gi, t)).accept;
    }
    const auto pk = DeriveBipParams(g.num_vertices(), 0.1, g.degree_bound(), {.T = 2, .K = 8, .L = 16});
    const TesterOptions kw{CoinMode::kKWise, std::nullopt};
    uint64_t kw_rejects = 0;
    for (uint64_t t = 0; t < kKWiseRuns; ++t) {
      kw_rejects += !TestBipartiteness(g, pk, kw, DeriveSeed(200 + gi, t)).accept;
    }
    ok = ok && rejects == 0 && kw_rejects == 0;
    os << name << ": " << rejects << "/" << kRuns << " rejects (+" << kw_rejects << "/"
       << kKWiseRuns << " k-wise); ";
  }
  return {ok, os.str() + "required 0"};
}

// ---- 2 -------------------------------------------------------------------------

// Minimum monochromatic edges over all 2-colourings.
uint64_t BruteEdgesToBipartite(const BoundedDegreeGraph& g) {
  const size_t n = g.num_vertices();
  uint64_t best = UINT64_MAX;
  for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
    uint64_t bad = 0;
    for (Vertex v = 0; v < n; ++v) {
      for (auto* q = g.neighbors_begin(v); q != g.neighbors_end(v); ++q) {
        bad += *q > v && ((mask >> v) & 1) == ((mask >> *q) & 1);
      }
    }
    best = std::min(best, bad);
  }
  return best;
}

Outcome FarRejection() {
  constexpr uint64_t kTrials = 100, kNeed = 67;
  // Desk overrides: the derived K and L are far beyond desk scale here.
  const BoundedDegreeGraph c1001(3, CycleGraph(1001).adjacency());
  const auto pc = DeriveBipParams(1001, 0.01, 3, {.K = 32, .L = 200000});
  uint64_t rc = 0;
  for (uint64_t t = 0; t < kTrials; ++t) rc += !TestBipartiteness(c1001, pc, {}, DeriveSeed(300, t)).accept;

  const auto tri = CompleteGraph(3);
  const double eps = static_cast<double>(BruteEdgesToBipartite(tri)) / (2.0 * 3.0);
  const auto g = DisjointUnion(std::vector<BoundedDegreeGraph>(50, tri), 2);
  const auto pt = DeriveBipParams(150, eps, 2, {.K = 13, .L = 64});
  uint64_t rt = 0;
  for (uint64_t t = 0; t < kTrials; ++t) rt += !TestBipartiteness(g, pt, {}, DeriveSeed(301, t)).accept;
  return {rc >= kNeed && rt >= kNeed,
          Fmt("C1001 (T=%u K=%u L=%u): %llu/100 rejects; 50 triangles (eps=%.4f T=%u K=%u L=%u): "
              "%llu/100 rejects; required >= 67 each",
              pc.T, pc.K, pc.L, (unsigned long long)rc, eps, pt.T, pt.K, pt.L,
              (unsigned long long)rt)};
}

// ---- 3 -------------------------------------------------------------------------

Outcome Derandomization() {
  constexpr uint64_t kReps = 10000;
  Rng rng(2024);
  const auto g = SampleMatchingUnion({200, 200, 1, 3}, rng).ToGraph();
  const auto p = DeriveBipParams(200, 0.1, 3, {.T = 1, .K = 16, .L = 20});
  double mean[2], se[2];
  for (int m = 0; m < 2; ++m) {
    const CoinMode mode = m ? CoinMode::kKWise : CoinMode::kFullyRandom;
    double s = 0, s2 = 0;
    QueryLedger ledger;
    for (uint64_t t = 0; t < kReps; ++t) {
      const double x = static_cast<double>(BipartiteRepetitionStatistic(
          g, static_cast<Vertex>(t % 200), p, mode, DeriveSeed(400 + m, t), ledger));
      s += x;
      s2 += x * x;
    }
    mean[m] = s / kReps;
    se[m] = std::sqrt((s2 / kReps - mean[m] * mean[m]) / (kReps - 1));
  }
  const double tol = 3 * std::hypot(se[0], se[1]);
  const double diff = std::fabs(mean[0] - mean[1]);
  return {diff <= tol && mean[0] > 0,
          Fmt("E[X] fully-random %.4f (se %.4f), k-wise %.4f (se %.4f), k=%u; |diff| %.4f <= 3 sigma %.4f",
              mean[0], se[0], mean[1], se[1], p.k_indep, diff, tol)};
}

// ---- 4 -------------------------------------------------------------------------

Outcome KWiseExhaustive() {
  std::ostringstream os;
  bool ok = true;
  for (const auto& [n, k] : std::vector<std::pair<uint64_t, uint32_t>>{{7, 3}, {8, 2}, {12, 4}}) {
    const bool r = VerifyKWiseExhaustive(n, k);
    ok = ok && r;
    os << "(" << n << "," << k << ")=" << (r ? "uniform" : "NOT uniform") << " ";
  }
  return {ok, os.str()};
}

// ---- 5 -------------------------------------------------------------------------

CollisionQuery FromKeys(const std::vector<uint64_t>& keys) {
  CollisionQuery q;
  q.domain_size = keys.size();
  q.codomain_size = 64;
  q.evaluator = [keys](uint64_t x) { return CodomainPoint{keys[x], 0}; };
  return q;
}

uint64_t BruteCount(const std::vector<uint64_t>& keys) {
  uint64_t c = 0;
  for (size_t x = 0; x < keys.size(); ++x) {
    for (size_t y = x + 1; y < keys.size(); ++y) c += keys[x] == keys[y];
  }
  return c;
}

void ForEachRgs(uint32_t n, const std::function<void(const std::vector<uint64_t>&)>& f) {
  std::vector<uint64_t> a(n, 0);
  std::function<void(uint32_t, uint64_t)> rec = [&](uint32_t i, uint64_t mx) {
    if (i == n) return f(a);
    for (uint64_t v = 0; v <= mx + 1; ++v) {
      a[i] = v;
      rec(i + 1, std::max(mx, v));
    }
  };
  rec(1, 0);
}

Outcome CollisionContract() {
  Rng rng(500);
  uint64_t cases = 0, unsound = 0, incomplete = 0;
  std::vector<std::vector<uint64_t>> tight(7);  // n=8 instance with exactly M collisions
  for (uint32_t n = 2; n <= 8; ++n) {
    ForEachRgs(n, [&](const std::vector<uint64_t>& keys) {
      const uint64_t truth = BruteCount(keys);
      auto q = FromKeys(keys);
      for (uint64_t M = 1; M <= 6; ++M) {
        ++cases;
        q.injected_failure = 0;
        const bool r0 = CountAtLeast(q, M, rng).at_least;
        unsound += r0 && truth < M;
        incomplete += !r0 && truth >= M;
        q.injected_failure = 0.5;
        unsound += CountAtLeast(q, M, rng).at_least && truth < M;
        if (n == 8 && truth == M && tight[M].empty()) tight[M] = keys;
      }
    });
  }
  std::ostringstream os;
  bool rates_ok = true;
  for (uint64_t M = 1; M <= 6; ++M) {
    auto q = FromKeys(tight[M]);
    q.injected_failure = 0.5;
    int hits = 0;
    for (int i = 0; i < 1000; ++i) hits += CountAtLeast(q, M, rng).at_least;
    rates_ok = rates_ok && hits >= 667;
    os << "M=" << M << ":" << hits << " ";
  }
  return {unsound == 0 && incomplete == 0 && rates_ok,
          Fmt("%llu cases, %llu unsound, %llu incomplete at p=0; p=0.5 true-count/1000 at exactly M "
              "collisions: ",
              (unsigned long long)cases, (unsigned long long)unsound,
              (unsigned long long)incomplete) +
              os.str() + "(required >= 667)"};
}

// ---- 6 -------------------------------------------------------------------------

struct ExpRun {
  uint64_t accepts = 0;
  uint64_t resampled = 0;
  ExpansionParams p;
};

ExpRun ExpansionDesk(uint32_t l, uint64_t seed) {
  constexpr uint64_t kTrials = 100, kN = 480, kM = 512;
  constexpr uint32_t kC = 6;
  ExpRun out;
  out.p = DeriveExpParams(kN, 0.8, 0.3, 0.12, kC);
  for (uint64_t t = 0; t < kTrials; ++t) {
    Rng rng = MakeRng(seed, t);
    InducedSample s;
    do {
      s = SampleInduced(SampleMatchingUnion({kN, kM, l, kC}, rng), rng);
      out.resampled += s.failed;
    } while (s.failed);
    out.accepts += TestExpansion(*s.induced, out.p, {}, DeriveSeed(seed + 1, t)).accept;
  }
  return out;
}

Outcome ExpansionDeskScale() {
  const auto a = ExpansionDesk(1, 600);
  const auto b = ExpansionDesk(2, 700);
  const uint64_t rejects = 100 - b.accepts;
  return {a.accepts >= 67 && rejects >= 60,
          Fmt("N=480 M=512 c=6 mu=0.12 alpha=0.3 (T=%u K=%u L=%u threshold %.3f): l=1 accepts "
              "%llu/100 (required >= 67), l=2 rejects %llu/100 (required >= 60)",
              a.p.T, a.p.K, a.p.L, static_cast<double>(a.p.threshold),
              (unsigned long long)a.accepts, (unsigned long long)rejects)};
}

// ---- 7 -------------------------------------------------------------------------

Outcome ExpectationGrid() {
  const auto rep = lb::RunExpectationGrid(1000000, 700);
  uint64_t anchors = 0;
  for (const auto& c : rep.cells) {
    if (c.M == 10 && c.l == 1) {
      anchors += c.monomial == "x(1,2;1)" && c.exact == "1/9";
      anchors += c.monomial == "x(1,2;1) x(2,3;2)" && c.exact == "1/81";
      anchors += c.monomial == "x(1,2;1) x(3,4;1)" && c.exact == "1/63";
    }
    if (c.M == 12 && c.l == 3) {
      anchors += c.monomial == "x(1,2;1)" && c.exact == "1/9";
      anchors += c.monomial == "x(1,2;1) x(2,3;2)" && c.exact == "1/81";
    }
  }
  std::ostringstream os;
  os << lb::ExpectationGridMonomials().size() << " monomials x 3 hosts, 1e6 samples: "
     << rep.summary.checked - rep.summary.failures << "/" << rep.summary.checked
     << " cells within 3 sigma; anchors " << anchors << "/5";
  if (!rep.summary.notes.empty()) os << "; first failure: " << rep.summary.notes.front();
  return {rep.summary.passed && anchors == 5, os.str()};
}

// ---- 8 -------------------------------------------------------------------------

Outcome IdentitySuites() {
  std::vector<lb::SuiteResult> s{lb::RunPropPartSuite(6), lb::RunMobiusSuite(6),
                                 lb::RunProp2GridSuite(4), lb::RunPropFinalSuite(5, 800),
                                 lb::RunMultiplicitySuite(800)};
  std::ostringstream os;
  bool ok = true;
  for (const auto& r : s) {
    ok = ok && r.passed;
    os << r.name << " " << r.checked - r.failures << "/" << r.checked << "; ";
  }
  return {ok, os.str()};
}

// ---- 9 -------------------------------------------------------------------------

Outcome FailureBound() {
  constexpr uint64_t kSamples = 100000;
  const PmlParams p{200, DefaultHostSize(200, 4), 4, 1};
  Rng rng(900);
  uint64_t failed = 0;
  for (uint64_t i = 0; i < kSamples; ++i) failed += SampleSelection(p, rng).failed;
  const double rate = static_cast<double>(failed) / kSamples;
  const double bound = ChernoffFailureBound(200, 4, 0.1);

  const PmlParams q{16, 64, 2, 1};
  uint64_t ok = 0, same = 0;
  for (uint64_t i = 0; i < kSamples; ++i) {
    const auto s = SampleSelection(q, rng);
    if (s.failed) continue;
    ++ok;
    const auto b = [&](int j) { return s.chosen[j] / q.block_size(); };
    same += b(0) == b(1) && b(1) == b(2);
  }
  const double freq = static_cast<double>(same) / ok;
  const double tol = 3 * Sigma(0.25, static_cast<double>(ok));
  return {rate <= bound && std::fabs(freq - 0.25) <= tol,
          Fmt("failure rate %.5f <= bound %.5f (N=200 M=%llu l=4); three-same-block %.5f vs 1/4 "
              "+- %.5f (N=16 M=64 l=2)",
              rate, bound, (unsigned long long)p.M, freq, tol)};
}

// ---- 10 ------------------------------------------------------------------------

std::string Slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::string StripTimestamp(const std::string& text) {
  auto j = nlohmann::ordered_json::parse(text);
  j.erase("timestamp");
  return j.dump();
}

Outcome CliDeterminism() {
#ifndef BDPROP_CLI_PATH
  return {false, "command-line tool not built"};
#else
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / ("bdprop_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  {
    std::ofstream(dir / "c100.txt") << FormatGraphText(CycleGraph(100));
    Rng rng(1000);
    std::ofstream(dir / "exp.txt") << FormatGraphText(SampleMatchingUnion({200, 200, 1, 4}, rng).ToGraph());
  }
  const std::string cli = BDPROP_CLI_PATH;
  const std::string d = dir.string() + "/";
  struct Case {
    std::string name, args;
    std::vector<std::string> outputs;  // JSON outputs first, then raw files
    size_t json_count;
  };
  const std::vector<Case> cases{
      {"test-bip",
       "test-bip --graph " + d + "c100.txt --eps 0.2 --mode kwise --trials 5 --seed 7 --T 2 --K 8 --L 16 --out " + d + "bip.json",
       {"bip.json"}, 1},
      {"test-exp",
       "test-exp --graph " + d + "exp.txt --eps 0.8 --trials 3 --seed 7 --L 200 --out " + d + "exp.json",
       {"exp.json"}, 1},
      {"gen-pml", "gen-pml --n 16 --m 16 --l 1 --c 6 --seed 1 --out " + d + "pml",
       {"pml.json", "pml.host.txt", "pml.graph.txt"}, 1},
      {"verify-lb", "verify-lb --kmax 4 --samples 2000 --host 10:1 --host 12:3 --seed 3 --out " + d + "lb.json",
       {"lb.json"}, 1},
      {"bench", "bench --trials 1 --seed 5 --out " + d + "bench.json", {"bench.json"}, 1},
  };
  bool ok = true;
  std::ostringstream os;
  for (const auto& c : cases) {
    std::vector<std::string> runs[2];
    bool ran = true;
    for (auto& run : runs) {
      const int rc = std::system((cli + " " + c.args + " > /dev/null 2>&1").c_str());
      ran = ran && rc != -1 && WIFEXITED(rc) && WEXITSTATUS(rc) != 2;
      for (size_t i = 0; i < c.outputs.size(); ++i) {
        const std::string body = Slurp(dir / c.outputs[i]);
        try {
          run.push_back(i < c.json_count ? StripTimestamp(body) : body);
        } catch (const std::exception&) {
          run.push_back("<unparseable>");
          ran = false;
        }
        fs::remove(dir / c.outputs[i]);
      }
    }
    const bool same = ran && runs[0] == runs[1];
    ok = ok && same;
    os << c.name << "=" << (same ? "identical" : "DIFFERENT") << " ";
  }
  fs::remove_all(dir);
  return {ok, os.str()};
#endif
}

const std::vector<Criterion>& Criteria() {
  static const std::vector<Criterion> all{
      {1, "one-sidedness", 120, OneSidedness},
      {2, "far-instance rejection", 300, FarRejection},
      {3, "derandomization equivalence", 300, Derandomization},
      {4, "k-wise exhaustive uniformity", 60, KWiseExhaustive},
      {5, "collision-counter contract", 60, CollisionContract},
      {6, "expansion tester at desk scale", 600, ExpansionDeskScale},
      {7, "exact vs Monte Carlo expectation grid", 600, ExpectationGrid},
      {8, "identity suites", 300, IdentitySuites},
      {9, "failure-bound conformance", 180, FailureBound},
      {10, "CLI determinism", 600, CliDeterminism},
  };
  return all;
}

bool RunOne(const Criterion& c) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = c.run();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool in_time = secs < c.time_limit_s;
  const bool pass = o.pass && in_time;
  std::cout << "criterion " << c.id << " " << (pass ? "PASS" : "FAIL") << " [" << c.title
            << "] " << o.detail << Fmt(" (%.1fs, limit %.0fs%s)", secs, c.time_limit_s,
                                       in_time ? "" : ", EXCEEDED")
            << std::endl;
  return pass;
}

}  // namespace
}  // namespace bdprop

int main(int argc, char** argv) {
  CLI::App app{"bdprop acceptance criteria"};
  int criterion = 0;
  app.add_option("--criterion", criterion, "Criterion id (default: all)")->check(CLI::Range(1, 10));
  CLI11_PARSE(app, argc, argv);
  bool ok = true;
  for (const auto& c : bdprop::Criteria()) {
    if (criterion == 0 || c.id == criterion) ok = bdprop::RunOne(c) && ok;
  }
  return ok ? 0 : 1;
}
