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

#include "bdprop/testers.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "bdprop/kwise.h"
#include "bdprop/rng.h"
#include "bdprop/walk.h"

namespace bdprop {
namespace {

// Substream tags under a repetition seed.
constexpr uint64_t kStartStream = 1;
constexpr uint64_t kFamilyStream = 2;
constexpr uint64_t kCoinStream = 3;
constexpr uint64_t kFinderStream = 4;

uint32_t Log2Ceil(uint64_t x) {
  return x <= 1 ? 0 : static_cast<uint32_t>(std::bit_width(x - 1));
}

uint32_t CheckedU32(uint64_t x, const char* what) {
  if (x == 0 || x > 0xffffffffULL) {
    throw std::invalid_argument(std::string(what) + " out of range");
  }
  return static_cast<uint32_t>(x);
}

// Provides the coins of walk i for one repetition.
class CoinSource {
 public:
  CoinSource(CoinMode mode, uint32_t K, uint32_t L, uint32_t alphabet,
             uint32_t k_indep, uint64_t rep_seed)
      : mode_(mode), L_(L), alphabet_(alphabet),
        coin_seed_(DeriveSeed(rep_seed, kCoinStream)) {
    if (mode_ == CoinMode::kKWise) {
      const uint64_t vars =
          uint64_t{K} * L * KWiseFamily::SymbolStride(alphabet);
      const uint32_t k = static_cast<uint32_t>(
          std::min<uint64_t>(std::max<uint32_t>(k_indep, 1), std::max<uint64_t>(vars, 1)));
      Rng rng = MakeRng(rep_seed, kFamilyStream);
      fam_.emplace(KWiseFamily::Random(std::max<uint64_t>(vars, 1), k, rng));
    }
  }

  WalkCoins Walk(uint64_t i) const {
    if (mode_ == CoinMode::kKWise) return WalkCoins::KWise(*fam_, i, L_, alphabet_);
    return WalkCoins::FullyRandom(coin_seed_, i, L_, alphabet_);
  }

  std::string SeedHex() const { return fam_ ? fam_->SeedHex() : std::string(); }

 private:
  CoinMode mode_;
  uint32_t L_;
  uint32_t alphabet_;
  uint64_t coin_seed_;
  std::optional<KWiseFamily> fam_;
};

uint32_t Alphabet(uint32_t d) { return std::max<uint32_t>(2, 2 * d); }

Vertex PickStart(const BoundedDegreeGraph& g, uint64_t rep_seed) {
  Rng rng = MakeRng(rep_seed, kStartStream);
  return static_cast<Vertex>(UniformIndex(rng, g.num_vertices()));
}

std::vector<CodomainPoint> BipartitePoints(const BoundedDegreeGraph& g, Vertex s,
                                           const BipartiteParams& p,
                                           CoinMode mode, uint64_t rep_seed,
                                           QueryLedger& ledger,
                                           std::string* kwise_seed) {
  CoinSource src(mode, p.K, p.L, Alphabet(p.d), p.k_indep, rep_seed);
  if (kwise_seed) *kwise_seed = src.SeedHex();
  std::vector<CodomainPoint> pts;
  pts.reserve(uint64_t{p.K} * p.L);
  for (uint32_t i = 0; i < p.K; ++i) {
    WalkWithVisitor(g, s, src.Walk(i), ledger,
                    [&](uint32_t, Vertex v, uint8_t parity) {
                      pts.push_back(CodomainPoint{v, parity});
                    });
  }
  return pts;
}

uint64_t ParityCollisions(std::vector<CodomainPoint> pts) {
  std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) {
    return a.key != b.key ? a.key < b.key : a.tag < b.tag;
  });
  uint64_t total = 0;
  for (size_t i = 0; i < pts.size();) {
    size_t j = i;
    uint64_t c0 = 0, c1 = 0;
    while (j < pts.size() && pts[j].key == pts[i].key) {
      (pts[j].tag ? c1 : c0) += 1;
      ++j;
    }
    total += c0 * c1;
    i = j;
  }
  return total;
}

std::vector<Vertex> ExpansionEndpoints(const BoundedDegreeGraph& g, Vertex s,
                                       const ExpansionParams& p, CoinMode mode,
                                       uint64_t rep_seed, QueryLedger& ledger,
                                       std::string* kwise_seed) {
  CoinSource src(mode, p.K, p.L, Alphabet(p.d), p.k_indep, rep_seed);
  if (kwise_seed) *kwise_seed = src.SeedHex();
  std::vector<Vertex> ends(p.K);
  for (uint32_t i = 0; i < p.K; ++i) ends[i] = Endpoint(g, s, src.Walk(i), ledger);
  return ends;
}

uint64_t EndpointCollisions(std::vector<Vertex> ends) {
  std::sort(ends.begin(), ends.end());
  uint64_t total = 0;
  for (size_t i = 0; i < ends.size();) {
    size_t j = i;
    while (j < ends.size() && ends[j] == ends[i]) ++j;
    total += uint64_t{j - i} * (j - i - 1) / 2;
    i = j;
  }
  return total;
}

void CheckGraph(const BoundedDegreeGraph& g, uint32_t d) {
  if (g.num_vertices() == 0) throw std::invalid_argument("tester: empty graph");
  if (g.degree_bound() != d) {
    throw std::invalid_argument("tester: params d=" + std::to_string(d) +
                                " differs from graph degree bound " +
                                std::to_string(g.degree_bound()));
  }
}

}  // namespace

const char* ToString(CoinMode m) {
  return m == CoinMode::kKWise ? "kwise" : "fully-random";
}

const char* ToString(CountingMode m) {
  return m == CountingMode::kSkeleton ? "skeleton" : "exact";
}

uint64_t TolerantCeil(long double x) {
  const long double slack = 1e-9L * std::max<long double>(1.0L, std::fabs(x));
  return static_cast<uint64_t>(std::ceil(x - slack));
}

BipartiteParams DeriveBipParams(uint64_t n, double epsilon, uint32_t d,
                                const ParamOverrides& o) {
  if (n < 2) throw std::invalid_argument("bip params: N must be >= 2");
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw std::invalid_argument("bip params: epsilon must be in (0,1)");
  }
  if (d < 1) throw std::invalid_argument("bip params: d must be >= 1");
  BipartiteParams p;
  p.n = n;
  p.epsilon = epsilon;
  p.d = d;
  const long double lg = Log2Ceil(n);
  const long double eps = epsilon;
  p.T = o.T.value_or(CheckedU32(TolerantCeil(4.0L / eps), "T"));
  p.K = o.K.value_or(CheckedU32(
      TolerantCeil(std::sqrt(static_cast<long double>(n)) * lg * lg / eps), "K"));
  p.L = o.L.value_or(CheckedU32(TolerantCeil((lg / eps) * (lg / eps)), "L"));
  p.k_indep = o.k_indep.value_or(
      CheckedU32(uint64_t{o.k_factor} * p.L * Log2Ceil(2ULL * d), "k"));
  return p;
}

ExpansionParams DeriveExpParams(uint64_t n, double epsilon, double alpha,
                                double mu, uint32_t d, const ParamOverrides& o) {
  if (n < 2) throw std::invalid_argument("exp params: N must be >= 2");
  if (d < 3) throw std::invalid_argument("exp params: d must be >= 3");
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::invalid_argument("exp params: alpha must be in (0,1)");
  }
  if (!(mu > 0.0 && mu < 0.25)) {
    throw std::invalid_argument("exp params: mu must be in (0,1/4)");
  }
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw std::invalid_argument("exp params: epsilon must be in (0,1)");
  }
  ExpansionParams p;
  p.n = n;
  p.epsilon = epsilon;
  p.alpha = alpha;
  p.mu = mu;
  p.d = d;
  const long double nn = static_cast<long double>(n);
  const long double a = alpha;
  p.T = o.T.value_or(CheckedU32(TolerantCeil(4.0L / epsilon), "T"));
  p.K = o.K.value_or(CheckedU32(TolerantCeil(std::pow(nn, 0.5L + mu)), "K"));
  p.L = o.L.value_or(CheckedU32(
      TolerantCeil(16.0L * d * d / (a * a) * std::log2(nn)), "L"));
  p.k_indep = o.k_indep.value_or(
      CheckedU32(uint64_t{o.k_factor} * p.L * Log2Ceil(2ULL * d), "k"));
  p.threshold = 0.5L * std::pow(nn, 2.0L * mu) +
                std::pow(nn, 1.75L * mu) / 128.0L;
  p.threshold_count = static_cast<uint64_t>(std::floor(p.threshold)) + 1;
  return p;
}

uint64_t BipartiteRepetitionStatistic(const BoundedDegreeGraph& g, Vertex s,
                                      const BipartiteParams& p, CoinMode mode,
                                      uint64_t rep_seed, QueryLedger& ledger,
                                      std::string* kwise_seed) {
  CheckGraph(g, p.d);
  return ParityCollisions(BipartitePoints(g, s, p, mode, rep_seed, ledger, kwise_seed));
}

uint64_t ExpansionRepetitionStatistic(const BoundedDegreeGraph& g, Vertex s,
                                      const ExpansionParams& p, CoinMode mode,
                                      uint64_t rep_seed, QueryLedger& ledger,
                                      std::string* kwise_seed) {
  CheckGraph(g, p.d);
  return EndpointCollisions(
      ExpansionEndpoints(g, s, p, mode, rep_seed, ledger, kwise_seed));
}

TesterVerdict TestBipartiteness(const BoundedDegreeGraph& g,
                                const BipartiteParams& p,
                                const TesterOptions& opt, uint64_t seed) {
  CheckGraph(g, p.d);
  TesterVerdict out;
  const CountingMode counting = opt.counting_mode();
  for (uint32_t tau = 0; tau < p.T; ++tau) {
    const uint64_t rep_seed = DeriveSeed(seed, tau);
    RepetitionRecord rec;
    rec.start = PickStart(g, rep_seed);
    auto pts = BipartitePoints(g, rec.start, p, opt.coins, rep_seed, out.ledger,
                               opt.coins == CoinMode::kKWise ? &rec.kwise_seed : nullptr);
    rec.collisions = ParityCollisions(pts);
    if (counting == CountingMode::kExact || pts.size() < 2) {
      rec.rejected = rec.collisions > 0;
    } else {
      CollisionQuery q;
      q.domain_size = pts.size();
      q.codomain_size = 2 * g.num_vertices();
      q.evaluator = [&pts](uint64_t x) { return pts[x]; };
      q.relation = CollisionRelation::SameKeyDistinctTag();
      q.injected_failure = opt.injected_failure;
      q.log_power = opt.log_power;
      Rng rng = MakeRng(rep_seed, kFinderStream);
      CollisionReport r = FindCollision(q, ExcludeSet{}, rng);
      out.ledger.modeled_quantum_queries += r.modeled_quantum_queries;
      rec.rejected = r.found.has_value();
    }
    out.repetitions.push_back(std::move(rec));
    if (out.repetitions.back().rejected) {
      out.accept = false;
      break;
    }
  }
  return out;
}

TesterVerdict TestExpansion(const BoundedDegreeGraph& g,
                            const ExpansionParams& p, const TesterOptions& opt,
                            uint64_t seed) {
  CheckGraph(g, p.d);
  TesterVerdict out;
  const CountingMode counting = opt.counting_mode();
  for (uint32_t tau = 0; tau < p.T; ++tau) {
    const uint64_t rep_seed = DeriveSeed(seed, tau);
    RepetitionRecord rec;
    rec.start = PickStart(g, rep_seed);
    auto ends = ExpansionEndpoints(g, rec.start, p, opt.coins, rep_seed, out.ledger,
                                   opt.coins == CoinMode::kKWise ? &rec.kwise_seed : nullptr);
    rec.collisions = EndpointCollisions(ends);
    if (counting == CountingMode::kExact || ends.size() < 2) {
      rec.rejected = static_cast<long double>(rec.collisions) > p.threshold;
    } else {
      CollisionQuery q;
      q.domain_size = ends.size();
      q.codomain_size = g.num_vertices();
      q.evaluator = [&ends](uint64_t x) { return CodomainPoint{ends[x], 0}; };
      q.relation = CollisionRelation::SameKey();
      q.injected_failure = opt.injected_failure;
      q.log_power = opt.log_power;
      Rng rng = MakeRng(rep_seed, kFinderStream);
      for (uint32_t sigma = 0; sigma < p.outer_retries && !rec.rejected; ++sigma) {
        CountReport r = CountAtLeast(q, p.threshold_count, rng);
        out.ledger.modeled_quantum_queries += r.modeled_quantum_queries;
        rec.rejected = r.at_least;
      }
    }
    out.repetitions.push_back(std::move(rec));
    if (out.repetitions.back().rejected) {
      out.accept = false;
      break;
    }
  }
  return out;
}

uint64_t PairwiseCollisions(const std::vector<Vertex>& endpoints) {
  uint64_t total = 0;
  for (size_t i = 0; i < endpoints.size(); ++i) {
    for (size_t j = i + 1; j < endpoints.size(); ++j) {
      total += endpoints[i] == endpoints[j];
    }
  }
  return total;
}

}  // namespace bdprop
