// Copyright 2026 The mlgames Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.h"
#include "mlgames/certificates.h"
#include "mlgames/errors.h"
#include "mlgames/experiments.h"
#include "mlgames/io.h"
#include "mlgames/lcp.h"
#include "mlgames/matrix_classes.h"
#include "oracles.h"

namespace mlgames {
namespace {

constexpr uint64_t kSweepSeed = 20240601;

struct Outcome {
  bool pass = true;
  std::string detail;

  void Require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

bool IsP(const Matrix& g) {
  const ClassVerdict v = IsPMatrix(Matrix::Identity(g.rows(), g.cols()) + g);
  if (v.holds == Truth::kUnknown) throw InternalConsistencyError("undecided P-test");
  return v.is_true();
}

std::string Num(double x) { return FormatDouble(x); }

// ---- 1 ----------------------------------------------------------------------
Outcome TwoAgentExample() {
  Outcome o;
  const Vector q{{TargetFromExponentialBenefit(std::exp(-1.0)),
                  TargetFromExponentialBenefit(std::exp(-0.5))}};
  const MultiplexGame game = MultiplexGame::TwoLayer(
      fixtures::PairLayer1(), fixtures::PairLayer2(), 0.5, q);
  o.Require(IsPMatrix(fixtures::PairLayer1().PlusIdentity()).is_true(), "layer 1 not P");
  o.Require(IsPMatrix(fixtures::PairLayer2().PlusIdentity()).is_true(), "layer 2 not P");
  const NetworkGame flat = BuildMultiplex(game);
  o.Require(IsPMatrix(flat.g().PlusIdentity()).is_false(), "combined game is P");
  const LcpProblem p = FromGame(flat);
  const EnumerationResult r = EnumerateSolutions(p);
  o.Require(r.solutions.size() == 2, std::to_string(r.solutions.size()) + " equilibria");
  if (r.solutions.size() == 2) {
    const auto near = [](const Vector& a, const Vector& b) {
      return (a - b).lpNorm<Eigen::Infinity>() <= 1e-8;
    };
    const LcpSolution* a = nullptr;
    const LcpSolution* b = nullptr;
    for (const auto& s : r.solutions) {
      if (near(s.z, Vector{{1, 0}})) a = &s;
      if (near(s.z, Vector{{0, 0.5}})) b = &s;
    }
    o.Require(a && b, "equilibria differ from (1,0), (0,0.5)");
    if (a && b) {
      o.Require(CertifyStrongStability(*a, p).verdict == Verdict::kStronglyStable,
                "(1,0) not strongly stable");
      o.Require(CertifyStrongStability(*b, p).verdict == Verdict::kNotStronglyStable,
                "(0,0.5) strongly stable");
      o.Require(IsNash(a->z, flat) && IsNash(b->z, flat), "not fixed points");
    }
  }
  if (o.pass) o.detail = "equilibria (1,0) stable, (0,0.5) unstable";
  return o;
}

// ---- 2 ----------------------------------------------------------------------
Outcome DirectedCounterexamples() {
  Outcome o;
  const AdjacencyMatrix a1 = fixtures::PerturbationLayer1();
  const AdjacencyMatrix a2 = fixtures::PerturbationLayer2();
  const Certificate p3 = CertifyPerturbation(a1, a2, 0.75);
  const double lmin1 = *p3.Get("lambda_min_g1");
  o.Require(p3.verdict == Verdict::kGuaranteedUnique, "perturbation bound silent");
  o.Require(!IsP(0.75 * a1.matrix() + 0.25 * a2.matrix()), "perturbation game is P");
  o.Require(std::abs(lmin1 + 0.62) <= 0.01, "lambda_min(G1) = " + Num(lmin1));

  const AdjacencyMatrix b1 = fixtures::TwoSidedLayer1();
  const AdjacencyMatrix b2 = fixtures::TwoSidedLayer2();
  const Certificate p4 = CertifyTwoSidedFailure(b1, b2, 0.5);
  const double lmin2 = *p4.Get("lambda_min_g2");
  o.Require(p4.verdict == Verdict::kNotGuaranteedUnique, "two-sided bound silent");
  o.Require(IsP(0.5 * b1.matrix() + 0.5 * b2.matrix()), "two-sided game not P");
  o.Require(std::abs(lmin2 + 2.51) <= 0.01, "lambda_min_re(G2) = " + Num(lmin2));
  if (o.pass) {
    std::ostringstream s;
    s << "lambda_min(G1) = " << Num(std::round(lmin1 * 1000) / 1000)
      << ", lambda_min_re(G2) = " << Num(std::round(lmin2 * 1000) / 1000);
    o.detail = s.str();
  }
  return o;
}

// ---- 3 ----------------------------------------------------------------------
Outcome SymmetricSoundness() {
  Outcome o;
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double scales[] = {0.2, 0.5, 1.0, 2.0};
  int fired[8] = {}, wrong[8] = {};

  for (int t = 0; t < 2000; ++t) {
    const int n = 2 + t % 9;
    const AdjacencyMatrix g1(oracle::RandomSymmetricZeroDiagonal(n, scales[t % 4], rng));
    const AdjacencyMatrix g2(
        oracle::RandomSymmetricZeroDiagonal(n, scales[(t / 4) % 4], rng));
    const double kappa = 0.05 + 0.9 * unit(rng);
    const bool truth = IsP(kappa * g1.matrix() + (1 - kappa) * g2.matrix());
    const Certificate c2 = CertifyClosedClasses(g1, g2, kappa);
    const Certificate c3 = CertifyPerturbation(g1, g2, kappa);
    const Certificate c4 = CertifyTwoSidedFailure(g1, g2, kappa);
    if (c2.verdict == Verdict::kGuaranteedUnique) ++fired[2], wrong[2] += !truth;
    if (c3.verdict == Verdict::kGuaranteedUnique) ++fired[3], wrong[3] += !truth;
    if (c4.verdict == Verdict::kNotGuaranteedUnique) ++fired[4], wrong[4] += truth;
  }

  for (int t = 0; t < 2000; ++t) {
    const int n = 2 + t % 7;
    const int kind = t % 3;
    Matrix g1 = oracle::RandomSymmetricZeroDiagonal(n, scales[t % 4], rng);
    Matrix g2 = oracle::RandomSymmetricZeroDiagonal(n, scales[(t / 3) % 4], rng);
    Matrix g12 = oracle::RandomZeroDiagonal(n, scales[(t / 12) % 4], rng);
    g12.diagonal().setConstant(0.5 * (unit(rng) - 0.5));
    Matrix g21 = g12.transpose();
    if (kind == 0) {
      g1 = -g1.cwiseAbs();
      g2 = -g2.cwiseAbs();
      g12 *= 0.3;
      g21 = g12.transpose();
    } else if (kind == 2) {
      g21.setZero();
    }
    const MultilayerGame game = MultilayerGame::TwoLayer(
        AdjacencyMatrix(g1), AdjacencyMatrix(g2), g12, g21, Vector::Ones(2 * n));
    const bool truth = IsP(BuildSupra(game).g().matrix());
    const Certificate c5 = CertifyMultilayerFailure(game);
    const Certificate c6 = CertifyOneWay(game);
    const Certificate c7 = CertifyComplementsBlockDominance(game);
    if (c5.verdict == Verdict::kNotGuaranteedUnique) ++fired[5], wrong[5] += truth;
    if (c6.fired()) {
      ++fired[6];
      wrong[6] += (c6.verdict == Verdict::kGuaranteedUnique) != truth;
    }
    if (c7.verdict == Verdict::kGuaranteedUnique) ++fired[7], wrong[7] += !truth;
  }

  std::ostringstream s;
  for (int k = 2; k <= 7; ++k) {
    o.Require(wrong[k] == 0, "prop" + std::to_string(k) + " wrong " +
                                 std::to_string(wrong[k]) + " times");
    o.Require(fired[k] > 0, "prop" + std::to_string(k) + " never fired");
    s << (k > 2 ? ", " : "") << "prop" << k << " fired " << fired[k];
  }
  if (o.pass) o.detail = "0 false detections; " + s.str();
  return o;
}

// ---- 4 and 5 ----------------------------------------------------------------
struct UniquenessCheck {
  Outcome equivalence;
  Outcome stability;
};

UniquenessCheck UniquenessEquivalence() {
  UniquenessCheck out;
  Outcome& o = out.equivalence;
  std::mt19937_64 rng(4);
  const double scales[] = {0.3, 0.6, 1.0, 1.5};
  int p_games = 0, non_p = 0, lemke_runs = 0, stable = 0, unstable = 0;
  int split = 0;
  for (int t = 0; t < 1000; ++t) {
    const int n = 1 + t % 8;
    const Matrix g = oracle::RandomZeroDiagonal(n, scales[(t / 8) % 4], rng);
    const Matrix m = Matrix::Identity(n, n) + g;
    const ClassVerdict v = IsPMatrix(m);
    if (v.holds == Truth::kUnknown) {
      o.Require(false, "undecided P-test");
      continue;
    }
    const bool p = v.is_true();
    (p ? p_games : non_p)++;
    bool multiple_seen = false;
    for (int k = 0; k < 20; ++k) {
      const LcpProblem prob(m, oracle::RandomVector(n, 2.0, rng));
      const EnumerationResult r = EnumerateSolutions(prob);
      if (r.solutions.size() != 1) multiple_seen = true;
      if (!p) continue;
      if (r.solutions.size() != 1) {
        o.Require(false, "P game with " + std::to_string(r.solutions.size()) +
                             " solutions (trial " + std::to_string(t) + ")");
        continue;
      }
      const LemkeResult l = Lemke(prob);
      ++lemke_runs;
      if (!l.solution ||
          (l.solution->z - r.solutions[0].z).lpNorm<Eigen::Infinity>() > 1e-7) {
        o.Require(false, "Lemke disagrees (trial " + std::to_string(t) + ")");
      }
      const Certificate c = CertifyStrongStability(r.solutions[0], prob);
      (c.verdict == Verdict::kStronglyStable ? stable : unstable)++;
    }
    if (!p) {
      // A constructed right-hand side with two solutions.
      const auto b = oracle::TwoSolutionVector(m, DeterminantTolerance(m));
      if (b && EnumerateSolutions(LcpProblem(m, *b)).solutions.size() >= 2)
        multiple_seen = true;
      o.Require(multiple_seen,
                "non-P game with a unique solution everywhere (trial " +
                    std::to_string(t) + ")");
      split += multiple_seen;
    }
  }
  std::ostringstream s;
  s << p_games << " P games x 20 q unique, " << lemke_runs
    << " Lemke runs agree; " << split << "/" << non_p
    << " non-P games with multiple solutions";
  if (o.pass) o.detail = s.str();

  Outcome& st = out.stability;
  st.Require(unstable == 0, std::to_string(unstable) + " unstable unique equilibria");
  st.Require(stable > 0, "no unique equilibria checked");
  if (st.pass) st.detail = std::to_string(stable) + " unique equilibria strongly stable";
  return out;
}

// ---- 6 ----------------------------------------------------------------------
// Number of adjacent steps that move against `direction` (+1 nondecreasing),
// and the largest such step.
std::pair<int, double> Inversions(const std::vector<double>& rates, int direction) {
  int count = 0;
  double worst = 0;
  for (size_t i = 1; i < rates.size(); ++i) {
    const double step = direction * (rates[i] - rates[i - 1]);
    if (step < 0) {
      ++count;
      worst = std::max(worst, -step);
    }
  }
  return {count, worst};
}

SweepConfig TrendConfig(SweepMode mode, int workers) {
  SweepConfig cfg;
  cfg.mode = mode;
  cfg.trials = 5000;
  cfg.seed = kSweepSeed;
  cfg.workers = workers;
  if (mode == SweepMode::kMultiplexProp3) {
    cfg.s = 0.125;
    cfg.kappa = 0.75;
  } else {
    cfg.s = 4.0;
    cfg.kappa = 0.5;
  }
  return cfg;
}

struct SweepCsvs {
  std::string prop3, prop4, multilayer;
};

Outcome FalseDetectionTrends(int workers, SweepCsvs* csv) {
  Outcome o;
  std::ostringstream s;
  for (SweepMode mode : {SweepMode::kMultiplexProp3, SweepMode::kMultiplexProp4}) {
    const MultiplexSweepResult r = RunMultiplexSweep(TrendConfig(mode, workers));
    (mode == SweepMode::kMultiplexProp3 ? csv->prop3 : csv->prop4) =
        RecordsCsv(r) + SummaryCsv(r);
    std::vector<double> rates;
    for (const auto& sum : r.summaries) rates.push_back(sum.rate);
    const int direction = mode == SweepMode::kMultiplexProp3 ? 1 : -1;
    const auto [count, worst] = Inversions(rates, direction);
    s << ToString(mode) << " rates";
    for (double x : rates) s << ' ' << Num(std::round(x * 10000) / 100) << '%';
    if (*std::max_element(rates.begin(), rates.end()) == 0.0)
      s << " (all zero, monotone only vacuously)";
    s << "; ";
    o.Require(count <= 1 && worst <= 0.02,
              std::string(ToString(mode)) + " trend broken (" +
                  std::to_string(count) + " inversions, worst " + Num(worst) + ")");
  }
  if (o.pass) o.detail = s.str();
  return o;
}

// ---- 7 ----------------------------------------------------------------------
std::vector<AdjacencyMatrix> FrozenLayerOne() {
  const Json doc = ReadJsonFile(std::string(MLGAMES_DATA_DIR) + "/multilayer_layer1.json");
  std::vector<AdjacencyMatrix> out;
  for (const auto& l : doc.at("layers")) out.push_back(AdjacencyFromJson(l));
  return out;
}

Outcome RegimeOrdering(int workers, SweepCsvs* csv) {
  Outcome o;
  MultilayerSweepConfig cfg;
  cfg.workers = workers;
  const MultilayerSweepResult r = RunMultilayerSweep(cfg, FrozenLayerOne());
  csv->multilayer = RecordsCsv(r) + SummaryCsv(r);
  int counts[4];
  for (int k = 0; k < 4; ++k) {
    counts[k] = r.UniqueCount(kAllRegimes[k]);
    o.Require(r.Total(kAllRegimes[k]) == 6000, "wrong instance count");
  }
  o.Require(counts[0] >= counts[1] && counts[1] >= counts[2] && counts[2] >= counts[3],
            "regime ordering violated");
  int both_p = 0, both_p_unique = 0;
  for (const auto& rec : r.records) {
    if (rec.regime != InterRegime::kOneWay || !rec.layer2_unique) continue;
    ++both_p;
    both_p_unique += rec.unique;
  }
  o.Require(both_p > 0 && both_p == both_p_unique, "one-way with P layers not all unique");
  std::ostringstream s;
  s << "unique of 6000: one-way " << counts[0] << ", very-weak " << counts[1]
    << ", weak " << counts[2] << ", normal " << counts[3] << "; one-way P/P "
    << both_p_unique << "/" << both_p;
  if (o.pass) o.detail = s.str();
  return o;
}

// ---- 8 ----------------------------------------------------------------------
Outcome ComplementsExistence() {
  Outcome o;
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int below = 0, above = 0;
  for (int t = 0; t < 500; ++t) {
    const int n = 2 + t % 7;
    Matrix g = -oracle::RandomZeroDiagonal(n, 1.0, rng).cwiseAbs();
    const double rho = Spectral(g).rho;
    const bool existing = t % 2 == 0;
    const double target = existing ? 0.1 + 0.85 * unit(rng) : 1.05 + 0.95 * unit(rng);
    g *= target / rho;
    const Certificate c = CertifyExistence(AdjacencyMatrix(g));
    o.Require(c.verdict == (existing ? Verdict::kExists : Verdict::kNotExists),
              "verdict mismatch at rho " + Num(target));
    bool any_empty = false, all_nonempty = true;
    for (int k = 0; k < 10; ++k) {
      const Vector q = k == 0 ? Vector(Vector::Ones(n)) : oracle::RandomVector(n, 2.0, rng);
      const bool empty =
          EnumerateSolutions(FromGame(NetworkGame(AdjacencyMatrix(g), q))).solutions.empty();
      any_empty = any_empty || empty;
      all_nonempty = all_nonempty && !empty;
    }
    if (existing) {
      ++below;
      o.Require(all_nonempty, "empty set with rho " + Num(target));
    } else {
      ++above;
      o.Require(any_empty, "no empty set with rho " + Num(target));
    }
  }
  if (o.pass)
    o.detail = std::to_string(below) + " games with rho < 1 solvable, " +
               std::to_string(above) + " with rho >= 1 empty for some q";
  return o;
}

// ---- 9 ----------------------------------------------------------------------
Outcome ChainCycleBlocks() {
  Outcome o;
  const auto fires = [](const Matrix& b) {
    return CertifyChainCycleDegenerate({b}).verdict == Verdict::kNotGuaranteedUnique;
  };
  const Matrix dag{{0, 2, 1}, {0, 0, 0}, {0, 3, 0}};
  const Matrix idempotent{{1, 1}, {0, 0}};
  const Matrix zero_sum{{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}};
  const Matrix ones{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}};
  o.Require(std::abs(dag.determinant()) < 1e-12 && fires(dag), "DAG block");
  o.Require((idempotent * idempotent - idempotent).isZero(0) && fires(idempotent),
            "idempotent block");
  o.Require(fires(zero_sum), "zero-row-sum circulant");
  o.Require(std::abs(ones.determinant() - 2.0) < 1e-12 && !fires(ones),
            "all-ones circulant fired");
  if (o.pass) o.detail = "DAG, idempotent, zero-sum circulant fire; all-ones circulant does not";
  return o;
}

// ---- 10 ---------------------------------------------------------------------
Outcome Determinism(const SweepCsvs& one) {
  Outcome o;
  SweepCsvs eight;
  FalseDetectionTrends(8, &eight);
  RegimeOrdering(8, &eight);
  o.Require(one.prop3 == eight.prop3, "prop3 CSV differs");
  o.Require(one.prop4 == eight.prop4, "prop4 CSV differs");
  o.Require(one.multilayer == eight.multilayer, "multilayer CSV differs");
  if (o.pass)
    o.detail = "CSVs identical under 1 and 8 workers (" +
               std::to_string(one.prop3.size() + one.prop4.size() + one.multilayer.size()) +
               " bytes)";
  return o;
}

int failures = 0;

void Report(int id, double limit_s, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_s > 0 && secs > limit_s) {
    o.Require(false, "over the " + Num(limit_s) + " s budget");
  }
  failures += !o.pass;
  std::printf("criterion %2d: %s  (%.2f s)  %s\n", id, o.pass ? "PASS" : "FAIL", secs,
              o.detail.c_str());
  std::fflush(stdout);
}

}  // namespace
}  // namespace mlgames

int main() {
  using namespace mlgames;
  Report(1, 1, TwoAgentExample);
  Report(2, 1, DirectedCounterexamples);
  Report(3, 120, SymmetricSoundness);
  UniquenessCheck uniqueness;
  Report(4, 300, [&] {
    uniqueness = UniquenessEquivalence();
    return uniqueness.equivalence;
  });
  Report(5, 0, [&] { return uniqueness.stability; });
  SweepCsvs single;
  Report(6, 900, [&] { return FalseDetectionTrends(1, &single); });
  Report(7, 600, [&] { return RegimeOrdering(1, &single); });
  Report(8, 120, ComplementsExistence);
  Report(9, 1, ChainCycleBlocks);
  Report(10, 0, [&] { return Determinism(single); });
  return failures == 0 ? 0 : 1;
}
