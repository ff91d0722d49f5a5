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

#include "mlgames/experiments.h"

#include <algorithm>
#include <sstream>
#include <string>
#include <tuple>

#include "mlgames/errors.h"
#include "mlgames/linalg.h"
#include "mlgames/matrix_classes.h"
#include "mlgames/parallel.h"

namespace mlgames {
namespace {

// High bits separate the stream families drawn from one seed.
constexpr uint64_t kLayerTwoBit = uint64_t{1} << 63;
constexpr uint64_t kFixtureBits = uint64_t{1} << 62;
constexpr uint64_t kSecondLayerBits = uint64_t{2} << 60;
constexpr uint64_t kInterBits = uint64_t{3} << 60;

uint64_t TrialKey(int n, int t) {
  return static_cast<uint64_t>(n) << 32 | static_cast<uint32_t>(t);
}

AdjacencyMatrix Symmetrized(const AdjacencyMatrix& g) {
  return AdjacencyMatrix(0.5 * (g.matrix() + g.matrix().transpose()));
}

Matrix RandomBlock(int n, CounterRng& rng) {
  Matrix b(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b(i, j) = rng.UniformSymmetric(1.0);
  return b;
}

}  // namespace

AdjacencyMatrix GenRandomLayer(int n, double half_width, CounterRng& rng) {
  if (n < 2) throw InvalidParameterError("layer size must be >= 2");
  if (!(half_width > 0.0))
    throw InvalidParameterError("half width must be positive");
  Matrix g = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) g(i, j) = rng.UniformSymmetric(half_width);
  return AdjacencyMatrix(std::move(g));
}

AdjacencyMatrix DrawUniqueLayer(int n, double half_width, uint64_t seed,
                                uint64_t stream, int max_redraws,
                                bool symmetrize) {
  for (int attempt = 0; attempt < max_redraws; ++attempt) {
    CounterRng rng(seed, stream, static_cast<uint64_t>(attempt));
    AdjacencyMatrix g = GenRandomLayer(n, half_width, rng);
    if (symmetrize) g = Symmetrized(g);
    if (IsPMatrix(g.PlusIdentity()).is_true()) return g;
  }
  throw BudgetError("no layer with a unique equilibrium after " +
                    std::to_string(max_redraws) + " redraws (n = " +
                    std::to_string(n) + ")");
}

const char* ToString(SweepMode mode) {
  switch (mode) {
    case SweepMode::kMultiplexProp3:
      return "prop3";
    case SweepMode::kMultiplexProp4:
      return "prop4";
    case SweepMode::kMultilayer:
      return "multilayer";
  }
  return "?";
}

SweepMode SweepModeFromString(const std::string& name) {
  if (name == "prop3" || name == "multiplex-prop3")
    return SweepMode::kMultiplexProp3;
  if (name == "prop4" || name == "multiplex-prop4")
    return SweepMode::kMultiplexProp4;
  if (name == "multilayer") return SweepMode::kMultilayer;
  throw InvalidParameterError("unknown sweep mode \"" + name + "\"");
}

void SweepConfig::Validate() const {
  if (trials < 1) throw InvalidParameterError("trials must be >= 1");
  if (!(s > 0.0)) throw InvalidParameterError("s must be positive");
  if (!(kappa >= 0.0 && kappa <= 1.0))
    throw InvalidParameterError("kappa must lie in [0, 1]");
  if (n_range.empty()) throw InvalidParameterError("empty n range");
  for (int n : n_range) {
    if (n < 2) throw InvalidParameterError("n must be >= 2");
    if (n > kExactPMatrixCap) {
      throw CapacityError("n = " + std::to_string(n) +
                          " exceeds the exact P-matrix cap");
    }
  }
}

MultiplexSweepResult RunMultiplexSweep(const SweepConfig& cfg) {
  cfg.Validate();
  if (cfg.mode == SweepMode::kMultilayer)
    throw InvalidParameterError("multilayer mode has its own sweep");
  const size_t trials = static_cast<size_t>(cfg.trials);
  MultiplexSweepResult result;
  result.records.resize(cfg.n_range.size() * trials);
  ParallelFor(result.records.size(), cfg.workers, [&](size_t slot) {
    const int n = cfg.n_range[slot / trials];
    const int t = static_cast<int>(slot % trials);
    const uint64_t key = TrialKey(n, t);
    const AdjacencyMatrix g1 = DrawUniqueLayer(n, 1.0, cfg.seed, key,
                                               kMaxLayerRedraws, cfg.symmetrize);
    CounterRng rng2(cfg.seed, key | kLayerTwoBit);
    AdjacencyMatrix g2 = GenRandomLayer(n, cfg.s, rng2);
    if (cfg.symmetrize) g2 = Symmetrized(g2);

    ExperimentRecord& r = result.records[slot];
    r.trial = t;
    r.n = n;
    r.s = cfg.s;
    r.kappa = cfg.kappa;
    r.mode = cfg.mode;
    const Matrix combined =
        Matrix::Identity(n, n) + cfg.kappa * g1.matrix() +
        (1.0 - cfg.kappa) * g2.matrix();
    r.ground_truth = IsPMatrix(combined).is_true();
    if (cfg.mode == SweepMode::kMultiplexProp3) {
      r.verdict = CertifyPerturbation(g1, g2, cfg.kappa).verdict;
      r.false_detection =
          r.verdict == Verdict::kGuaranteedUnique && !r.ground_truth;
    } else {
      r.verdict = CertifyTwoSidedFailure(g1, g2, cfg.kappa).verdict;
      r.false_detection =
          r.verdict == Verdict::kNotGuaranteedUnique && r.ground_truth;
    }
  });
  for (size_t c = 0; c < cfg.n_range.size(); ++c) {
    RateSummary sum;
    sum.n = cfg.n_range[c];
    sum.s = cfg.s;
    sum.mode = cfg.mode;
    sum.trials = cfg.trials;
    for (size_t t = 0; t < trials; ++t) {
      const ExperimentRecord& r = result.records[c * trials + t];
      sum.fired += r.verdict != Verdict::kInconclusive;
      sum.false_detections += r.false_detection;
    }
    sum.rate = static_cast<double>(sum.false_detections) / sum.trials;
    result.summaries.push_back(sum);
  }
  return result;
}

std::string RecordsCsv(const MultiplexSweepResult& result) {
  std::ostringstream out;
  out << "trial,n,s,kappa,mode,verdict,ground_truth,false_detection\n";
  for (const auto& r : result.records) {
    out << r.trial << ',' << r.n << ',' << FormatDouble(r.s) << ','
        << FormatDouble(r.kappa) << ',' << ToString(r.mode) << ','
        << ToString(r.verdict) << ',' << (r.ground_truth ? 1 : 0) << ','
        << (r.false_detection ? 1 : 0) << '\n';
  }
  return out.str();
}

std::string SummaryCsv(const MultiplexSweepResult& result) {
  std::ostringstream out;
  out << "n,s,mode,rate,trials\n";
  for (const auto& s : result.summaries) {
    out << s.n << ',' << FormatDouble(s.s) << ',' << ToString(s.mode) << ','
        << FormatDouble(s.rate) << ',' << s.trials << '\n';
  }
  return out.str();
}

const char* ToString(InterRegime regime) {
  switch (regime) {
    case InterRegime::kOneWay:
      return "one-way";
    case InterRegime::kVeryWeak:
      return "very-weak";
    case InterRegime::kWeak:
      return "weak";
    case InterRegime::kNormal:
      return "normal";
  }
  return "?";
}

double RegimeScale(InterRegime regime) {
  switch (regime) {
    case InterRegime::kVeryWeak:
      return 0.05;
    case InterRegime::kWeak:
      return 0.5;
    case InterRegime::kOneWay:
    case InterRegime::kNormal:
      return 1.0;
  }
  return 1.0;
}

int MultilayerSweepResult::UniqueCount(InterRegime regime) const {
  int count = 0;
  for (const auto& r : records) count += r.regime == regime && r.unique;
  return count;
}

int MultilayerSweepResult::Total(InterRegime regime) const {
  int count = 0;
  for (const auto& r : records) count += r.regime == regime;
  return count;
}

std::vector<AdjacencyMatrix> GenerateLayerOneSet(int n, int count,
                                                 uint64_t seed) {
  std::vector<AdjacencyMatrix> out;
  for (int i = 0; i < count; ++i)
    out.push_back(DrawUniqueLayer(n, 1.0, seed, kFixtureBits | i));
  return out;
}

MultilayerSweepResult RunMultilayerSweep(const MultilayerSweepConfig& cfg) {
  return RunMultilayerSweep(
      cfg, GenerateLayerOneSet(cfg.n, cfg.layer1_count, cfg.seed));
}

MultilayerSweepResult RunMultilayerSweep(
    const MultilayerSweepConfig& cfg,
    const std::vector<AdjacencyMatrix>& layer1) {
  const int n = cfg.n;
  if (n < 2 || 2 * n > kExactPMatrixCap)
    throw CapacityError("supra dimension exceeds the exact P-matrix cap");
  if (cfg.layer2_count < 1) throw InvalidParameterError("layer2_count < 1");
  for (const auto& g : layer1)
    if (g.size() != n) throw ShapeError("first-layer size mismatch");

  const size_t count1 = layer1.size();
  const size_t count2 = static_cast<size_t>(cfg.layer2_count);
  std::vector<AdjacencyMatrix> layer2(count2);
  std::vector<double> lmin2(count2);
  std::vector<char> p2(count2);
  ParallelFor(count2, cfg.workers, [&](size_t j) {
    CounterRng rng(cfg.seed, kSecondLayerBits | j);
    layer2[j] = GenRandomLayer(n, 1.0, rng);
    lmin2[j] = Spectral(layer2[j].matrix()).lambda_min_re;
    p2[j] = IsPMatrix(layer2[j].PlusIdentity()).is_true();
  });
  std::vector<double> lmin1(count1);
  for (size_t i = 0; i < count1; ++i)
    lmin1[i] = Spectral(layer1[i].matrix()).lambda_min_re;

  constexpr size_t kRegimes = std::size(kAllRegimes);
  MultilayerSweepResult result;
  result.layer1 = layer1;
  result.records.resize(count1 * count2 * kRegimes);
  ParallelFor(count1 * count2, cfg.workers, [&](size_t pair) {
    const size_t i = pair / count2;
    const size_t j = pair % count2;
    CounterRng rng(cfg.seed, kInterBits | pair);
    const Matrix base12 = RandomBlock(n, rng);
    const Matrix base21 = RandomBlock(n, rng);
    Matrix supra(2 * n, 2 * n);
    supra.topLeftCorner(n, n) = layer1[i].PlusIdentity();
    supra.bottomRightCorner(n, n) = layer2[j].PlusIdentity();
    for (size_t r = 0; r < kRegimes; ++r) {
      const InterRegime regime = kAllRegimes[r];
      const double scale = RegimeScale(regime);
      supra.topRightCorner(n, n) = scale * base12;
      if (regime == InterRegime::kOneWay) {
        supra.bottomLeftCorner(n, n).setZero();
      } else {
        supra.bottomLeftCorner(n, n) = scale * base21;
      }
      MultilayerRecord& rec = result.records[pair * kRegimes + r];
      rec.layer1 = static_cast<int>(i);
      rec.layer2 = static_cast<int>(j);
      rec.regime = regime;
      rec.lambda_min_1 = lmin1[i];
      rec.lambda_min_2 = lmin2[j];
      rec.layer2_unique = p2[j];
      rec.unique = IsPMatrix(supra).is_true();
    }
  });
  std::stable_sort(result.records.begin(), result.records.end(),
                   [](const MultilayerRecord& a, const MultilayerRecord& b) {
                     return std::tie(a.lambda_min_1, a.lambda_min_2, a.layer1,
                                     a.layer2) <
                            std::tie(b.lambda_min_1, b.lambda_min_2, b.layer1,
                                     b.layer2);
                   });
  return result;
}

std::string RecordsCsv(const MultilayerSweepResult& result) {
  std::ostringstream out;
  out << "layer1,layer2,regime,lambda_min_1,lambda_min_2,layer2_unique,unique\n";
  for (const auto& r : result.records) {
    out << r.layer1 << ',' << r.layer2 << ',' << ToString(r.regime) << ','
        << FormatDouble(r.lambda_min_1) << ',' << FormatDouble(r.lambda_min_2)
        << ',' << (r.layer2_unique ? 1 : 0) << ',' << (r.unique ? 1 : 0)
        << '\n';
  }
  return out.str();
}

std::string SummaryCsv(const MultilayerSweepResult& result) {
  std::ostringstream out;
  out << "regime,unique,total,fraction\n";
  for (InterRegime regime : kAllRegimes) {
    const int unique = result.UniqueCount(regime);
    const int total = result.Total(regime);
    out << ToString(regime) << ',' << unique << ',' << total << ','
        << FormatDouble(total ? static_cast<double>(unique) / total : 0.0)
        << '\n';
  }
  return out.str();
}

std::vector<std::pair<double, double>> KappaDeterminantSweep(
    const AdjacencyMatrix& g_a, const AdjacencyMatrix& g_b,
    const std::vector<double>& kappa_grid) {
  if (g_a.size() != g_b.size()) throw ShapeError("layers differ in size");
  const int n = g_a.size();
  std::vector<std::pair<double, double>> curve;
  curve.reserve(kappa_grid.size());
  for (double k : kappa_grid) {
    if (!(k >= 0.0 && k <= 1.0))
      throw InvalidParameterError("kappa grid values must lie in [0, 1]");
    const Matrix m = Matrix::Identity(n, n) + k * g_a.matrix() +
                     (1.0 - k) * g_b.matrix();
    curve.emplace_back(k, m.partialPivLu().determinant());
  }
  return curve;
}

std::vector<double> KappaGrid(double lo, double hi, int points) {
  if (points < 2) throw InvalidParameterError("grid needs >= 2 points");
  if (!(lo >= 0.0 && hi <= 1.0 && lo <= hi))
    throw InvalidParameterError("grid must lie inside [0, 1]");
  std::vector<double> grid(points);
  for (int i = 0; i < points; ++i)
    grid[i] = lo + (hi - lo) * i / (points - 1);
  grid.back() = hi;
  return grid;
}

}  // namespace mlgames
