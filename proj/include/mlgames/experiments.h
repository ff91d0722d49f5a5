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

#ifndef MLGAMES_EXPERIMENTS_H_
#define MLGAMES_EXPERIMENTS_H_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mlgames/certificates.h"
#include "mlgames/game.h"
#include "mlgames/rng.h"

namespace mlgames {

inline constexpr int kMaxLayerRedraws = 10000;
// Seed of the frozen first-layer fixtures in data/multilayer_layer1.json.
inline constexpr uint64_t kLayerOneFixtureSeed = 1729;

// Zero-diagonal layer with off-diagonal entries i.i.d. on
// (-half_width, half_width).
AdjacencyMatrix GenRandomLayer(int n, double half_width, CounterRng& rng);

// Draws layers until I + G is a P-matrix. Each attempt uses its own
// substream (seed, stream, attempt). Throws BudgetError after max_redraws.
AdjacencyMatrix DrawUniqueLayer(int n, double half_width, uint64_t seed,
                                uint64_t stream,
                                int max_redraws = kMaxLayerRedraws,
                                bool symmetrize = false);

enum class SweepMode { kMultiplexProp3, kMultiplexProp4, kMultilayer };

const char* ToString(SweepMode mode);
SweepMode SweepModeFromString(const std::string& name);

struct SweepConfig {
  std::vector<int> n_range = {3, 4, 5, 6, 7, 8};
  int trials = 5000;
  double s = 0.125;
  double kappa = 0.5;
  uint64_t seed = 0;
  SweepMode mode = SweepMode::kMultiplexProp3;
  int workers = 1;
  // Replace every draw G by (G + G') / 2.
  bool symmetrize = false;

  void Validate() const;
};

struct ExperimentRecord {
  int trial = 0;
  int n = 0;
  double s = 0.0;
  double kappa = 0.0;
  SweepMode mode = SweepMode::kMultiplexProp3;
  Verdict verdict = Verdict::kInconclusive;
  // I + G|| is a P-matrix.
  bool ground_truth = false;
  bool false_detection = false;
};

struct RateSummary {
  int n = 0;
  double s = 0.0;
  SweepMode mode = SweepMode::kMultiplexProp3;
  // false detections / trials.
  double rate = 0.0;
  int trials = 0;
  int fired = 0;
  int false_detections = 0;
};

struct MultiplexSweepResult {
  std::vector<ExperimentRecord> records;
  std::vector<RateSummary> summaries;
};

// Per trial: layer 1 on (-1, 1) redrawn until it has a unique equilibrium,
// layer 2 on (-s, s), then the chosen certificate against the exact
// P-matrix test of I + G||.
MultiplexSweepResult RunMultiplexSweep(const SweepConfig& cfg);

// trial,n,s,kappa,mode,verdict,ground_truth,false_detection
std::string RecordsCsv(const MultiplexSweepResult& result);
// n,s,mode,rate,trials
std::string SummaryCsv(const MultiplexSweepResult& result);

enum class InterRegime { kOneWay, kVeryWeak, kWeak, kNormal };

inline constexpr InterRegime kAllRegimes[] = {
    InterRegime::kOneWay, InterRegime::kVeryWeak, InterRegime::kWeak,
    InterRegime::kNormal};

const char* ToString(InterRegime regime);
// Half-width of the inter-layer weight distribution.
double RegimeScale(InterRegime regime);

struct MultilayerSweepConfig {
  int n = 5;
  int layer1_count = 6;
  int layer2_count = 1000;
  uint64_t seed = kLayerOneFixtureSeed;
  int workers = 1;
};

struct MultilayerRecord {
  int layer1 = 0;
  int layer2 = 0;
  InterRegime regime = InterRegime::kNormal;
  double lambda_min_1 = 0.0;
  double lambda_min_2 = 0.0;
  bool layer2_unique = false;
  // I + G_supra is a P-matrix.
  bool unique = false;
};

struct MultilayerSweepResult {
  std::vector<AdjacencyMatrix> layer1;
  // Sorted by lambda_min_1, then lambda_min_2 (real parts), then indices.
  std::vector<MultilayerRecord> records;

  int UniqueCount(InterRegime regime) const;
  int Total(InterRegime regime) const;
};

// The fixed first layers: rejection-sampled P layers on (-1, 1).
std::vector<AdjacencyMatrix> GenerateLayerOneSet(int n, int count,
                                                 uint64_t seed);

// Pairs every first layer with layer2_count unfiltered second layers under
// each inter-layer regime. The regimes share one base draw per pair scaled
// by RegimeScale; the one-way regime zeroes the layer-2 <- layer-1 block.
MultilayerSweepResult RunMultilayerSweep(const MultilayerSweepConfig& cfg);
MultilayerSweepResult RunMultilayerSweep(
    const MultilayerSweepConfig& cfg,
    const std::vector<AdjacencyMatrix>& layer1);

// layer1,layer2,regime,lambda_min_1,lambda_min_2,layer2_unique,unique
std::string RecordsCsv(const MultilayerSweepResult& result);
// regime,unique,total,fraction
std::string SummaryCsv(const MultilayerSweepResult& result);

// det(I + k g_a + (1 - k) g_b) at each grid point.
std::vector<std::pair<double, double>> KappaDeterminantSweep(
    const AdjacencyMatrix& g_a, const AdjacencyMatrix& g_b,
    const std::vector<double>& kappa_grid);

// `points` evenly spaced values on [lo, hi].
std::vector<double> KappaGrid(double lo = 0.2, double hi = 1.0,
                              int points = 33);

}  // namespace mlgames

#endif  // MLGAMES_EXPERIMENTS_H_
