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

#ifndef MLGAMES_LCP_H_
#define MLGAMES_LCP_H_

#include <optional>
#include <vector>

#include "mlgames/game.h"
#include "mlgames/linalg.h"

namespace mlgames {

inline constexpr double kLcpTol = 1e-8;
inline constexpr double kActiveTol = 1e-7;
inline constexpr int kEnumerationCap = 25;
inline constexpr int kDefaultLemkePivots = 10000;

// Find w, z >= 0 with w = m z + b and w'z = 0.
struct LcpProblem {
  Matrix m;
  Vector b;

  LcpProblem(Matrix m, Vector b);
  int dim() const { return static_cast<int>(b.size()); }
};

struct LcpSolution {
  Vector z;
  Vector w;
  // Largest violation of feasibility (z, w >= 0), complementarity
  // (|w_i z_i|) and the equation w = m z + b.
  double residual = 0.0;
};

// Recomputes w = m z + b and the residual from scratch.
LcpSolution VerifySolution(const LcpProblem& p, const Vector& z);

// J: z active; K: both z and w at zero (degenerate); L: w active.
struct IndexPartition {
  std::vector<int> j;
  std::vector<int> k;
  std::vector<int> l;
};

struct EnumerationResult {
  // Sorted lexicographically by z.
  std::vector<LcpSolution> solutions;
  // Set when some singular support admitted a continuum of solutions; only
  // its least-norm representative is listed.
  bool degenerate_support = false;
};

// LCP(I + G, -q): equilibria of the game are the z parts of its solutions.
LcpProblem FromGame(const NetworkGame& game);

// Brute force over all 2^d supports. Throws CapacityError when d > cap.
EnumerationResult EnumerateSolutions(const LcpProblem& p, double tol = kLcpTol,
                                     int cap = kEnumerationCap);

struct LemkeResult {
  enum class Status { kSolved, kRayTermination };
  Status status = Status::kSolved;
  std::optional<LcpSolution> solution;
  int pivots = 0;
};

// Complementary pivoting with covering vector e = 1 and lexicographic
// ratio tests. Throws BudgetError when max_pivots is exhausted and
// DegeneratePivotError on a numerically singular pivot.
LemkeResult Lemke(const LcpProblem& p, int max_pivots = kDefaultLemkePivots);

IndexPartition Partition(const LcpSolution& sol,
                         double tol_active = kActiveTol);

}  // namespace mlgames

#endif  // MLGAMES_LCP_H_
