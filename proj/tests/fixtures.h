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

#ifndef MLGAMES_TESTS_FIXTURES_H_
#define MLGAMES_TESTS_FIXTURES_H_

#include <cmath>
#include <vector>

#include "mlgames/game.h"

namespace fixtures {

using mlgames::AdjacencyMatrix;
using mlgames::Matrix;
using mlgames::Vector;

inline AdjacencyMatrix Adj(int n, std::vector<double> e) {
  return AdjacencyMatrix::FromRowMajor(n, e);
}

// Two agents, two layers, neither combination weight gives uniqueness.
inline AdjacencyMatrix PairLayer1() { return Adj(2, {0, 4, 0.2, 0}); }
inline AdjacencyMatrix PairLayer2() { return Adj(2, {0, 0, 1, 0}); }
inline Vector PairTargets() {
  return Vector{{mlgames::TargetFromExponentialBenefit(std::exp(-1.0)),
                 mlgames::TargetFromExponentialBenefit(std::exp(-0.5))}};
}
inline mlgames::MultiplexGame PairMultiplex() {
  return mlgames::MultiplexGame::TwoLayer(PairLayer1(), PairLayer2(), 0.5,
                                          PairTargets());
}

// Two-layer, two-agent multilayer game with identity coupling.
inline mlgames::MultilayerGame CoupledPair(Vector q = Vector{{3, 6, 1, 0.5}}) {
  return mlgames::MultilayerGame::TwoLayer(
      Adj(2, {0, 2, 3, 0}), Adj(2, {0, 0.6, 0.8, 0}), Matrix::Identity(2, 2),
      Matrix::Identity(2, 2), q);
}

// Directed 5-agent layers on which the perturbation bound misfires
// (kappa = 0.75).
inline AdjacencyMatrix PerturbationLayer1() {
  return Adj(5, {0,     -0.20, 0.20,  0.39,  0.16,  //
                 0.91,  0,     -0.85, -0.88, 0.89,  //
                 -0.95, -0.32, 0,     -0.65, 0.68,  //
                 -0.37, -0.93, -0.46, 0,     0.29,  //
                 0.57,  -0.02, -0.73, -0.15, 0});
}
inline AdjacencyMatrix PerturbationLayer2() {
  return Adj(5, {0,     0.11,  -0.08, 0.05,  -0.09,  //
                 -0.08, 0,     -0.07, -0.06, 0,      //
                 -0.05, -0.10, 0,     -0.10, 0.08,   //
                 0.06,  -0.09, 0.12,  0,     0.07,   //
                 -0.02, -0.05, -0.09, 0.07,  0});
}

// Directed 3-agent layers on which the two-sided bound misfires
// (kappa = 0.5).
inline AdjacencyMatrix TwoSidedLayer1() {
  return Adj(3, {0, 0.92, -0.78, -0.96, 0, -0.93, 0.95, 0.79, 0});
}
inline AdjacencyMatrix TwoSidedLayer2() {
  return Adj(3, {0, -0.09, -0.08, -2.40, 0, -3.24, -1.85, -1.71, 0});
}

}  // namespace fixtures

#endif  // MLGAMES_TESTS_FIXTURES_H_
