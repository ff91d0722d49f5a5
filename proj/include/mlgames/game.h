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

#ifndef MLGAMES_GAME_H_
#define MLGAMES_GAME_H_

#include <span>
#include <vector>

#include "mlgames/linalg.h"

namespace mlgames {

inline constexpr double kDefaultNashTol = 1e-8;
inline constexpr double kWeightSumTol = 1e-12;

// Square interdependency matrix G with zero diagonal and finite entries.
// Entry (i, j) is the spillover agent i receives from agent j's effort:
// positive for strategic substitutes, negative for complements.
class AdjacencyMatrix {
 public:
  AdjacencyMatrix() = default;
  explicit AdjacencyMatrix(Matrix g);

  static AdjacencyMatrix FromRowMajor(int n, std::span<const double> entries);
  static AdjacencyMatrix Zero(int n);

  int size() const { return static_cast<int>(g_.rows()); }
  const Matrix& matrix() const { return g_; }
  double operator()(int i, int j) const { return g_(i, j); }

  // I + G.
  Matrix PlusIdentity() const;

 private:
  Matrix g_;
};

// Linear best-reply game: x_i = max(0, q_i - (G x)_i).
class NetworkGame {
 public:
  NetworkGame(AdjacencyMatrix g, Vector q);

  int size() const { return g_.size(); }
  const AdjacencyMatrix& g() const { return g_; }
  const Vector& q() const { return q_; }

 private:
  AdjacencyMatrix g_;
  Vector q_;
};

// Agents interacting over several networks at once; the effective network
// is the weighted sum of the layers.
struct MultiplexGame {
  std::vector<AdjacencyMatrix> layers;
  std::vector<double> weights;
  Vector q;

  static MultiplexGame TwoLayer(AdjacencyMatrix g1, AdjacencyMatrix g2,
                                double kappa, Vector q);
  int size() const { return layers.empty() ? 0 : layers.front().size(); }

  // Throws ShapeError / InvalidParameterError.
  void Validate() const;
};

// One action dimension per layer. inter[l][k] (l != k) is how layer-l
// actions respond to layer-k actions; inter[l][l] is ignored and may be
// empty. q is stacked layer-major (all layer-0 agents first).
struct MultilayerGame {
  std::vector<AdjacencyMatrix> layers;
  std::vector<std::vector<Matrix>> inter;
  Vector q;

  static MultilayerGame TwoLayer(AdjacencyMatrix g1, AdjacencyMatrix g2,
                                 Matrix g12, Matrix g21, Vector q);
  int num_layers() const { return static_cast<int>(layers.size()); }
  int layer_size() const { return layers.empty() ? 0 : layers.front().size(); }
  const Matrix& Inter(int l, int k) const { return inter[l][k]; }

  void Validate() const;
};

// q solving b'(q) = c for the benefit b(x) = 1 - exp(-x), i.e. q = -ln(c).
double TargetFromExponentialBenefit(double cost);

NetworkGame BuildMultiplex(const MultiplexGame& game);

// Supra-adjacency game over M*n effort variables.
NetworkGame BuildSupra(const MultilayerGame& game);

// y_i = max(0, q_i - (G x)_i).
Vector BestResponse(const Vector& x, const NetworkGame& game);

// True iff x is a fixed point of BestResponse within tol and x >= -tol.
bool IsNash(const Vector& x, const NetworkGame& game,
            double tol = kDefaultNashTol);

}  // namespace mlgames

#endif  // MLGAMES_GAME_H_
