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

#include "mlgames/game.h"

#include <cmath>
#include <string>
#include <utility>

#include "mlgames/errors.h"

namespace mlgames {
namespace {

void CheckFinite(const Matrix& m, const char* what) {
  if (!AllFinite(m)) throw InvalidParameterError(std::string(what) + ": non-finite entry");
}

}  // namespace

AdjacencyMatrix::AdjacencyMatrix(Matrix g) : g_(std::move(g)) {
  if (g_.rows() != g_.cols()) {
    throw ShapeError("adjacency matrix must be square, got " +
                     std::to_string(g_.rows()) + "x" +
                     std::to_string(g_.cols()));
  }
  CheckFinite(g_, "adjacency matrix");
  for (int i = 0; i < g_.rows(); ++i) {
    if (g_(i, i) != 0.0) {
      throw InvalidParameterError("adjacency matrix has nonzero diagonal at " +
                                  std::to_string(i));
    }
  }
}

AdjacencyMatrix AdjacencyMatrix::FromRowMajor(int n,
                                              std::span<const double> entries) {
  if (n <= 0) throw ShapeError("n must be positive");
  if (entries.size() != static_cast<size_t>(n) * n) {
    throw ShapeError("expected " + std::to_string(n * n) + " entries, got " +
                     std::to_string(entries.size()));
  }
  Matrix g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = entries[i * n + j];
  return AdjacencyMatrix(std::move(g));
}

AdjacencyMatrix AdjacencyMatrix::Zero(int n) {
  return AdjacencyMatrix(Matrix::Zero(n, n));
}

Matrix AdjacencyMatrix::PlusIdentity() const {
  return Matrix::Identity(size(), size()) + g_;
}

NetworkGame::NetworkGame(AdjacencyMatrix g, Vector q)
    : g_(std::move(g)), q_(std::move(q)) {
  if (q_.size() != g_.size()) {
    throw ShapeError("target vector has length " + std::to_string(q_.size()) +
                     ", game has " + std::to_string(g_.size()) + " agents");
  }
  CheckFinite(q_, "target vector");
}

MultiplexGame MultiplexGame::TwoLayer(AdjacencyMatrix g1, AdjacencyMatrix g2,
                                      double kappa, Vector q) {
  MultiplexGame game;
  game.layers = {std::move(g1), std::move(g2)};
  game.weights = {kappa, 1.0 - kappa};
  game.q = std::move(q);
  game.Validate();
  return game;
}

void MultiplexGame::Validate() const {
  if (layers.size() < 2) throw ShapeError("multiplex game needs >= 2 layers");
  if (weights.size() != layers.size())
    throw ShapeError("one weight per layer required");
  const int n = layers.front().size();
  for (const auto& g : layers)
    if (g.size() != n) throw ShapeError("multiplex layers differ in size");
  if (q.size() != n) throw ShapeError("target vector length mismatch");
  CheckFinite(q, "target vector");
  double sum = 0.0;
  for (double w : weights) {
    if (!std::isfinite(w) || w < 0.0)
      throw InvalidParameterError("layer weights must be nonnegative");
    sum += w;
  }
  if (std::abs(sum - 1.0) > kWeightSumTol)
    throw InvalidParameterError("layer weights sum to " + FormatDouble(sum));
}

MultilayerGame MultilayerGame::TwoLayer(AdjacencyMatrix g1, AdjacencyMatrix g2,
                                        Matrix g12, Matrix g21, Vector q) {
  MultilayerGame game;
  game.layers = {std::move(g1), std::move(g2)};
  game.inter = {{Matrix(), std::move(g12)}, {std::move(g21), Matrix()}};
  game.q = std::move(q);
  game.Validate();
  return game;
}

void MultilayerGame::Validate() const {
  const int m = num_layers();
  if (m < 1) throw ShapeError("multilayer game needs at least one layer");
  const int n = layer_size();
  for (const auto& g : layers)
    if (g.size() != n) throw ShapeError("multilayer layers differ in size");
  if (static_cast<int>(inter.size()) != m)
    throw ShapeError("inter-layer grid must be M x M");
  for (int l = 0; l < m; ++l) {
    if (static_cast<int>(inter[l].size()) != m)
      throw ShapeError("inter-layer grid must be M x M");
    for (int k = 0; k < m; ++k) {
      if (l == k) continue;
      const Matrix& b = inter[l][k];
      if (b.rows() != n || b.cols() != n) {
        throw ShapeError("inter-layer block (" + std::to_string(l) + "," +
                         std::to_string(k) + ") is " +
                         std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()) + ", expected " +
                         std::to_string(n) + "x" + std::to_string(n));
      }
      CheckFinite(b, "inter-layer block");
    }
  }
  if (q.size() != static_cast<Eigen::Index>(m) * n)
    throw ShapeError("target vector must have M*n entries");
  CheckFinite(q, "target vector");
}

double TargetFromExponentialBenefit(double cost) {
  if (!std::isfinite(cost) || cost <= 0.0)
    throw InvalidParameterError("cost must be positive and finite");
  return -std::log(cost);
}

NetworkGame BuildMultiplex(const MultiplexGame& game) {
  game.Validate();
  const int n = game.size();
  Matrix g = Matrix::Zero(n, n);
  for (size_t l = 0; l < game.layers.size(); ++l)
    g += game.weights[l] * game.layers[l].matrix();
  g.diagonal().setZero();
  return NetworkGame(AdjacencyMatrix(std::move(g)), game.q);
}

NetworkGame BuildSupra(const MultilayerGame& game) {
  game.Validate();
  const int m = game.num_layers();
  const int n = game.layer_size();
  Matrix g(m * n, m * n);
  for (int l = 0; l < m; ++l) {
    for (int k = 0; k < m; ++k) {
      g.block(l * n, k * n, n, n) =
          l == k ? game.layers[l].matrix() : game.inter[l][k];
    }
  }
  return NetworkGame(AdjacencyMatrix(std::move(g)), game.q);
}

Vector BestResponse(const Vector& x, const NetworkGame& game) {
  if (x.size() != game.size())
    throw ShapeError("effort profile length mismatch");
  return (game.q() - game.g().matrix() * x).cwiseMax(0.0);
}

bool IsNash(const Vector& x, const NetworkGame& game, double tol) {
  if (!(tol > 0.0)) throw InvalidParameterError("tol must be positive");
  const Vector y = BestResponse(x, game);
  if (x.size() > 0 && x.minCoeff() < -tol) return false;
  return (y - x).lpNorm<Eigen::Infinity>() <= tol;
}

}  // namespace mlgames
