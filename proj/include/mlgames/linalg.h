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

#ifndef MLGAMES_LINALG_H_
#define MLGAMES_LINALG_H_

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace mlgames {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Principal submatrix m[idx, idx].
Matrix Principal(const Matrix& m, const std::vector<int>& idx);

// Submatrix m[rows, cols].
Matrix Sub(const Matrix& m, const std::vector<int>& rows,
           const std::vector<int>& cols);

Vector Gather(const Vector& v, const std::vector<int>& idx);

bool AllFinite(const Matrix& m);

// Induced infinity norm (max absolute row sum).
double InfNorm(const Matrix& m);

// Shortest decimal string that round-trips to the same double.
std::string FormatDouble(double x);

}  // namespace mlgames

#endif  // MLGAMES_LINALG_H_
