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

#ifndef MLGAMES_MATRIX_CLASSES_H_
#define MLGAMES_MATRIX_CLASSES_H_

#include <complex>
#include <optional>
#include <vector>

#include "mlgames/linalg.h"

namespace mlgames {

inline constexpr int kExactPMatrixCap = 16;
inline constexpr double kSymmetryTol = 1e-12;
inline constexpr double kMaxCondition = 1e12;

enum class Truth { kFalse, kTrue, kUnknown };

enum class ClassMethod {
  kExactMinors,     // all principal minors enumerated
  kSymmetricEigen,  // exact for symmetric input
  kSufficientOnly,  // a sufficient condition fired, or nothing did
  kDefinition,      // direct entrywise test of the definition
};

const char* ToString(Truth t);
const char* ToString(ClassMethod m);

struct ClassVerdict {
  Truth holds = Truth::kUnknown;
  ClassMethod method = ClassMethod::kDefinition;
  // Failing principal-minor index set, failing row, or failing (row, col).
  std::vector<int> witness_set;
  // Failing determinant, eigenvalue or margin.
  std::optional<double> witness_value;

  bool is_true() const { return holds == Truth::kTrue; }
  bool is_false() const { return holds == Truth::kFalse; }
};

// 1e-9 * max(1, ||m||_inf): determinants at or below this count as
// non-positive.
double DeterminantTolerance(const Matrix& m);

bool IsSymmetric(const Matrix& m, double tol = kSymmetryTol);

// Every principal minor has determinant > DeterminantTolerance(m).
// Exact by enumeration up to exact_cap, exact for symmetric m of any size,
// otherwise sufficient conditions only. Minors are visited by size, then
// lexicographically; the first failure is the witness.
ClassVerdict IsPMatrix(const Matrix& m, int exact_cap = kExactPMatrixCap);

// x'mx > 0 for all x != 0, decided on the symmetric part.
ClassVerdict IsPositiveDefinite(const Matrix& m);

// |m_ii| > sum_{j != i} |m_ij| for every row.
ClassVerdict IsStrictlyRowDiagonallyDominant(const Matrix& m);

// Row mean r_i = sum_j m_ij / d satisfies r_i > 0 and r_i > m_ik, k != i.
ClassVerdict IsBMatrix(const Matrix& m);

struct SpectralSummary {
  double lambda_min_re = 0.0;
  double lambda_max_re = 0.0;
  double rho = 0.0;
  bool is_symmetric = false;
  // Sorted by real part, then imaginary part.
  std::vector<std::complex<double>> eigenvalues;
};

// Symmetric inputs go through the self-adjoint solver. Throws NumericError
// if the eigensolver does not converge.
SpectralSummary Spectral(const Matrix& m);

// 2-norm condition number sigma_max / sigma_min (infinity if singular).
double ConditionNumber(const Matrix& m);

// Largest singular value.
double SpectralNorm(const Matrix& m);

enum class Eliminate { kFirst, kSecond };

// For the block matrix [a b; c d]: d - c a^-1 b when eliminating the first
// block, a - b d^-1 c when eliminating the second. Throws SingularityError
// when the eliminated block has condition number >= kMaxCondition.
Matrix SchurComplement(const Matrix& a, const Matrix& b, const Matrix& c,
                       const Matrix& d, Eliminate which);

}  // namespace mlgames

#endif  // MLGAMES_MATRIX_CLASSES_H_
