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

#include "mlgames/matrix_classes.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "mlgames/errors.h"

namespace mlgames {
namespace {

using SmallMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, 0,
                                  kExactPMatrixCap, kExactPMatrixCap>;

void RequireSquare(const Matrix& m, const char* op) {
  if (m.rows() != m.cols()) {
    throw ShapeError(std::string(op) + ": matrix is " +
                     std::to_string(m.rows()) + "x" +
                     std::to_string(m.cols()));
  }
}

double MinSymmetricEigenvalue(const Matrix& s) {
  if (s.rows() == 0) return std::numeric_limits<double>::infinity();
  Eigen::SelfAdjointEigenSolver<Matrix> es(s, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw NumericError("symmetric eigensolver did not converge");
  return es.eigenvalues().minCoeff();
}

// Visits k-subsets of {0..d-1} in lexicographic order.
bool NextCombination(std::vector<int>& idx, int d) {
  const int k = static_cast<int>(idx.size());
  int i = k - 1;
  while (i >= 0 && idx[i] == d - k + i) --i;
  if (i < 0) return false;
  ++idx[i];
  for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  return true;
}

ClassVerdict ExactMinors(const Matrix& m, double eps) {
  const int d = static_cast<int>(m.rows());
  ClassVerdict v;
  v.method = ClassMethod::kExactMinors;
  SmallMatrix sub;
  for (int k = 1; k <= d; ++k) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    sub.resize(k, k);
    do {
      for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c) sub(r, c) = m(idx[r], idx[c]);
      const double det = k == 1 ? sub(0, 0) : sub.partialPivLu().determinant();
      if (!(det > eps)) {
        v.holds = Truth::kFalse;
        v.witness_set = idx;
        v.witness_value = det;
        return v;
      }
    } while (NextCombination(idx, d));
  }
  v.holds = Truth::kTrue;
  return v;
}

}  // namespace

const char* ToString(Truth t) {
  switch (t) {
    case Truth::kFalse:
      return "false";
    case Truth::kTrue:
      return "true";
    case Truth::kUnknown:
      return "unknown";
  }
  return "?";
}

const char* ToString(ClassMethod m) {
  switch (m) {
    case ClassMethod::kExactMinors:
      return "exact-minors";
    case ClassMethod::kSymmetricEigen:
      return "symmetric-eigen";
    case ClassMethod::kSufficientOnly:
      return "sufficient-only";
    case ClassMethod::kDefinition:
      return "definition";
  }
  return "?";
}

double DeterminantTolerance(const Matrix& m) {
  return 1e-9 * std::max(1.0, InfNorm(m));
}

bool IsSymmetric(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = i + 1; j < m.cols(); ++j)
      if (std::abs(m(i, j) - m(j, i)) > tol) return false;
  return true;
}

ClassVerdict IsPMatrix(const Matrix& m, int exact_cap) {
  RequireSquare(m, "IsPMatrix");
  if (!AllFinite(m)) throw InvalidParameterError("IsPMatrix: non-finite entry");
  const double eps = DeterminantTolerance(m);
  const int d = static_cast<int>(m.rows());
  exact_cap = std::min(exact_cap, kExactPMatrixCap);
  if (d <= exact_cap) return ExactMinors(m, eps);

  ClassVerdict v;
  if (IsSymmetric(m)) {
    v.method = ClassMethod::kSymmetricEigen;
    const double lmin = MinSymmetricEigenvalue(0.5 * (m + m.transpose()));
    v.holds = lmin > eps ? Truth::kTrue : Truth::kFalse;
    v.witness_value = lmin;
    return v;
  }

  v.method = ClassMethod::kSufficientOnly;
  // Order-1 and order-2 minors are cheap and refute exactly.
  for (int i = 0; i < d; ++i) {
    if (!(m(i, i) > eps)) {
      v.holds = Truth::kFalse;
      v.witness_set = {i};
      v.witness_value = m(i, i);
      return v;
    }
  }
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      const double det = m(i, i) * m(j, j) - m(i, j) * m(j, i);
      if (!(det > eps)) {
        v.holds = Truth::kFalse;
        v.witness_set = {i, j};
        v.witness_value = det;
        return v;
      }
    }
  }
  if (IsStrictlyRowDiagonallyDominant(m).is_true() ||
      IsPositiveDefinite(m).is_true()) {
    v.holds = Truth::kTrue;
    return v;
  }
  v.holds = Truth::kUnknown;
  return v;
}

ClassVerdict IsPositiveDefinite(const Matrix& m) {
  RequireSquare(m, "IsPositiveDefinite");
  ClassVerdict v;
  v.method = ClassMethod::kSymmetricEigen;
  const double lmin = MinSymmetricEigenvalue(0.5 * (m + m.transpose()));
  v.holds = lmin > DeterminantTolerance(m) ? Truth::kTrue : Truth::kFalse;
  v.witness_value = lmin;
  return v;
}

ClassVerdict IsStrictlyRowDiagonallyDominant(const Matrix& m) {
  RequireSquare(m, "IsStrictlyRowDiagonallyDominant");
  ClassVerdict v;
  v.method = ClassMethod::kDefinition;
  for (int i = 0; i < m.rows(); ++i) {
    const double off = m.row(i).cwiseAbs().sum() - std::abs(m(i, i));
    const double margin = std::abs(m(i, i)) - off;
    if (!(margin > 0.0)) {
      v.holds = Truth::kFalse;
      v.witness_set = {i};
      v.witness_value = margin;
      return v;
    }
  }
  v.holds = Truth::kTrue;
  return v;
}

ClassVerdict IsBMatrix(const Matrix& m) {
  RequireSquare(m, "IsBMatrix");
  ClassVerdict v;
  v.method = ClassMethod::kDefinition;
  const int d = static_cast<int>(m.rows());
  for (int i = 0; i < d; ++i) {
    const double mean = m.row(i).sum() / d;
    if (!(mean > 0.0)) {
      v.holds = Truth::kFalse;
      v.witness_set = {i};
      v.witness_value = mean;
      return v;
    }
    for (int k = 0; k < d; ++k) {
      if (k != i && !(mean > m(i, k))) {
        v.holds = Truth::kFalse;
        v.witness_set = {i, k};
        v.witness_value = mean - m(i, k);
        return v;
      }
    }
  }
  v.holds = Truth::kTrue;
  return v;
}

SpectralSummary Spectral(const Matrix& m) {
  RequireSquare(m, "Spectral");
  if (!AllFinite(m)) throw NumericError("Spectral: non-finite entry");
  SpectralSummary s;
  s.is_symmetric = IsSymmetric(m);
  if (m.rows() == 0) return s;
  if (s.is_symmetric) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (m + m.transpose()),
                                             Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success)
      throw NumericError("symmetric eigensolver did not converge");
    for (int i = 0; i < es.eigenvalues().size(); ++i)
      s.eigenvalues.emplace_back(es.eigenvalues()(i), 0.0);
  } else {
    Eigen::EigenSolver<Matrix> es(m, false);
    if (es.info() != Eigen::Success)
      throw NumericError("eigensolver did not converge");
    for (int i = 0; i < es.eigenvalues().size(); ++i)
      s.eigenvalues.push_back(es.eigenvalues()(i));
  }
  std::sort(s.eigenvalues.begin(), s.eigenvalues.end(),
            [](const std::complex<double>& a, const std::complex<double>& b) {
              if (a.real() != b.real()) return a.real() < b.real();
              return a.imag() < b.imag();
            });
  s.lambda_min_re = s.eigenvalues.front().real();
  s.lambda_max_re = s.eigenvalues.back().real();
  for (const auto& e : s.eigenvalues) s.rho = std::max(s.rho, std::abs(e));
  return s;
}

double ConditionNumber(const Matrix& m) {
  RequireSquare(m, "ConditionNumber");
  if (m.rows() == 0) return 1.0;
  Eigen::JacobiSVD<Matrix> svd(m);
  const auto& sv = svd.singularValues();
  const double lo = sv(sv.size() - 1);
  if (!(lo > 0.0)) return std::numeric_limits<double>::infinity();
  return sv(0) / lo;
}

double SpectralNorm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues()(0);
}

Matrix SchurComplement(const Matrix& a, const Matrix& b, const Matrix& c,
                       const Matrix& d, Eliminate which) {
  RequireSquare(a, "SchurComplement");
  RequireSquare(d, "SchurComplement");
  if (b.rows() != a.rows() || b.cols() != d.rows() || c.rows() != d.rows() ||
      c.cols() != a.rows()) {
    throw ShapeError("SchurComplement: blocks are not conformable");
  }
  const Matrix& pivot = which == Eliminate::kFirst ? a : d;
  if (pivot.rows() == 0) return which == Eliminate::kFirst ? d : a;
  const double cond = ConditionNumber(pivot);
  if (!(cond < kMaxCondition)) {
    throw SingularityError("eliminated block is singular or ill-conditioned",
                           cond);
  }
  const Eigen::PartialPivLU<Matrix> lu(pivot);
  if (which == Eliminate::kFirst) return d - c * lu.solve(b);
  return a - b * lu.solve(c);
}

}  // namespace mlgames
