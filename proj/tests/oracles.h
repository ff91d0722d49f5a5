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

// Reference computations that share no code with the library: cofactor-free
// Leibniz determinants, Gauss-Jordan elimination on std::vector, and a
// support-enumeration LCP solver built on top of them.

#ifndef MLGAMES_TESTS_ORACLES_H_
#define MLGAMES_TESTS_ORACLES_H_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "mlgames/linalg.h"

namespace oracle {

using Dense = std::vector<std::vector<double>>;

inline Dense ToDense(const mlgames::Matrix& m) {
  Dense d(m.rows(), std::vector<double>(m.cols()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) d[i][j] = m(i, j);
  return d;
}

inline mlgames::Matrix FromDense(const Dense& d) {
  mlgames::Matrix m(d.size(), d.empty() ? 0 : d[0].size());
  for (size_t i = 0; i < d.size(); ++i)
    for (size_t j = 0; j < d[i].size(); ++j) m(i, j) = d[i][j];
  return m;
}

// Sum over permutations; fine up to 8x8.
inline double LeibnizDet(const Dense& a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return 1.0;
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  double total = 0.0;
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) inversions += p[i] > p[j];
    double term = inversions % 2 ? -1.0 : 1.0;
    for (int i = 0; i < n; ++i) term *= a[i][p[i]];
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

inline Dense Minor(const Dense& a, const std::vector<int>& idx) {
  Dense s(idx.size(), std::vector<double>(idx.size()));
  for (size_t i = 0; i < idx.size(); ++i)
    for (size_t j = 0; j < idx.size(); ++j) s[i][j] = a[idx[i]][idx[j]];
  return s;
}

// Smallest principal minor determinant over all nonempty subsets.
inline double MinPrincipalMinor(const Dense& a) {
  const int n = static_cast<int>(a.size());
  double best = INFINITY;
  for (uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> idx;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) idx.push_back(i);
    best = std::min(best, LeibnizDet(Minor(a, idx)));
  }
  return best;
}

// Solves a x = b with full pivoting; nothing if the pivot drops below tol.
inline std::optional<std::vector<double>> GaussJordan(Dense a,
                                                      std::vector<double> b,
                                                      double tol = 1e-12) {
  const int n = static_cast<int>(a.size());
  std::vector<int> col(n);
  for (int i = 0; i < n; ++i) col[i] = i;
  for (int k = 0; k < n; ++k) {
    int pr = k, pc = k;
    for (int i = k; i < n; ++i)
      for (int j = k; j < n; ++j)
        if (std::abs(a[i][j]) > std::abs(a[pr][pc])) pr = i, pc = j;
    if (std::abs(a[pr][pc]) <= tol) return std::nullopt;
    std::swap(a[k], a[pr]);
    std::swap(b[k], b[pr]);
    for (auto& row : a) std::swap(row[k], row[pc]);
    std::swap(col[k], col[pc]);
    for (int i = 0; i < n; ++i) {
      if (i == k) continue;
      const double f = a[i][k] / a[k][k];
      for (int j = k; j < n; ++j) a[i][j] -= f * a[k][j];
      b[i] -= f * b[k];
    }
  }
  std::vector<double> x(n);
  for (int k = 0; k < n; ++k) x[col[k]] = b[k] / a[k][k];
  return x;
}

// Solutions of w = m z + b, w, z >= 0, w'z = 0 over nonsingular supports.
inline std::vector<std::vector<double>> BruteLcp(const Dense& m,
                                                 const std::vector<double>& b,
                                                 double tol = 1e-9) {
  const int n = static_cast<int>(b.size());
  std::vector<std::vector<double>> out;
  for (uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) s.push_back(i);
    std::vector<double> z(n, 0.0);
    if (!s.empty()) {
      std::vector<double> rhs;
      for (int i : s) rhs.push_back(-b[i]);
      auto zs = GaussJordan(Minor(m, s), rhs);
      if (!zs) continue;
      bool ok = true;
      for (size_t i = 0; i < s.size(); ++i) {
        if ((*zs)[i] < -tol) ok = false;
        z[s[i]] = std::max((*zs)[i], 0.0);
      }
      if (!ok) continue;
    }
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      if (mask >> i & 1) continue;
      double w = b[i];
      for (int j = 0; j < n; ++j) w += m[i][j] * z[j];
      if (w < -tol) ok = false;
    }
    if (!ok) continue;
    bool dup = false;
    for (const auto& e : out) {
      double diff = 0.0;
      for (int i = 0; i < n; ++i) diff = std::max(diff, std::abs(e[i] - z[i]));
      dup = dup || diff <= 1e-7;
    }
    if (!dup) out.push_back(z);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Determinant by Gaussian elimination with partial pivoting.
inline double EliminationDet(Dense a) {
  const int n = static_cast<int>(a.size());
  double det = 1.0;
  for (int k = 0; k < n; ++k) {
    int p = k;
    for (int i = k + 1; i < n; ++i)
      if (std::abs(a[i][k]) > std::abs(a[p][k])) p = i;
    if (a[p][k] == 0.0) return 0.0;
    if (p != k) {
      std::swap(a[p], a[k]);
      det = -det;
    }
    det *= a[k][k];
    for (int i = k + 1; i < n; ++i) {
      const double f = a[i][k] / a[k][k];
      for (int j = k; j < n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  return det;
}

// First principal minor (by size, then lexicographic) with determinant at
// or below tol, or nothing.
inline std::optional<std::vector<int>> FirstBadMinor(const Dense& a,
                                                     double tol) {
  const int n = static_cast<int>(a.size());
  for (int k = 1; k <= n; ++k) {
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + k, true);
    do {
      std::vector<int> idx;
      for (int i = 0; i < n; ++i)
        if (pick[i]) idx.push_back(i);
      if (EliminationDet(Minor(a, idx)) <= tol) return idx;
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return std::nullopt;
}

// For a matrix with a non-positive principal minor, a constant vector b
// for which LCP(m, b) has two distinct solutions: a real eigenvector x of
// the bad minor with eigenvalue <= 0 reverses signs, and z1 = x+, z2 = x-
// then solve the same problem.
inline std::optional<mlgames::Vector> TwoSolutionVector(const mlgames::Matrix& m,
                                                        double tol) {
  const auto bad = FirstBadMinor(ToDense(m), tol);
  if (!bad) return std::nullopt;
  const std::vector<int>& s = *bad;
  mlgames::Matrix mss(s.size(), s.size());
  for (size_t i = 0; i < s.size(); ++i)
    for (size_t j = 0; j < s.size(); ++j) mss(i, j) = m(s[i], s[j]);
  Eigen::EigenSolver<mlgames::Matrix> es(mss);
  int best = -1;
  for (int i = 0; i < es.eigenvalues().size(); ++i) {
    if (std::abs(es.eigenvalues()(i).imag()) > 1e-12) continue;
    if (best < 0 || es.eigenvalues()(i).real() < es.eigenvalues()(best).real())
      best = i;
  }
  if (best < 0) return std::nullopt;
  mlgames::Vector xs = es.eigenvectors().col(best).real();
  xs /= xs.lpNorm<Eigen::Infinity>();
  const int n = static_cast<int>(m.rows());
  mlgames::Vector x = mlgames::Vector::Zero(n);
  for (size_t i = 0; i < s.size(); ++i) x(s[i]) = xs(i);
  const mlgames::Vector mx = m * x;
  const mlgames::Vector z1 = x.cwiseMax(0.0);
  mlgames::Vector w1(n);
  for (int i = 0; i < n; ++i) {
    if (x(i) > 0.0) {
      w1(i) = 0.0;
    } else if (x(i) < 0.0) {
      w1(i) = std::max(mx(i), 0.0);
    } else {
      w1(i) = std::max(mx(i), 0.0) + 1.0;
    }
  }
  return mlgames::Vector(w1 - m * z1);
}

// Zero-diagonal matrix with off-diagonal entries uniform on (-h, h).
inline mlgames::Matrix RandomZeroDiagonal(int n, double h, std::mt19937_64& g) {
  std::uniform_real_distribution<double> u(-h, h);
  mlgames::Matrix m = mlgames::Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) m(i, j) = u(g);
  return m;
}

inline mlgames::Matrix RandomSymmetricZeroDiagonal(int n, double h,
                                                   std::mt19937_64& g) {
  mlgames::Matrix m = RandomZeroDiagonal(n, h, g);
  return 0.5 * (m + m.transpose());
}

inline mlgames::Vector RandomVector(int n, double h, std::mt19937_64& g) {
  std::uniform_real_distribution<double> u(-h, h);
  mlgames::Vector v(n);
  for (int i = 0; i < n; ++i) v(i) = u(g);
  return v;
}

// Smallest eigenvalue of a symmetric matrix by bisection on Sylvester
// inertia counts (LDL' without pivoting on shifted matrices).
inline double SymmetricMinEigen(const Dense& a) {
  const int n = static_cast<int>(a.size());
  double r = 0.0;
  for (int i = 0; i < n; ++i) {
    double s = 0.0;
    for (int j = 0; j < n; ++j) s += std::abs(a[i][j]);
    r = std::max(r, s);
  }
  auto negatives_below = [&](double shift) {
    Dense m = a;
    for (int i = 0; i < n; ++i) m[i][i] -= shift;
    int neg = 0;
    for (int k = 0; k < n; ++k) {
      double p = m[k][k];
      if (p == 0.0) p = 1e-300;
      if (p < 0.0) ++neg;
      for (int i = k + 1; i < n; ++i) {
        const double f = m[i][k] / p;
        for (int j = k + 1; j < n; ++j) m[i][j] -= f * m[k][j];
      }
    }
    return neg;
  };
  double lo = -r - 1.0, hi = r + 1.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (negatives_below(mid) > 0 ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace oracle

#endif  // MLGAMES_TESTS_ORACLES_H_
