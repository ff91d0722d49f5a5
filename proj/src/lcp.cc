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

#include "mlgames/lcp.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "mlgames/errors.h"

namespace mlgames {
namespace {

// Below this reciprocal condition estimate a support system is singular.
constexpr double kSingularRcond = 1e-12;
constexpr double kLexTol = 1e-12;

bool LexLess(const Vector& a, const Vector& b) {
  for (int i = 0; i < a.size(); ++i) {
    if (a(i) != b(i)) return a(i) < b(i);
  }
  return false;
}

// Solution of the LCP restricted to support s, or nothing when the support
// is infeasible. Sets *degenerate when m[s,s] is singular but consistent.
std::optional<Vector> SolveSupport(const LcpProblem& p,
                                   const std::vector<int>& s, double tol,
                                   bool* degenerate) {
  const int d = p.dim();
  Vector z = Vector::Zero(d);
  if (!s.empty()) {
    const Matrix mss = Principal(p.m, s);
    const Vector rhs = -Gather(p.b, s);
    Vector zs;
    Eigen::PartialPivLU<Matrix> lu(mss);
    if (lu.rcond() > kSingularRcond) {
      zs = lu.solve(rhs);
    } else {
      Eigen::CompleteOrthogonalDecomposition<Matrix> cod(mss);
      zs = cod.solve(rhs);
      const double scale = std::max(1.0, rhs.lpNorm<Eigen::Infinity>());
      if ((mss * zs - rhs).lpNorm<Eigen::Infinity>() > tol * scale)
        return std::nullopt;
      *degenerate = true;
    }
    for (size_t i = 0; i < s.size(); ++i) {
      if (zs(i) < -tol) return std::nullopt;
      z(s[i]) = std::max(zs(i), 0.0);
    }
  }
  const Vector w = p.m * z + p.b;
  std::vector<bool> in_support(d, false);
  for (int i : s) in_support[i] = true;
  for (int i = 0; i < d; ++i) {
    if (!in_support[i] && w(i) < -tol) return std::nullopt;
  }
  return z;
}

}  // namespace

LcpProblem::LcpProblem(Matrix m_in, Vector b_in)
    : m(std::move(m_in)), b(std::move(b_in)) {
  if (m.rows() != m.cols()) throw ShapeError("LCP matrix must be square");
  if (m.rows() < 1) throw ShapeError("LCP dimension must be >= 1");
  if (b.size() != m.rows())
    throw ShapeError("LCP vector length does not match matrix");
  if (!AllFinite(m) || !AllFinite(b))
    throw InvalidParameterError("LCP data must be finite");
}

LcpSolution VerifySolution(const LcpProblem& p, const Vector& z) {
  if (z.size() != p.dim()) throw ShapeError("solution length mismatch");
  LcpSolution sol;
  sol.z = z;
  sol.w = p.m * z + p.b;
  double r = 0.0;
  for (int i = 0; i < p.dim(); ++i) {
    r = std::max({r, -sol.z(i), -sol.w(i), std::abs(sol.z(i) * sol.w(i))});
  }
  sol.residual = r;
  return sol;
}

LcpProblem FromGame(const NetworkGame& game) {
  return LcpProblem(game.g().PlusIdentity(), -game.q());
}

EnumerationResult EnumerateSolutions(const LcpProblem& p, double tol,
                                     int cap) {
  const int d = p.dim();
  if (!(tol > 0.0)) throw InvalidParameterError("tol must be positive");
  if (d > cap || d > kEnumerationCap) {
    throw CapacityError("enumeration over " + std::to_string(d) +
                        " variables exceeds the cap of " +
                        std::to_string(std::min(cap, kEnumerationCap)));
  }
  EnumerationResult result;
  std::vector<int> support;
  support.reserve(d);
  for (uint64_t mask = 0; mask < (uint64_t{1} << d); ++mask) {
    support.clear();
    for (int i = 0; i < d; ++i)
      if (mask >> i & 1) support.push_back(i);
    bool degenerate = false;
    auto z = SolveSupport(p, support, tol, &degenerate);
    if (!z) continue;
    bool duplicate = false;
    for (const auto& s : result.solutions) {
      if ((s.z - *z).lpNorm<Eigen::Infinity>() <= tol) {
        duplicate = true;
        break;
      }
    }
    if (degenerate) result.degenerate_support = true;
    if (!duplicate) result.solutions.push_back(VerifySolution(p, *z));
  }
  std::sort(result.solutions.begin(), result.solutions.end(),
            [](const LcpSolution& a, const LcpSolution& b) {
              return LexLess(a.z, b.z);
            });
  return result;
}

LemkeResult Lemke(const LcpProblem& p, int max_pivots) {
  const int d = p.dim();
  LemkeResult result;
  if (p.b.minCoeff() >= 0.0) {
    result.solution = VerifySolution(p, Vector::Zero(d));
    return result;
  }

  // Tableau B^-1 [I, -M, -e, b]. Variables: w_i = i, z_i = d + i, z0 = 2d.
  const int z0 = 2 * d;
  const int rhs = 2 * d + 1;
  Matrix t(d, 2 * d + 2);
  t.leftCols(d).setIdentity();
  t.middleCols(d, d) = -p.m;
  t.col(z0).setConstant(-1.0);
  t.col(rhs) = p.b;
  std::vector<int> basis(d);
  for (int i = 0; i < d; ++i) basis[i] = i;

  auto pivot = [&](int row, int col) {
    const double piv = t(row, col);
    t.row(row) /= piv;
    for (int i = 0; i < d; ++i) {
      if (i != row && t(i, col) != 0.0) t.row(i) -= t(i, col) * t.row(row);
    }
    const int leaving = basis[row];
    basis[row] = col;
    return leaving;
  };

  // z0 enters at the most negative b_i; ties go to the largest index, which
  // keeps every tableau row lexicographically positive.
  int row = 0;
  for (int i = 1; i < d; ++i)
    if (p.b(i) <= p.b(row)) row = i;
  int leaving = pivot(row, z0);
  result.pivots = 1;

  const double scale = std::max(1.0, InfNorm(p.m));
  for (;;) {
    const int entering = leaving < d ? leaving + d : leaving - d;
    const Vector col = t.col(entering);
    std::vector<int> cand;
    for (int i = 0; i < d; ++i)
      if (col(i) > kLexTol * scale) cand.push_back(i);
    if (cand.empty()) {
      result.status = LemkeResult::Status::kRayTermination;
      return result;
    }
    // Lexicographic minimum ratio over (rhs, B^-1) rows, z0 first on ties.
    auto narrow = [&](int c) {
      double best = INFINITY;
      for (int i : cand) best = std::min(best, t(i, c) / col(i));
      const double slack = kLexTol * (1.0 + std::abs(best));
      std::vector<int> keep;
      for (int i : cand)
        if (t(i, c) / col(i) <= best + slack) keep.push_back(i);
      cand = std::move(keep);
    };
    narrow(rhs);
    int chosen = -1;
    for (int i : cand)
      if (basis[i] == z0) chosen = i;
    for (int c = 0; chosen < 0 && c < d; ++c) {
      if (cand.size() == 1) break;
      narrow(c);
    }
    if (chosen < 0) chosen = cand.front();
    if (col(chosen) < 1e-9 * scale)
      throw DegeneratePivotError("numerically singular pivot in Lemke");
    if (result.pivots >= max_pivots) {
      throw BudgetError("Lemke exceeded " + std::to_string(max_pivots) +
                        " pivots");
    }
    leaving = pivot(chosen, entering);
    ++result.pivots;
    if (!AllFinite(t))
      throw DegeneratePivotError("non-finite tableau entry in Lemke");
    if (leaving == z0) break;
  }

  Vector z = Vector::Zero(d);
  std::vector<int> support;
  for (int i = 0; i < d; ++i) {
    if (basis[i] >= d && basis[i] < z0) {
      z(basis[i] - d) = std::max(t(i, rhs), 0.0);
      support.push_back(basis[i] - d);
    }
  }
  std::sort(support.begin(), support.end());
  LcpSolution best = VerifySolution(p, z);
  if (!support.empty()) {
    Eigen::PartialPivLU<Matrix> lu(Principal(p.m, support));
    const Vector zs = lu.solve(-Gather(p.b, support));
    Vector polished = Vector::Zero(d);
    for (size_t i = 0; i < support.size(); ++i)
      polished(support[i]) = std::max(zs(i), 0.0);
    LcpSolution candidate = VerifySolution(p, polished);
    if (AllFinite(candidate.z) && candidate.residual < best.residual)
      best = std::move(candidate);
  }
  if (!(best.residual <= kLcpTol)) {
    throw NumericError("Lemke solution residual " +
                       FormatDouble(best.residual) + " exceeds tolerance");
  }
  result.solution = std::move(best);
  return result;
}

IndexPartition Partition(const LcpSolution& sol, double tol_active) {
  IndexPartition part;
  for (int i = 0; i < sol.z.size(); ++i) {
    const bool z_on = sol.z(i) > tol_active;
    const bool w_on = sol.w(i) > tol_active;
    if (z_on && !w_on) {
      part.j.push_back(i);
    } else if (!z_on && !w_on) {
      part.k.push_back(i);
    } else if (!z_on) {
      part.l.push_back(i);
    } else {
      // Both active: not complementary. Put it with the larger side.
      (sol.z(i) >= sol.w(i) ? part.j : part.l).push_back(i);
    }
  }
  return part;
}

}  // namespace mlgames
