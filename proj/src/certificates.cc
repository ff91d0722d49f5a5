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

#include "mlgames/certificates.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "mlgames/errors.h"
#include "mlgames/matrix_classes.h"

namespace mlgames {
namespace {

constexpr double kZeroBlockTol = 1e-12;
constexpr double kStructureTol = 1e-10;
constexpr double kVerifyTol = 1e-7;

double Flag(bool b) { return b ? 1.0 : 0.0; }

Certificate Inapplicable(const char* source, std::string note) {
  Certificate c;
  c.source = source;
  c.applicable = false;
  c.note = std::move(note);
  return c;
}

void RequireSameSize(const AdjacencyMatrix& a, const AdjacencyMatrix& b) {
  if (a.size() != b.size()) throw ShapeError("layers differ in size");
}

bool IsZeroBlock(const Matrix& m) {
  return m.size() == 0 || m.cwiseAbs().maxCoeff() <= kZeroBlockTol;
}

bool AllOffDiagonal(const Matrix& g, bool nonnegative) {
  for (int i = 0; i < g.rows(); ++i)
    for (int j = 0; j < g.cols(); ++j)
      if (i != j && (nonnegative ? g(i, j) < 0.0 : g(i, j) > 0.0))
        return false;
  return true;
}

double Determinant(const Matrix& m) {
  if (m.rows() == 0) return 1.0;
  return m.partialPivLu().determinant();
}

const char* const kRealPartNote =
    "directed input evaluated with the real-part eigenvalue convention";

// Two-layer multilayer accessors.
const Matrix& G12(const MultilayerGame& g) { return g.Inter(0, 1); }
const Matrix& G21(const MultilayerGame& g) { return g.Inter(1, 0); }

bool IsDag(const Matrix& b) {
  const int n = static_cast<int>(b.rows());
  for (int i = 0; i < n; ++i)
    if (std::abs(b(i, i)) > kZeroBlockTol) return false;
  std::vector<int> indegree(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (std::abs(b(i, j)) > kZeroBlockTol) ++indegree[j];
  std::vector<int> ready;
  for (int i = 0; i < n; ++i)
    if (indegree[i] == 0) ready.push_back(i);
  int seen = 0;
  while (!ready.empty()) {
    const int i = ready.back();
    ready.pop_back();
    ++seen;
    for (int j = 0; j < n; ++j) {
      if (std::abs(b(i, j)) > kZeroBlockTol && --indegree[j] == 0)
        ready.push_back(j);
    }
  }
  return seen == n;
}

bool IsCirculant(const Matrix& b) {
  const int n = static_cast<int>(b.rows());
  for (int i = 1; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (std::abs(b(i, j) - b(0, ((j - i) % n + n) % n)) > kZeroBlockTol)
        return false;
  return true;
}

// Smallest |sum_k c_k w^(jk)| over j, w = exp(2 pi i / n).
double MinCirculantFactor(const Matrix& b) {
  const int n = static_cast<int>(b.rows());
  double best = INFINITY;
  for (int j = 0; j < n; ++j) {
    std::complex<double> f = 0.0;
    for (int k = 0; k < n; ++k) {
      f += b(0, k) * std::polar(1.0, 2.0 * std::numbers::pi * j * k / n);
    }
    best = std::min(best, std::abs(f));
  }
  return best;
}

}  // namespace

const char* ToString(Verdict v) {
  switch (v) {
    case Verdict::kGuaranteedUnique:
      return "GuaranteedUnique";
    case Verdict::kNotGuaranteedUnique:
      return "NotGuaranteedUnique";
    case Verdict::kExists:
      return "Exists";
    case Verdict::kNotExists:
      return "NotExists";
    case Verdict::kStronglyStable:
      return "StronglyStable";
    case Verdict::kNotStronglyStable:
      return "NotStronglyStable";
    case Verdict::kInconclusive:
      return "Inconclusive";
  }
  return "?";
}

std::optional<double> Certificate::Get(const std::string& name) const {
  for (const auto& [key, value] : evidence)
    if (key == name) return value;
  return std::nullopt;
}

Certificate CertifyPairFailure(const AdjacencyMatrix& g1,
                               const AdjacencyMatrix& g2, double kappa) {
  constexpr const char* kSource = "prop1_pair_failure";
  RequireSameSize(g1, g2);
  if (!(kappa > 0.0 && kappa < 1.0))
    return Inapplicable(kSource, "kappa must lie strictly inside (0, 1)");
  Certificate c;
  c.source = kSource;
  const double a = kappa / (1.0 - kappa);
  const double b = (1.0 - kappa) / kappa;
  int scanned = 0;
  const int n = g1.size();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (g1(i, j) == 0.0 || g2(i, j) == 0.0) continue;
      ++scanned;
      const double det_alpha = 1.0 - g1(i, j) * g1(j, i);
      const double det_beta = 1.0 - g2(i, j) * g2(j, i);
      const double lhs = g1(i, j) / g2(i, j) * (1.0 - det_beta) +
                         g2(i, j) / g1(i, j) * (1.0 - det_alpha);
      const double rhs = 2.0 + a * det_alpha + b * det_beta;
      if (lhs >= rhs) {
        c.verdict = Verdict::kNotGuaranteedUnique;
        c.Add("i", i);
        c.Add("j", j);
        c.Add("det_alpha", det_alpha);
        c.Add("det_beta", det_beta);
        c.Add("lhs", lhs);
        c.Add("rhs", rhs);
        c.Add("pairs_scanned", scanned);
        return c;
      }
    }
  }
  c.Add("pairs_scanned", scanned);
  return c;
}

Certificate CertifyClosedClasses(const MultiplexGame& game) {
  game.Validate();
  Certificate c;
  c.source = "prop2_closed_classes";
  bool sym_p = true, rdd = true, b_matrix = true;
  for (const auto& layer : game.layers) {
    const Matrix m = layer.PlusIdentity();
    sym_p = sym_p && IsSymmetric(layer.matrix()) && IsPMatrix(m).is_true();
    rdd = rdd && IsStrictlyRowDiagonallyDominant(m).is_true();
    b_matrix = b_matrix && IsBMatrix(m).is_true();
  }
  c.Add("case_symmetric_p", Flag(sym_p));
  c.Add("case_row_dominant", Flag(rdd));
  c.Add("case_b_matrix", Flag(b_matrix));
  if (sym_p || rdd || b_matrix) {
    c.verdict = Verdict::kGuaranteedUnique;
    c.Add("case", sym_p ? 1 : rdd ? 2 : 3);
  }
  return c;
}

Certificate CertifyClosedClasses(const AdjacencyMatrix& g1,
                                 const AdjacencyMatrix& g2, double kappa) {
  RequireSameSize(g1, g2);
  return CertifyClosedClasses(
      MultiplexGame::TwoLayer(g1, g2, kappa, Vector::Zero(g1.size())));
}

Certificate CertifyPerturbation(const AdjacencyMatrix& g1,
                                const AdjacencyMatrix& g2, double kappa) {
  constexpr const char* kSource = "prop3_perturbation";
  RequireSameSize(g1, g2);
  if (!(kappa > 0.0 && kappa < 1.0))
    return Inapplicable(kSource, "kappa must lie strictly inside (0, 1)");
  const SpectralSummary s1 = Spectral(g1.matrix());
  const SpectralSummary s2 = Spectral(g2.matrix());
  const bool symmetric = s1.is_symmetric && s2.is_symmetric;
  if (s1.is_symmetric && !IsPositiveDefinite(g1.PlusIdentity()).is_true()) {
    Certificate c = Inapplicable(kSource, "I + G1 is not positive definite");
    c.Add("lambda_min_g1", s1.lambda_min_re);
    return c;
  }
  Certificate c;
  c.source = kSource;
  c.heuristic = !symmetric;
  if (!symmetric) c.note = kRealPartNote;
  const double lhs = s2.lambda_max_re;
  const double rhs = (2.0 * kappa - 1.0) / (1.0 - kappa) +
                     kappa / (1.0 - kappa) * s1.lambda_min_re;
  // The displayed bound treats 1 + lambda_max(G2) as the norm of the
  // layer-2 term; the guard covers the case where the negative end of the
  // spectrum is larger.
  const double guard_lhs = (1.0 - kappa) * std::abs(1.0 + s2.lambda_min_re);
  const double guard_rhs = kappa * (1.0 + s1.lambda_min_re);
  const bool displayed = lhs < rhs;
  const bool guard = guard_lhs < guard_rhs;
  c.Add("lambda_min_g1", s1.lambda_min_re);
  c.Add("lambda_max_g2", s2.lambda_max_re);
  c.Add("lhs", lhs);
  c.Add("rhs", rhs);
  c.Add("displayed_inequality_holds", Flag(displayed));
  c.Add("norm_guard_lhs", guard_lhs);
  c.Add("norm_guard_rhs", guard_rhs);
  c.Add("norm_guard_holds", Flag(guard));
  if (displayed && (guard || !symmetric)) c.verdict = Verdict::kGuaranteedUnique;
  return c;
}

Certificate CertifyTwoSidedFailure(const AdjacencyMatrix& g1,
                                   const AdjacencyMatrix& g2, double kappa) {
  constexpr const char* kSource = "prop4_twosided_failure";
  RequireSameSize(g1, g2);
  if (!(kappa >= 0.0 && kappa < 1.0))
    return Inapplicable(kSource, "kappa must lie in [0, 1)");
  const SpectralSummary s1 = Spectral(g1.matrix());
  const SpectralSummary s2 = Spectral(g2.matrix());
  Certificate c;
  c.source = kSource;
  c.heuristic = !(s1.is_symmetric && s2.is_symmetric);
  if (c.heuristic) c.note = kRealPartNote;
  const double lhs = std::abs(s2.lambda_min_re);
  const double rhs = (1.0 + kappa * s1.lambda_max_re) / (1.0 - kappa);
  c.Add("lambda_max_g1", s1.lambda_max_re);
  c.Add("lambda_min_g2", s2.lambda_min_re);
  c.Add("lhs", lhs);
  c.Add("rhs", rhs);
  if (lhs >= rhs) c.verdict = Verdict::kNotGuaranteedUnique;
  return c;
}

Certificate CertifyMultilayerFailure(const MultilayerGame& game) {
  constexpr const char* kSource = "prop5_multilayer_failure";
  game.Validate();
  if (game.num_layers() != 2)
    return Inapplicable(kSource, "requires exactly two layers");
  Certificate c;
  c.source = kSource;
  const Matrix a1 = game.layers[0].PlusIdentity();
  const Matrix a2 = game.layers[1].PlusIdentity();
  const ClassVerdict p1 = IsPMatrix(a1);
  const ClassVerdict p2 = IsPMatrix(a2);
  c.Add("layer1_p", Flag(p1.is_true()));
  c.Add("layer2_p", Flag(p2.is_true()));
  if (p1.is_false() || p2.is_false()) {
    c.verdict = Verdict::kNotGuaranteedUnique;
    c.Add("case", 1);
    c.Add("failing_layer", p1.is_false() ? 1 : 2);
    c.Add("failing_minor_det", (p1.is_false() ? p1 : p2).witness_value.value_or(0.0));
    return c;
  }
  if (!p1.is_true() || !p2.is_true()) {
    c.note = "layer P-test undecided";
    return c;
  }
  const NetworkGame supra = BuildSupra(game);
  const double eps = DeterminantTolerance(supra.g().PlusIdentity());
  try {
    const double det1 =
        Determinant(SchurComplement(a1, G12(game), G21(game), a2,
                                    Eliminate::kSecond));
    const double det2 =
        Determinant(SchurComplement(a1, G12(game), G21(game), a2,
                                    Eliminate::kFirst));
    c.Add("det_schur_1", det1);
    c.Add("det_schur_2", det2);
    c.Add("eps_det", eps);
    if (det1 <= eps || det2 <= eps) {
      c.verdict = Verdict::kNotGuaranteedUnique;
      c.Add("case", 2);
    }
  } catch (const SingularityError& e) {
    c.note = std::string("Schur complement unavailable: ") + e.what();
    c.Add("condition", e.condition());
  }
  return c;
}

Certificate CertifyOneWay(const MultilayerGame& game) {
  constexpr const char* kSource = "prop6_oneway";
  game.Validate();
  if (game.num_layers() != 2)
    return Inapplicable(kSource, "requires exactly two layers");
  const bool zero12 = IsZeroBlock(G12(game));
  const bool zero21 = IsZeroBlock(G21(game));
  if (!zero12 && !zero21)
    return Inapplicable(kSource, "both inter-layer blocks are nonzero");
  Certificate c;
  c.source = kSource;
  c.Add("g12_zero", Flag(zero12));
  c.Add("g21_zero", Flag(zero21));
  bool all_true = true;
  for (int l = 0; l < 2; ++l) {
    const ClassVerdict v = IsPMatrix(game.layers[l].PlusIdentity());
    c.Add("layer" + std::to_string(l + 1) + "_p",
          v.is_true() ? 1.0 : v.is_false() ? 0.0 : -1.0);
    if (v.is_false()) {
      c.verdict = Verdict::kNotGuaranteedUnique;
      c.Add("failing_layer", l + 1);
      return c;
    }
    all_true = all_true && v.is_true();
  }
  if (all_true) c.verdict = Verdict::kGuaranteedUnique;
  return c;
}

Certificate CertifyComplementsBlockDominance(const MultilayerGame& game) {
  constexpr const char* kSource = "prop7_complements_bdd";
  game.Validate();
  if (game.num_layers() != 2)
    return Inapplicable(kSource, "requires exactly two layers");
  for (int l = 0; l < 2; ++l) {
    if (!AllOffDiagonal(game.layers[l].matrix(), false))
      return Inapplicable(kSource, "layers must be strategic complements");
    if (!IsPMatrix(game.layers[l].PlusIdentity()).is_true())
      return Inapplicable(kSource, "layers must have a unique equilibrium");
  }
  Certificate c;
  c.source = kSource;
  const Matrix* inter[2] = {&G12(game), &G21(game)};
  bool dominant = true;
  for (int l = 0; l < 2; ++l) {
    const Matrix a = game.layers[l].PlusIdentity();
    Eigen::JacobiSVD<Matrix> svd(a);
    const double smin = svd.singularValues()(a.rows() - 1);
    if (!(smin > 0.0) || svd.singularValues()(0) / smin >= kMaxCondition) {
      throw InternalConsistencyError(
          "I + G is numerically singular although it passed the P-test");
    }
    const double inv_norm = 1.0 / smin;
    const double inter_norm = SpectralNorm(*inter[l]);
    const std::string tag = std::to_string(l + 1);
    c.Add("inv_norm_" + tag, inv_norm);
    c.Add("inter_norm_" + tag, inter_norm);
    c.Add("product_" + tag, inv_norm * inter_norm);
    dominant = dominant && inv_norm * inter_norm < 1.0;
  }
  if (dominant) c.verdict = Verdict::kGuaranteedUnique;
  return c;
}

Certificate CertifyLayerAddition(const NetworkGame& old_supra,
                                 const AdjacencyMatrix& new_layer,
                                 const Matrix& in_block,
                                 const Matrix& out_block) {
  const int d_old = old_supra.size();
  const int n = new_layer.size();
  if (in_block.rows() != n || in_block.cols() != d_old ||
      out_block.rows() != d_old || out_block.cols() != n) {
    throw ShapeError("layer addition blocks are not conformable");
  }
  Certificate c;
  c.source = "layer_addition_check";
  const Matrix a_new = new_layer.PlusIdentity();
  const ClassVerdict p_new = IsPMatrix(a_new);
  c.Add("new_layer_p", p_new.is_true() ? 1.0 : p_new.is_false() ? 0.0 : -1.0);
  if (p_new.is_false()) {
    c.verdict = Verdict::kNotGuaranteedUnique;
    c.Add("case", 1);
    return c;
  }
  if (!p_new.is_true()) {
    c.note = "new layer P-test undecided";
    return c;
  }
  const Matrix a_old = old_supra.g().PlusIdentity();
  Matrix full(d_old + n, d_old + n);
  full << a_old, out_block, in_block, a_new;
  const double eps = DeterminantTolerance(full);
  try {
    const double det = Determinant(
        SchurComplement(a_old, out_block, in_block, a_new, Eliminate::kSecond));
    c.Add("det_schur", det);
    c.Add("eps_det", eps);
    if (det <= eps) {
      c.verdict = Verdict::kNotGuaranteedUnique;
      c.Add("case", 2);
    }
  } catch (const SingularityError& e) {
    c.note = std::string("Schur complement unavailable: ") + e.what();
    c.Add("condition", e.condition());
  }
  return c;
}

Certificate CertifyChainCycleDegenerate(const std::vector<Matrix>& blocks) {
  Certificate c;
  c.source = "chain_cycle_degenerate";
  for (size_t k = 0; k < blocks.size(); ++k) {
    const Matrix& b = blocks[k];
    if (b.rows() != b.cols() || b.rows() != blocks.front().rows())
      throw ShapeError("chain/cycle blocks must be square and equal-sized");
    const int n = static_cast<int>(b.rows());
    int fired = 0;
    double factor = 0.0;
    if (IsDag(b)) {
      fired = 1;
    } else if (InfNorm(b * b - b) <= kStructureTol &&
               InfNorm(b - Matrix::Identity(n, n)) > kStructureTol) {
      fired = 2;
    } else if (IsCirculant(b) && std::abs(b(0, 0)) <= kZeroBlockTol) {
      factor = MinCirculantFactor(b);
      if (factor <= kStructureTol) fired = 3;
    }
    if (fired) {
      c.verdict = Verdict::kNotGuaranteedUnique;
      c.Add("block", static_cast<double>(k));
      c.Add("case", fired);
      if (fired == 3) c.Add("min_factor_modulus", factor);
      return c;
    }
  }
  return c;
}

Certificate CertifyExistence(const AdjacencyMatrix& g) {
  Certificate c;
  c.source = "existence_check";
  const Matrix& m = g.matrix();
  if (AllOffDiagonal(m, true)) {
    c.verdict = Verdict::kExists;
    c.Add("substitutes", 1);
    return c;
  }
  if (!AllOffDiagonal(m, false)) {
    c.note = "mixed substitutes and complements";
    return c;
  }
  const double rho = Spectral(m).rho;
  c.Add("complements", 1);
  c.Add("rho", rho);
  c.verdict = rho < 1.0 ? Verdict::kExists : Verdict::kNotExists;
  if (c.verdict == Verdict::kNotExists)
    c.note = "no equilibrium for some positive target vector";
  return c;
}

Certificate CertifyExistence(const NetworkGame& game) {
  if (game.q().maxCoeff() <= 0.0) {
    Certificate c;
    c.source = "existence_check";
    c.verdict = Verdict::kExists;
    c.Add("zero_profile", 1);
    return c;
  }
  return CertifyExistence(game.g());
}

MultiplexExistenceReport CertifyMultiplexComplementsExistence(
    const AdjacencyMatrix& g1, const AdjacencyMatrix& g2, double kappa) {
  RequireSameSize(g1, g2);
  const NetworkGame multiplex = BuildMultiplex(
      MultiplexGame::TwoLayer(g1, g2, kappa, Vector::Zero(g1.size())));
  MultiplexExistenceReport report;
  report.exact = CertifyExistence(multiplex.g());
  const bool applicable =
      IsSymmetric(g1.matrix()) && IsSymmetric(g2.matrix()) &&
      AllOffDiagonal(g1.matrix(), false) && AllOffDiagonal(g2.matrix(), false);
  if (!applicable) {
    const char* why = "layers must be symmetric strategic complements";
    report.sufficient =
        Inapplicable("multiplex_complements_sufficient", why);
    report.nonexistence =
        Inapplicable("multiplex_complements_nonexistence", why);
    return report;
  }
  const SpectralSummary s1 = Spectral(g1.matrix());
  const SpectralSummary s2 = Spectral(g2.matrix());
  Certificate& suff = report.sufficient;
  suff.source = "multiplex_complements_sufficient";
  const double bound =
      std::abs(kappa * s1.lambda_min_re + (1.0 - kappa) * s2.lambda_min_re);
  suff.Add("lhs", bound);
  suff.Add("rhs", 1.0);
  if (bound < 1.0) suff.verdict = Verdict::kExists;

  Certificate& non = report.nonexistence;
  non.source = "multiplex_complements_nonexistence";
  const double c1 =
      std::abs(kappa * s1.lambda_max_re + (1.0 - kappa) * s2.lambda_min_re);
  const double c2 =
      std::abs(kappa * s1.lambda_min_re + (1.0 - kappa) * s2.lambda_max_re);
  non.Add("lhs_1", c1);
  non.Add("lhs_2", c2);
  non.Add("rhs", 1.0);
  if (c1 >= 1.0 || c2 >= 1.0) non.verdict = Verdict::kNotExists;
  return report;
}

Certificate CertifyStrongStability(const LcpSolution& sol, const LcpProblem& p,
                                   double tol_active) {
  if (sol.z.size() != p.dim())
    throw InvalidInputError("solution dimension does not match the problem");
  const LcpSolution check = VerifySolution(p, sol.z);
  if (!(check.residual <= kVerifyTol) ||
      (sol.w.size() == p.dim() &&
       (sol.w - check.w).lpNorm<Eigen::Infinity>() > kVerifyTol)) {
    throw InvalidInputError("solution does not solve the LCP (residual " +
                            FormatDouble(check.residual) + ")");
  }
  const IndexPartition part = Partition(check, tol_active);
  Certificate c;
  c.source = "strong_stability";
  c.Add("j_size", static_cast<double>(part.j.size()));
  c.Add("k_size", static_cast<double>(part.k.size()));
  c.Add("l_size", static_cast<double>(part.l.size()));
  const Matrix mjj = Principal(p.m, part.j);
  const double cond = ConditionNumber(mjj);
  c.Add("condition_mjj", cond);
  if (!(cond < kMaxCondition)) {
    c.verdict = Verdict::kNotStronglyStable;
    c.note = "M_JJ is singular";
    return c;
  }
  const Matrix schur =
      SchurComplement(mjj, Sub(p.m, part.j, part.k), Sub(p.m, part.k, part.j),
                      Principal(p.m, part.k), Eliminate::kFirst);
  if (schur.rows() == 1) c.Add("schur_value", schur(0, 0));
  const ClassVerdict v = IsPMatrix(schur);
  c.Add("schur_p", v.is_true() ? 1.0 : v.is_false() ? 0.0 : -1.0);
  if (v.is_false()) {
    c.verdict = Verdict::kNotStronglyStable;
    c.Add("schur_witness_value", v.witness_value.value_or(0.0));
    c.note = "Schur complement on the degenerate set is not a P-matrix";
  } else if (v.is_true()) {
    c.verdict = Verdict::kStronglyStable;
  } else {
    c.note = "Schur complement P-test undecided";
  }
  return c;
}

Certificate CertifyUniquenessImpliesStability(const NetworkGame& game,
                                              int cap) {
  constexpr const char* kSource = "prop8_uniqueness_implies_stability";
  const LcpProblem p = FromGame(game);
  const ClassVerdict v = IsPMatrix(p.m);
  if (v.holds == Truth::kUnknown) {
    Certificate c;
    c.source = kSource;
    c.note = "P-test undecided";
    return c;
  }
  if (v.is_false()) return Inapplicable(kSource, "I + G is not a P-matrix");
  LcpSolution sol;
  if (p.dim() <= cap) {
    const EnumerationResult all = EnumerateSolutions(p, kLcpTol, cap);
    if (all.solutions.size() != 1) {
      throw InternalConsistencyError(
          "P-matrix LCP has " + std::to_string(all.solutions.size()) +
          " solutions");
    }
    sol = all.solutions.front();
  } else {
    const LemkeResult r = Lemke(p);
    if (!r.solution)
      throw InternalConsistencyError("Lemke ray termination on a P-matrix");
    sol = *r.solution;
  }
  Certificate c = CertifyStrongStability(sol, p);
  if (c.verdict != Verdict::kStronglyStable) {
    throw InternalConsistencyError(
        "unique equilibrium of a P-matrix game is not strongly stable");
  }
  c.source = kSource;
  c.Add("residual", sol.residual);
  return c;
}

}  // namespace mlgames
