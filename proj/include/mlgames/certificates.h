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

#ifndef MLGAMES_CERTIFICATES_H_
#define MLGAMES_CERTIFICATES_H_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mlgames/game.h"
#include "mlgames/lcp.h"

namespace mlgames {

enum class Verdict {
  kGuaranteedUnique,
  kNotGuaranteedUnique,
  kExists,
  kNotExists,
  kStronglyStable,
  kNotStronglyStable,
  kInconclusive,
};

const char* ToString(Verdict v);

// Outcome of one uniqueness / existence / stability condition together with
// the quantities that decided it.
struct Certificate {
  Verdict verdict = Verdict::kInconclusive;
  std::string source;
  bool applicable = true;
  // Directed input evaluated with the real-part eigenvalue convention; the
  // underlying result is only proven for symmetric layers.
  bool heuristic = false;
  std::vector<std::pair<std::string, double>> evidence;
  std::string note;

  void Add(std::string name, double value) {
    evidence.emplace_back(std::move(name), value);
  }
  std::optional<double> Get(const std::string& name) const;
  bool fired() const { return verdict != Verdict::kInconclusive; }
};

// ---- Multiplex uniqueness --------------------------------------------------

// Scans agent pairs for a 2x2 principal minor of I + G|| with non-positive
// determinant, written in terms of the per-layer pair minors. Pairs with a
// zero edge in either layer are skipped. Only ever refutes uniqueness.
Certificate CertifyPairFailure(const AdjacencyMatrix& g1,
                               const AdjacencyMatrix& g2, double kappa);

// Symmetric-P, strict row dominance and B-matrix classes are closed under
// convex combination; uniqueness holds if every layer is in one class.
Certificate CertifyClosedClasses(const MultiplexGame& game);
Certificate CertifyClosedClasses(const AdjacencyMatrix& g1,
                                 const AdjacencyMatrix& g2, double kappa);

// Layer 2 small relative to the spectral margin of layer 1:
// lambda_max(G2) < (2k - 1) / (1 - k) + k / (1 - k) * lambda_min(G1).
Certificate CertifyPerturbation(const AdjacencyMatrix& g1,
                                const AdjacencyMatrix& g2, double kappa);

// Two-sided layer 2 not muted by layer 1's connectivity:
// |lambda_min(G2)| >= (1 + k * lambda_max(G1)) / (1 - k).
Certificate CertifyTwoSidedFailure(const AdjacencyMatrix& g1,
                                   const AdjacencyMatrix& g2, double kappa);

// ---- Multilayer uniqueness -------------------------------------------------

// A layer without a unique equilibrium, or a non-positive Schur-complement
// determinant of I + G_supra.
Certificate CertifyMultilayerFailure(const MultilayerGame& game);

// Exact when one inter-layer block vanishes: unique iff every layer is.
Certificate CertifyOneWay(const MultilayerGame& game);

// Complement layers whose inverses dominate the inter-layer blocks in the
// spectral norm.
Certificate CertifyComplementsBlockDominance(const MultilayerGame& game);

// ---- Layers beyond two ------------------------------------------------------

// Adding new_layer to an existing supra game. in_block (n x d_old) feeds old
// actions into the new layer, out_block (d_old x n) the reverse.
Certificate CertifyLayerAddition(const NetworkGame& old_supra,
                                 const AdjacencyMatrix& new_layer,
                                 const Matrix& in_block,
                                 const Matrix& out_block);

// Off-diagonal blocks of a chain or cycle supra matrix that are acyclic,
// non-identity idempotent, or zero-diagonal circulant with a vanishing
// eigenvalue factor.
Certificate CertifyChainCycleDegenerate(const std::vector<Matrix>& blocks);

// ---- Existence ---------------------------------------------------------------

// Substitutes always have an equilibrium; complements iff rho(G) < 1.
Certificate CertifyExistence(const NetworkGame& game);
Certificate CertifyExistence(const AdjacencyMatrix& g);

struct MultiplexExistenceReport {
  // Exact verdict on G|| by sign class.
  Certificate exact;
  // Weyl bound |k lmin(G1) + (1-k) lmin(G2)| < 1.
  Certificate sufficient;
  // |k lmax(G1) + (1-k) lmin(G2)| >= 1 or |k lmin(G1) + (1-k) lmax(G2)| >= 1.
  Certificate nonexistence;
};

// Symmetric complement layers; the Weyl-bound certificates are marked
// inapplicable otherwise.
MultiplexExistenceReport CertifyMultiplexComplementsExistence(
    const AdjacencyMatrix& g1, const AdjacencyMatrix& g2, double kappa);

// ---- Stability ---------------------------------------------------------------

// Strongly stable iff m_JJ is nonsingular and the Schur complement
// m_KK - m_KJ m_JJ^-1 m_JK is a P-matrix. Throws InvalidInputError if sol
// does not solve p.
Certificate CertifyStrongStability(const LcpSolution& sol, const LcpProblem& p,
                                   double tol_active = kActiveTol);

// When I + G is a P-matrix, solves for the unique equilibrium and checks it
// is strongly stable; a failure raises InternalConsistencyError.
Certificate CertifyUniquenessImpliesStability(const NetworkGame& game,
                                              int cap = kEnumerationCap);

}  // namespace mlgames

#endif  // MLGAMES_CERTIFICATES_H_
