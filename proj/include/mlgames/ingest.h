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

#ifndef MLGAMES_INGEST_H_
#define MLGAMES_INGEST_H_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mlgames/game.h"
#include "mlgames/rng.h"

namespace mlgames {

inline constexpr double kDefaultMergeAlpha = 2.0 / 3.0;
inline constexpr int kMaxCommunityRestarts = 1000;
// Fraction of malformed data rows tolerated before a file is rejected.
inline constexpr double kMaxBadRowFraction = 0.01;

struct Edge {
  int src = 0;
  int dst = 0;
  double weight = 0.0;
};

// Directed weighted edges over nodes indexed by first appearance.
struct EdgeList {
  std::vector<std::string> nodes;
  std::vector<Edge> edges;

  int num_nodes() const { return static_cast<int>(nodes.size()); }
};

struct IngestReport {
  int nodes_kept = 0;
  int edges_kept = 0;
  int self_edges_dropped = 0;
  int rows_read = 0;
  int bad_rows = 0;
  // Line number and message of each skipped row.
  std::vector<std::pair<int, std::string>> row_errors;
  double normalization_max = 0.0;
};

// Column names in the header row. An empty weight column gives every row
// weight 1 (so duplicates count interactions).
struct EdgeSchema {
  std::string src = "src";
  std::string dst = "dst";
  std::string weight;
};

struct ParsedEdges {
  EdgeList edges;
  IngestReport report;
};

// Comma-separated text with a header row. Duplicate (src, dst) pairs are
// summed, self-edges dropped. Throws ParseError when more than 1% of the
// data rows are malformed or a schema column is missing.
ParsedEdges ParseEdgeList(const std::string& path, const EdgeSchema& schema);
ParsedEdges ParseEdgeListText(const std::string& text,
                              const EdgeSchema& schema);

// Divides every weight by the largest one. Throws DegenerateInputError if
// no weight is positive and InvalidInputError on a negative weight.
EdgeList NormalizeWeights(const EdgeList& e, double* max_used = nullptr);

AdjacencyMatrix ToAdjacency(const EdgeList& e);

// A layer whose rows and columns are labelled by node id.
struct LabeledLayer {
  std::vector<std::string> nodes;
  AdjacencyMatrix g;
};

LabeledLayer ToLayer(const EdgeList& e);

// alpha * a + (1 - alpha) * b over the union of both node sets (nodes of a
// first, then new nodes of b). Missing nodes get zero rows and columns.
LabeledLayer MergeLayers(const LabeledLayer& a, const LabeledLayer& b,
                         double alpha = kDefaultMergeAlpha);

enum class AttentionMode { kInverseDegree, kConstant };

// Each out-edge of node i weighted 1/outdegree(i), or the constant c.
AdjacencyMatrix AttentionWeights(const EdgeList& e, AttentionMode mode,
                                 double c = 0.0);

// 0/1 symmetric adjacency: an edge in either direction links both ways.
AdjacencyMatrix BinarySymmetric(const EdgeList& e);

// Breadth-first growth over the undirected support of g from a random
// start, neighbours in index order, until target_n nodes are reached.
// Restarts from a fresh start when the component is too small; throws
// InfeasibleError after kMaxCommunityRestarts or when no component is big
// enough. The start node is the first element.
std::vector<int> ExtractCommunity(const AdjacencyMatrix& g, int target_n,
                                  CounterRng& rng);

struct KappaCurve {
  int community_id = 0;
  std::vector<int> nodes;
  std::vector<std::pair<double, double>> points;
};

// For each of `communities` communities (RNG stream = community id), the
// determinant curve of I + k A + (1 - k) B restricted to the community.
std::vector<KappaCurve> KappaBatch(const AdjacencyMatrix& a,
                                   const AdjacencyMatrix& b, int communities,
                                   int target_n,
                                   const std::vector<double>& kappa_grid,
                                   uint64_t seed, int workers = 1);

// community_id,kappa,determinant
std::string KappaCsv(const std::vector<KappaCurve>& curves);

}  // namespace mlgames

#endif  // MLGAMES_INGEST_H_
