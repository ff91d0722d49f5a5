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

#include "mlgames/ingest.h"

#include <charconv>
#include <cmath>
#include <deque>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_map>

#include "mlgames/errors.h"
#include "mlgames/experiments.h"
#include "mlgames/linalg.h"
#include "mlgames/parallel.h"

namespace mlgames {
namespace {

std::string Trim(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  s = s.substr(b, e - b);
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"')
    s = s.substr(1, s.size() - 2);
  return std::string(s);
}

std::vector<std::string> SplitRow(const std::string& line) {
  std::vector<std::string> out;
  std::string_view rest = line;
  for (;;) {
    const size_t comma = rest.find(',');
    out.push_back(Trim(rest.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return out;
}

int ColumnIndex(const std::vector<std::string>& header,
                const std::string& name) {
  for (size_t i = 0; i < header.size(); ++i)
    if (header[i] == name) return static_cast<int>(i);
  throw ParseError("missing column \"" + name + "\" in header", 1);
}

bool ParseWeight(const std::string& field, double* out) {
  const char* first = field.data();
  const char* last = first + field.size();
  auto [ptr, ec] = std::from_chars(first, last, *out);
  return ec == std::errc() && ptr == last && std::isfinite(*out);
}

std::vector<std::vector<int>> UndirectedNeighbours(const Matrix& g) {
  const int n = static_cast<int>(g.rows());
  std::vector<std::vector<int>> adj(n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && (g(u, v) != 0.0 || g(v, u) != 0.0)) adj[u].push_back(v);
  return adj;
}

}  // namespace

ParsedEdges ParseEdgeListText(const std::string& text,
                              const EdgeSchema& schema) {
  ParsedEdges result;
  IngestReport& report = result.report;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  std::vector<std::string> header;
  while (header.empty() && std::getline(in, line)) {
    ++line_no;
    if (!Trim(line).empty()) header = SplitRow(line);
  }
  if (header.empty()) return result;
  const int src_col = ColumnIndex(header, schema.src);
  const int dst_col = ColumnIndex(header, schema.dst);
  const int w_col =
      schema.weight.empty() ? -1 : ColumnIndex(header, schema.weight);
  const int needed = std::max({src_col, dst_col, w_col}) + 1;

  std::unordered_map<std::string, int> node_index;
  std::map<std::pair<int, int>, int> edge_index;
  auto node = [&](const std::string& id) {
    auto [it, fresh] = node_index.emplace(id, result.edges.num_nodes());
    if (fresh) result.edges.nodes.push_back(id);
    return it->second;
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (Trim(line).empty()) continue;
    ++report.rows_read;
    const std::vector<std::string> f = SplitRow(line);
    std::string error;
    double weight = 1.0;
    if (static_cast<int>(f.size()) < needed) {
      error = "expected at least " + std::to_string(needed) + " columns";
    } else if (f[src_col].empty() || f[dst_col].empty()) {
      error = "empty node id";
    } else if (w_col >= 0 && !ParseWeight(f[w_col], &weight)) {
      error = "bad weight \"" + f[w_col] + "\"";
    }
    if (!error.empty()) {
      ++report.bad_rows;
      report.row_errors.emplace_back(line_no, error);
      continue;
    }
    if (f[src_col] == f[dst_col]) {
      ++report.self_edges_dropped;
      continue;
    }
    const int s = node(f[src_col]);
    const int d = node(f[dst_col]);
    auto [it, fresh] = edge_index.emplace(
        std::make_pair(s, d), static_cast<int>(result.edges.edges.size()));
    if (fresh) {
      result.edges.edges.push_back({s, d, weight});
    } else {
      result.edges.edges[it->second].weight += weight;
    }
  }
  if (report.bad_rows > kMaxBadRowFraction * report.rows_read) {
    const auto& [first_line, msg] = report.row_errors.front();
    throw ParseError(std::to_string(report.bad_rows) + " of " +
                         std::to_string(report.rows_read) +
                         " rows malformed; first at line " +
                         std::to_string(first_line) + ": " + msg,
                     first_line);
  }
  report.nodes_kept = result.edges.num_nodes();
  report.edges_kept = static_cast<int>(result.edges.edges.size());
  return result;
}

ParsedEdges ParseEdgeList(const std::string& path, const EdgeSchema& schema) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInputError("cannot open " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return ParseEdgeListText(text.str(), schema);
}

EdgeList NormalizeWeights(const EdgeList& e, double* max_used) {
  double max = 0.0;
  for (const auto& edge : e.edges) {
    if (edge.weight < 0.0)
      throw InvalidInputError("negative interaction weight");
    max = std::max(max, edge.weight);
  }
  if (!(max > 0.0)) throw DegenerateInputError("no positive weight to scale by");
  EdgeList out;
  out.nodes = e.nodes;
  for (const auto& edge : e.edges)
    if (edge.weight > 0.0) out.edges.push_back({edge.src, edge.dst, edge.weight / max});
  if (max_used) *max_used = max;
  return out;
}

AdjacencyMatrix ToAdjacency(const EdgeList& e) {
  const int n = e.num_nodes();
  Matrix g = Matrix::Zero(n, n);
  for (const auto& edge : e.edges)
    if (edge.src != edge.dst) g(edge.src, edge.dst) += edge.weight;
  return AdjacencyMatrix(std::move(g));
}

LabeledLayer ToLayer(const EdgeList& e) { return {e.nodes, ToAdjacency(e)}; }

LabeledLayer MergeLayers(const LabeledLayer& a, const LabeledLayer& b,
                         double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0))
    throw InvalidParameterError("alpha must lie in [0, 1]");
  if (static_cast<int>(a.nodes.size()) != a.g.size() ||
      static_cast<int>(b.nodes.size()) != b.g.size()) {
    throw ShapeError("node labels do not match layer size");
  }
  LabeledLayer out;
  out.nodes = a.nodes;
  std::unordered_map<std::string, int> index;
  for (size_t i = 0; i < a.nodes.size(); ++i) index.emplace(a.nodes[i], i);
  std::vector<int> map_b(b.nodes.size());
  for (size_t i = 0; i < b.nodes.size(); ++i) {
    auto [it, fresh] = index.emplace(b.nodes[i], out.nodes.size());
    if (fresh) out.nodes.push_back(b.nodes[i]);
    map_b[i] = it->second;
  }
  const int n = static_cast<int>(out.nodes.size());
  Matrix g = Matrix::Zero(n, n);
  g.topLeftCorner(a.g.size(), a.g.size()) = alpha * a.g.matrix();
  for (int i = 0; i < b.g.size(); ++i)
    for (int j = 0; j < b.g.size(); ++j)
      g(map_b[i], map_b[j]) += (1.0 - alpha) * b.g(i, j);
  out.g = AdjacencyMatrix(std::move(g));
  return out;
}

AdjacencyMatrix AttentionWeights(const EdgeList& e, AttentionMode mode,
                                 double c) {
  if (mode == AttentionMode::kConstant && !(c > 0.0))
    throw InvalidParameterError("constant attention must be positive");
  const int n = e.num_nodes();
  Matrix g = Matrix::Zero(n, n);
  std::vector<int> outdeg(n, 0);
  for (const auto& edge : e.edges)
    if (edge.src != edge.dst) g(edge.src, edge.dst) = 1.0;
  for (int i = 0; i < n; ++i)
    outdeg[i] = static_cast<int>(g.row(i).sum());
  for (int i = 0; i < n; ++i) {
    if (outdeg[i] == 0) continue;
    g.row(i) *= mode == AttentionMode::kConstant ? c : 1.0 / outdeg[i];
  }
  return AdjacencyMatrix(std::move(g));
}

AdjacencyMatrix BinarySymmetric(const EdgeList& e) {
  const int n = e.num_nodes();
  Matrix g = Matrix::Zero(n, n);
  for (const auto& edge : e.edges) {
    if (edge.src == edge.dst || edge.weight == 0.0) continue;
    g(edge.src, edge.dst) = 1.0;
    g(edge.dst, edge.src) = 1.0;
  }
  return AdjacencyMatrix(std::move(g));
}

std::vector<int> ExtractCommunity(const AdjacencyMatrix& g, int target_n,
                                  CounterRng& rng) {
  const int n = g.size();
  if (target_n < 1) throw InvalidParameterError("target size must be >= 1");
  if (target_n > n) {
    throw InfeasibleError("community of " + std::to_string(target_n) +
                          " nodes requested from " + std::to_string(n));
  }
  const auto adj = UndirectedNeighbours(g.matrix());

  // Largest component first, so hopeless requests fail fast.
  std::vector<int> comp(n, -1);
  int largest = 0;
  for (int s = 0, id = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    int size = 0;
    std::deque<int> queue{s};
    comp[s] = id;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      ++size;
      for (int v : adj[u])
        if (comp[v] < 0) comp[v] = id, queue.push_back(v);
    }
    largest = std::max(largest, size);
    ++id;
  }
  if (largest < target_n) {
    throw InfeasibleError("largest component has " + std::to_string(largest) +
                          " nodes, fewer than " + std::to_string(target_n));
  }

  for (int restart = 0; restart < kMaxCommunityRestarts; ++restart) {
    const int start = static_cast<int>(rng.Below(n));
    std::vector<int> order{start};
    std::vector<bool> seen(n, false);
    seen[start] = true;
    for (size_t head = 0;
         head < order.size() && static_cast<int>(order.size()) < target_n;
         ++head) {
      for (int v : adj[order[head]]) {
        if (seen[v]) continue;
        seen[v] = true;
        order.push_back(v);
        if (static_cast<int>(order.size()) == target_n) break;
      }
    }
    if (static_cast<int>(order.size()) == target_n) return order;
  }
  throw InfeasibleError("no community of " + std::to_string(target_n) +
                        " nodes after " +
                        std::to_string(kMaxCommunityRestarts) + " restarts");
}

std::vector<KappaCurve> KappaBatch(const AdjacencyMatrix& a,
                                   const AdjacencyMatrix& b, int communities,
                                   int target_n,
                                   const std::vector<double>& kappa_grid,
                                   uint64_t seed, int workers) {
  if (a.size() != b.size()) throw ShapeError("layers differ in size");
  if (communities < 0) throw InvalidParameterError("negative community count");
  const AdjacencyMatrix support(a.matrix().cwiseAbs() + b.matrix().cwiseAbs());
  std::vector<KappaCurve> curves(communities);
  ParallelFor(curves.size(), workers, [&](size_t c) {
    CounterRng rng(seed, c);
    KappaCurve& curve = curves[c];
    curve.community_id = static_cast<int>(c);
    curve.nodes = ExtractCommunity(support, target_n, rng);
    curve.points = KappaDeterminantSweep(
        AdjacencyMatrix(Principal(a.matrix(), curve.nodes)),
        AdjacencyMatrix(Principal(b.matrix(), curve.nodes)), kappa_grid);
  });
  return curves;
}

std::string KappaCsv(const std::vector<KappaCurve>& curves) {
  std::ostringstream out;
  out << "community_id,kappa,determinant\n";
  for (const auto& c : curves)
    for (const auto& [k, det] : c.points)
      out << c.community_id << ',' << FormatDouble(k) << ','
          << FormatDouble(det) << '\n';
  return out.str();
}

}  // namespace mlgames
