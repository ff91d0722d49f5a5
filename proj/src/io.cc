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

#include "mlgames/io.h"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "mlgames/errors.h"

namespace mlgames {
namespace {

const Json& Field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name))
    throw InvalidInputError(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

double Number(const Json& j, const char* what) {
  if (!j.is_number())
    throw InvalidInputError(std::string(what) + " must be numeric");
  return j.get<double>();
}

Json OptionalMatrix(const Matrix& m) {
  return m.size() == 0 ? Json(nullptr) : ToJson(m);
}

}  // namespace

Json VectorToJson(const Vector& v) {
  Json out = Json::array();
  for (int i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

Vector VectorFromJson(const Json& j) {
  if (!j.is_array()) throw InvalidInputError("expected an array of numbers");
  Vector v(j.size());
  for (size_t i = 0; i < j.size(); ++i) v(i) = Number(j[i], "vector entry");
  return v;
}

Json ToJson(const Matrix& m) {
  if (m.rows() != m.cols()) throw ShapeError("only square matrices serialize");
  Json entries = Json::array();
  for (int i = 0; i < m.rows(); ++i)
    for (int k = 0; k < m.cols(); ++k) entries.push_back(m(i, k));
  return Json{{"n", m.rows()}, {"entries", std::move(entries)}};
}

Matrix MatrixFromJson(const Json& j) {
  const Json& nj = Field(j, "n");
  if (!nj.is_number_integer() || nj.get<long long>() <= 0)
    throw InvalidInputError("\"n\" must be a positive integer");
  const int n = nj.get<int>();
  const Json& e = Field(j, "entries");
  if (!e.is_array() || e.size() != static_cast<size_t>(n) * n) {
    throw ShapeError("\"entries\" must hold n*n = " + std::to_string(n * n) +
                     " values");
  }
  Matrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) m(i, k) = Number(e[i * n + k], "matrix entry");
  return m;
}

AdjacencyMatrix AdjacencyFromJson(const Json& j) {
  return AdjacencyMatrix(MatrixFromJson(j));
}

Json ToJson(const NetworkGame& game) {
  Json j = ToJson(game.g().matrix());
  j["q"] = VectorToJson(game.q());
  return j;
}

NetworkGame NetworkGameFromJson(const Json& j) {
  AdjacencyMatrix g = AdjacencyFromJson(j);
  Vector q = j.contains("q") ? VectorFromJson(j["q"]) : Vector::Zero(g.size());
  return NetworkGame(std::move(g), std::move(q));
}

Json ToJson(const MultiplexGame& game) {
  Json layers = Json::array();
  for (const auto& l : game.layers) layers.push_back(ToJson(l.matrix()));
  return Json{{"layers", std::move(layers)},
              {"weights", game.weights},
              {"q", VectorToJson(game.q)}};
}

MultiplexGame MultiplexGameFromJson(const Json& j) {
  MultiplexGame game;
  const Json& layers = Field(j, "layers");
  if (!layers.is_array()) throw InvalidInputError("\"layers\" must be an array");
  for (const auto& l : layers) game.layers.push_back(AdjacencyFromJson(l));
  if (j.contains("weights")) {
    for (const auto& w : j["weights"])
      game.weights.push_back(Number(w, "weight"));
  } else if (j.contains("kappa")) {
    if (game.layers.size() != 2)
      throw InvalidInputError("\"kappa\" requires exactly two layers");
    const double k = Number(j["kappa"], "kappa");
    game.weights = {k, 1.0 - k};
  } else {
    throw InvalidInputError("multiplex game needs \"weights\" or \"kappa\"");
  }
  const int n = game.size();
  game.q = j.contains("q") ? VectorFromJson(j["q"]) : Vector::Zero(n);
  game.Validate();
  return game;
}

Json ToJson(const MultilayerGame& game) {
  Json layers = Json::array();
  for (const auto& l : game.layers) layers.push_back(ToJson(l.matrix()));
  Json inter = Json::array();
  for (int l = 0; l < game.num_layers(); ++l) {
    Json row = Json::array();
    for (int k = 0; k < game.num_layers(); ++k)
      row.push_back(l == k ? Json(nullptr) : OptionalMatrix(game.inter[l][k]));
    inter.push_back(std::move(row));
  }
  return Json{{"layers", std::move(layers)},
              {"inter", std::move(inter)},
              {"q", VectorToJson(game.q)}};
}

MultilayerGame MultilayerGameFromJson(const Json& j) {
  MultilayerGame game;
  for (const auto& l : Field(j, "layers"))
    game.layers.push_back(AdjacencyFromJson(l));
  const int m = game.num_layers();
  const int n = game.layer_size();
  const Json& inter = Field(j, "inter");
  if (!inter.is_array() || static_cast<int>(inter.size()) != m)
    throw ShapeError("\"inter\" must be an M x M grid");
  game.inter.assign(m, std::vector<Matrix>(m));
  for (int l = 0; l < m; ++l) {
    if (!inter[l].is_array() || static_cast<int>(inter[l].size()) != m)
      throw ShapeError("\"inter\" must be an M x M grid");
    for (int k = 0; k < m; ++k) {
      if (l == k) continue;
      game.inter[l][k] = inter[l][k].is_null() ? Matrix::Zero(n, n)
                                               : MatrixFromJson(inter[l][k]);
    }
  }
  game.q = j.contains("q") ? VectorFromJson(j["q"])
                           : Vector::Zero(static_cast<Eigen::Index>(m) * n);
  game.Validate();
  return game;
}

Json ToJson(const LcpSolution& sol) {
  return Json{{"z", VectorToJson(sol.z)},
              {"w", VectorToJson(sol.w)},
              {"residual", sol.residual}};
}

Json ToJson(const Certificate& cert) {
  Json evidence = Json::object();
  for (const auto& [name, value] : cert.evidence) evidence[name] = value;
  Json j{{"verdict", ToString(cert.verdict)},
         {"source", cert.source},
         {"applicability", cert.applicable},
         {"heuristic", cert.heuristic},
         {"evidence", std::move(evidence)}};
  if (!cert.note.empty()) j["note"] = cert.note;
  return j;
}

Json ToJson(const ClassVerdict& v) {
  Json j{{"holds", ToString(v.holds)}, {"method", ToString(v.method)}};
  if (!v.witness_set.empty()) j["witness_set"] = v.witness_set;
  if (v.witness_value) j["witness_value"] = *v.witness_value;
  return j;
}

Json ToJson(const SpectralSummary& s) {
  Json eig = Json::array();
  for (const auto& e : s.eigenvalues) eig.push_back({e.real(), e.imag()});
  return Json{{"lambda_min_re", s.lambda_min_re},
              {"lambda_max_re", s.lambda_max_re},
              {"rho", s.rho},
              {"is_symmetric", s.is_symmetric},
              {"eigenvalues", std::move(eig)}};
}

AnyGame GameFromJson(const Json& j) {
  if (!j.is_object()) throw InvalidInputError("game document must be an object");
  if (j.contains("inter")) return MultilayerGameFromJson(j);
  if (j.contains("layers")) return MultiplexGameFromJson(j);
  return NetworkGameFromJson(j);
}

Json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInputError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace mlgames
