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

#ifndef MLGAMES_IO_H_
#define MLGAMES_IO_H_

#include <string>
#include <variant>

#include <json.hpp>

#include "mlgames/certificates.h"
#include "mlgames/game.h"
#include "mlgames/lcp.h"
#include "mlgames/matrix_classes.h"

namespace mlgames {

using Json = nlohmann::ordered_json;

// {"n": n, "entries": [row-major]}
Json ToJson(const Matrix& m);
Matrix MatrixFromJson(const Json& j);
AdjacencyMatrix AdjacencyFromJson(const Json& j);

// Matrix fields plus "q" (zeros when absent).
Json ToJson(const NetworkGame& game);
NetworkGame NetworkGameFromJson(const Json& j);

// {"layers": [...], "weights": [...] | "kappa": k, "q": [...]}
Json ToJson(const MultiplexGame& game);
MultiplexGame MultiplexGameFromJson(const Json& j);

// {"layers": [...], "inter": [[null | matrix, ...], ...], "q": [...]}
Json ToJson(const MultilayerGame& game);
MultilayerGame MultilayerGameFromJson(const Json& j);

// {"z": [...], "w": [...], "residual": r}
Json ToJson(const LcpSolution& sol);

// {"verdict", "source", "applicability", "heuristic", "evidence": {...}}
Json ToJson(const Certificate& cert);

Json ToJson(const ClassVerdict& v);
Json ToJson(const SpectralSummary& s);

Json VectorToJson(const Vector& v);
Vector VectorFromJson(const Json& j);

using AnyGame = std::variant<NetworkGame, MultiplexGame, MultilayerGame>;

// Dispatches on the fields present: "inter" => multilayer, "layers" =>
// multiplex, otherwise a single network.
AnyGame GameFromJson(const Json& j);

Json ReadJsonFile(const std::string& path);

}  // namespace mlgames

#endif  // MLGAMES_IO_H_
