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

// Writes the frozen first-layer set used by the multilayer sweep.
//
//   mlgames_fixtures data/multilayer_layer1.json

#include <fstream>
#include <iostream>

#include "mlgames/experiments.h"
#include "mlgames/io.h"

int main(int argc, char** argv) {
  using namespace mlgames;
  constexpr int kN = 5;
  constexpr int kCount = 6;
  Json doc;
  doc["seed"] = kLayerOneFixtureSeed;
  doc["n"] = kN;
  doc["layers"] = Json::array();
  for (const auto& g : GenerateLayerOneSet(kN, kCount, kLayerOneFixtureSeed))
    doc["layers"].push_back(ToJson(g.matrix()));
  const std::string text = doc.dump(2) + "\n";
  if (argc < 2) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(argv[1]);
  out << text;
  return out ? 0 : 1;
}
