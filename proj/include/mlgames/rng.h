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

#ifndef MLGAMES_RNG_H_
#define MLGAMES_RNG_H_

#include <cstdint>

namespace mlgames {

// Counter-based generator: the output stream is a pure function of
// (seed, stream, substream), so results never depend on which worker
// draws them or in what order.
class CounterRng {
 public:
  CounterRng(uint64_t seed, uint64_t stream, uint64_t substream = 0);

  uint64_t Next();

  // Uniform on [0, 1) with 53 random bits.
  double Uniform01();

  // Uniform on the open interval (-half_width, half_width).
  double UniformSymmetric(double half_width);

  // Uniform integer in [0, n), n > 0.
  uint64_t Below(uint64_t n);

 private:
  uint64_t key_;
  uint64_t counter_ = 0;
};

// SplitMix64 finalizer.
uint64_t Mix64(uint64_t x);

}  // namespace mlgames

#endif  // MLGAMES_RNG_H_
