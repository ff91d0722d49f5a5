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

#include "mlgames/rng.h"

#include <cmath>

namespace mlgames {

uint64_t Mix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

CounterRng::CounterRng(uint64_t seed, uint64_t stream, uint64_t substream)
    : key_(Mix64(Mix64(Mix64(seed) ^ stream) ^ substream)) {}

uint64_t CounterRng::Next() { return Mix64(key_ + Mix64(counter_++)); }

double CounterRng::Uniform01() {
  return static_cast<double>(Next() >> 11) * 0x1.0p-53;
}

double CounterRng::UniformSymmetric(double half_width) {
  // Midpoint grid (k + 1/2) / 2^53 never lands on 0 or 1.
  const double u = (static_cast<double>(Next() >> 11) + 0.5) * 0x1.0p-53;
  return half_width * (2.0 * u - 1.0);
}

uint64_t CounterRng::Below(uint64_t n) {
  // Rejection keeps the draw exactly uniform.
  const uint64_t limit = ~uint64_t{0} - (~uint64_t{0} % n);
  for (;;) {
    const uint64_t r = Next();
    if (r < limit) return r % n;
  }
}

}  // namespace mlgames
