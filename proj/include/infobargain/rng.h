// Copyright 2026 The infobargain Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef INFOBARGAIN_RNG_H_
#define INFOBARGAIN_RNG_H_

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>

namespace infobargain {

// Seeded generator with a portable double mapping (top 53 bits), so the
// same seed yields the same stream under every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t NextU64() { return engine_(); }
  // Uniform on [0, 1).
  double Uniform() { return static_cast<double>(NextU64() >> 11) * 0x1.0p-53; }
  bool Bernoulli(double p) { return Uniform() < p; }
  // Index drawn from a probability vector (need not be exactly normalized).
  std::size_t Categorical(std::span<const double> probabilities);

 private:
  std::mt19937_64 engine_;
};

std::uint64_t SplitMix64(std::uint64_t x);

// Deterministic child seed from a base seed and two identifiers.
std::uint64_t DeriveSeed(std::uint64_t base, std::uint64_t a, std::uint64_t b = 0);

}  // namespace infobargain

#endif  // INFOBARGAIN_RNG_H_
