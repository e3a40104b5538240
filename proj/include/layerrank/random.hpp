// Copyright 2026 The layerrank Authors
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

#ifndef LAYERRANK_RANDOM_HPP_
#define LAYERRANK_RANDOM_HPP_

#include <cstdint>
#include <initializer_list>
#include <random>

namespace layerrank {

// SplitMix64 finalizer. Used to turn structured keys into seeds.
std::uint64_t mix64(std::uint64_t x);

// Child seed for a path of indices below `base`, e.g.
// derive_seed(base, {model, grid_point, trial}). Each level is hashed in
// turn, so sibling streams never share a seed prefix.
std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> path);

// mt19937_64 with hand-written variates. The standard distributions are
// implementation-defined, which would make outputs differ between
// standard libraries for the same seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Uniform in [0, bound), bound > 0. Rejection sampling, no modulo bias.
  std::uint64_t below(std::uint64_t bound);

  bool bernoulli(double p) { return uniform01() < p; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace layerrank

#endif  // LAYERRANK_RANDOM_HPP_
