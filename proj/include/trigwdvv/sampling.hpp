// Copyright 2026 The trigwdvv Authors
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

// Seeded, portable sampling. Each named check draws from its own stream so
// adding or removing a check never shifts another check's samples.

#ifndef TRIGWDVV_SAMPLING_HPP_
#define TRIGWDVV_SAMPLING_HPP_

#include <cstdint>
#include <random>
#include <string_view>

#include "trigwdvv/configuration.hpp"

namespace trigwdvv {

/// Rejection cap per accepted point.
inline constexpr int kMaxAttempts = 10000;

/// One SplitMix64 step: returns the output for state x.
std::uint64_t splitmix64(std::uint64_t x);

/// Seed of the stream `name` derived from the run seed (FNV-1a of the name
/// mixed through SplitMix64).
std::uint64_t stream_seed(std::uint64_t seed, std::string_view name);

/// mt19937_64 with distributions implemented locally, so sequences are
/// identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  Rng(std::uint64_t seed, std::string_view stream)
      : engine_(stream_seed(seed, stream)) {}

  /// Uniform in [0, 1) with 53 random bits.
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Standard normal (Box-Muller, no cached second value).
  double normal();

  Vector uniform_vector(int n, double lo, double hi);
  Vector normal_vector(int n);

 private:
  std::mt19937_64 engine_;
};

struct SampleBox {
  double lo = 0.3;
  double hi = 1.5;
};

/// Draws points uniformly from box^n until one is admissible for `config`
/// with margin theta. Throws PreconditionError after kMaxAttempts rejections.
Vector sample_admissible(Rng& rng, const Configuration& config,
                         const SampleBox& box, double theta);

}  // namespace trigwdvv

#endif  // TRIGWDVV_SAMPLING_HPP_
