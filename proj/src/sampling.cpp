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

#include "trigwdvv/sampling.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "trigwdvv/errors.hpp"
#include "trigwdvv/prepotential.hpp"

namespace trigwdvv {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t stream_seed(std::uint64_t seed, std::string_view name) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : name) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return splitmix64(splitmix64(seed) ^ hash);
}

double Rng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
  double u1 = uniform();
  while (u1 == 0.0) u1 = uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

Vector Rng::uniform_vector(int n, double lo, double hi) {
  Vector v(n);
  for (int i = 0; i < n; ++i) v(i) = uniform(lo, hi);
  return v;
}

Vector Rng::normal_vector(int n) {
  Vector v(n);
  for (int i = 0; i < n; ++i) v(i) = normal();
  return v;
}

Vector sample_admissible(Rng& rng, const Configuration& config,
                         const SampleBox& box, double theta) {
  if (!(box.lo < box.hi)) {
    throw PreconditionError("sampling box needs lo < hi");
  }
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    Vector x = rng.uniform_vector(config.dimension(), box.lo, box.hi);
    if (is_admissible(config, x, theta)) return x;
  }
  throw PreconditionError("no admissible point found in " +
                          std::to_string(kMaxAttempts) +
                          " attempts; widen the box or lower theta");
}

}  // namespace trigwdvv
