// Copyright 2026 The gmagic Authors
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

#ifndef GMAGIC_RNG_HPP_
#define GMAGIC_RNG_HPP_

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace gmagic {

/// Seeded random stream with explicit uniform/normal generation.
///
/// Sub-streams are derived from (master seed, stream id) by SplitMix64
/// mixing, so a parameter sweep can hand every task its own stream and
/// the results never depend on scheduling or worker count.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(mix64(seed)) {}

    /// Stream derived from a master seed and a task/sample index.
    static Rng stream(std::uint64_t master_seed, std::uint64_t stream_id) {
        return Rng(mix64(master_seed + 0x9e3779b97f4a7c15ULL * (stream_id + 1)));
    }

    std::uint64_t bits() { return engine_(); }

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(bits() >> 11) * 0x1.0p-53; }

    /// Standard normal via Box-Muller (two uniform draws per call).
    double normal() {
        const double u1 = static_cast<double>((bits() >> 11) + 1) * 0x1.0p-53;  // (0, 1]
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

  private:
    static std::uint64_t mix64(std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    std::mt19937_64 engine_;
};

}  // namespace gmagic

#endif  // GMAGIC_RNG_HPP_
