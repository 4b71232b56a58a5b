// Copyright 2026 The gatemonlab Authors
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

#ifndef GATEMONLAB_RANDOM_HPP
#define GATEMONLAB_RANDOM_HPP

#include <cmath>
#include <cstdint>
#include <random>

#include "gatemonlab/constants.hpp"

namespace gatemonlab {

// Finalizer of splitmix64, used to derive independent per-point streams from
// (seed, index) so that sweep points can be evaluated in any order or in
// parallel without changing the emitted bytes.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Deterministic RNG wrapper. std::mt19937_64 output is fully specified by
// the standard; the uniform/normal transformations below avoid
// std::uniform_real_distribution / std::normal_distribution, whose exact
// output sequences are implementation-defined. Identical seeds therefore
// reproduce identical streams bit-for-bit on any conforming platform.
class DeterministicRng {
  public:
    explicit DeterministicRng(std::uint64_t seed) : gen_(seed) {}

    static DeterministicRng for_point(std::uint64_t seed, std::uint64_t point_index) {
        return DeterministicRng(splitmix64(seed ^ splitmix64(point_index + 1)));
    }

    std::uint64_t bits() { return gen_(); }

    // Uniform in (0, 1], 53-bit mantissa.
    double uniform01() { return static_cast<double>((gen_() >> 11) + 1) * 0x1.0p-53; }

    // Standard normal via Box-Muller on the deterministic uniforms.
    double normal() {
        if (have_cached_) {
            have_cached_ = false;
            return cached_;
        }
        const double u1 = uniform01();
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        cached_ = r * std::sin(kTwoPi * u2);
        have_cached_ = true;
        return r * std::cos(kTwoPi * u2);
    }

  private:
    std::mt19937_64 gen_;
    double cached_ = 0.0;
    bool have_cached_ = false;
};

}  // namespace gatemonlab

#endif  // GATEMONLAB_RANDOM_HPP
