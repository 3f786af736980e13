// Copyright 2026 The qsd Authors
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

#ifndef QSD_RANDOM_H
#define QSD_RANDOM_H

#include <concepts>
#include <cstdint>

namespace qsd {

/// Anything that hands out uniform doubles in [0, 1), one per call.
template <typename R>
concept UniformSource = requires(R &r) {
    { r.uniform() } -> std::convertible_to<double>;
};

/// SplitMix64 (Steele, Lea, Flood). Small, fast, and trivially portable, which
/// is what makes trial streams reproducible across implementations.
class SplitMix64 {
   public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Top 53 bits of the next output scaled by 2^-53.
    double uniform() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

   private:
    uint64_t state_;
};

/// Seed of the independent substream used by trial `trial_index`: the first
/// SplitMix64 output for state (master_seed XOR trial_index).
inline uint64_t trial_seed(uint64_t master_seed, uint64_t trial_index) {
    return SplitMix64(master_seed ^ trial_index).next();
}

}  // namespace qsd

#endif  // QSD_RANDOM_H
