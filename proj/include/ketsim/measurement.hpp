// Copyright 2026 The ketsim Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Outcome distributions and seeded cumulative-probability sampling.
 */

#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "ketsim/state.hpp"

namespace ketsim {

struct Outcome {
    BasisState basis;
    double probability;
};

/// Squared-magnitude probabilities of a normalized state, in ascending
/// basis-index order so cumulative sampling is deterministic.
struct OutcomeDistribution {
    std::vector<Outcome> entries;
};

/**
 * @brief Seedable pseudo-random source of uniform doubles in [0, 1).
 *
 * The engine is the standard 64-bit Mersenne twister and the uniform mappings
 * are spelled out here, so the same seed yields the identical draw sequence
 * on every platform. A single stream must not be shared across threads.
 */
class RandomStream {
  public:
    explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

    /// Uniform double in [0, 1), 53 random bits.
    double next_double() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Uniform integer in [lo, hi], inclusive, by unbiased rejection.
    std::uint64_t next_int(std::uint64_t lo, std::uint64_t hi) {
        if (lo > hi) {
            throw std::invalid_argument("RandomStream: empty integer range");
        }
        const std::uint64_t span = hi - lo + 1;
        if (span == 0) { // full 64-bit range
            return engine_();
        }
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t raw = engine_();
        while (raw >= limit) {
            raw = engine_();
        }
        return lo + raw % span;
    }

  private:
    std::mt19937_64 engine_;
};

/// Outcome probabilities |amplitude|^2 of a state normalized within 1e-9.
inline OutcomeDistribution distribution(const StateVector &v) {
    if (std::abs(norm(v) - 1.0) > 1e-9) {
        throw std::invalid_argument("distribution: state is not normalized");
    }
    OutcomeDistribution dist;
    dist.entries.reserve(v.term_count());
    for (const auto &[index, amp] : v.terms()) {
        dist.entries.push_back({BasisState(v.width(), index), std::norm(amp)});
    }
    return dist;
}

/// First entry whose cumulative probability reaches `u`; the last entry
/// absorbs any floating-point shortfall at u close to 1.
inline const Outcome &pick_outcome(const OutcomeDistribution &dist, double u) {
    if (dist.entries.empty()) {
        throw std::invalid_argument("pick_outcome: empty distribution");
    }
    double cumulative = 0.0;
    for (const auto &entry : dist.entries) {
        cumulative += entry.probability;
        if (u <= cumulative) {
            return entry;
        }
    }
    return dist.entries.back();
}

/// Draws one uniform from `rng` (exactly one) and measures the state.
inline BasisState sample(const StateVector &v, RandomStream &rng) {
    const OutcomeDistribution dist = distribution(v);
    return pick_outcome(dist, rng.next_double()).basis;
}

} // namespace ketsim
