// SPDX-License-Identifier: Apache-2.0
//
// wlsubspace: conventional and widely linear subspace channel estimation
// Copyright (C) 2026 The wlsubspace Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------
#pragma once

#include "wlsubspace/types.hpp"

#include <cstdint>
#include <limits>
#include <random>

namespace wls {

// What a substream is used for. Part of the substream key, so the same
// (channel, block) pair gets unrelated draws for each purpose.
enum class StreamPurpose : std::uint64_t {
    Channel = 1,
    Symbols = 2,
    Noise = 3,
    Pilots = 4,
};

/// Counter-based random stream.
///
/// The stream is fully determined by a 64-bit key; its i-th output is a
/// SplitMix64 hash of key + i. Keys for Monte Carlo substreams come from
/// `substream()`, which makes every draw a pure function of
/// (master seed, a, b, purpose) and therefore independent of scheduling.
/// Satisfies UniformRandomBitGenerator, so it plugs into <random>.
class Stream {
public:
    using result_type = std::uint64_t;

    explicit Stream(std::uint64_t key) noexcept : key_(key) {}

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept {
        return std::numeric_limits<result_type>::max();
    }

    result_type operator()() noexcept;

    double normal() { return normal_(*this); }
    double uniform() { return uniform_(*this); }
    // Uniform integer in [0, n).
    Index uniform_index(Index n);
    // Circularly symmetric complex Gaussian with E|z|^2 = variance.
    cdouble complex_normal(double variance);

    std::uint64_t key() const noexcept { return key_; }
    std::uint64_t position() const noexcept { return counter_; }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
    std::normal_distribution<double> normal_{0.0, 1.0};
    std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

std::uint64_t mix64(std::uint64_t x) noexcept;

Stream substream(std::uint64_t master_seed, std::uint64_t a, std::uint64_t b,
                 StreamPurpose purpose) noexcept;

} // namespace wls
