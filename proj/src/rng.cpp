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
#include "wlsubspace/rng.hpp"

#include "wlsubspace/error.hpp"

#include <cmath>

namespace wls {

std::uint64_t mix64(std::uint64_t x) noexcept {
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return x;
}

Stream::result_type Stream::operator()() noexcept {
    ++counter_;
    return mix64(key_ + counter_ * 0x9e3779b97f4a7c15ULL);
}

Index Stream::uniform_index(Index n) {
    if (n < 1) throw InvalidArgument("uniform_index: n must be >= 1");
    std::uniform_int_distribution<Index> dist(0, n - 1);
    return dist(*this);
}

cdouble Stream::complex_normal(double variance) {
    const double s = std::sqrt(variance / 2.0);
    const double re = normal();
    const double im = normal();
    return {s * re, s * im};
}

Stream substream(std::uint64_t master_seed, std::uint64_t a, std::uint64_t b,
                 StreamPurpose purpose) noexcept {
    std::uint64_t k = mix64(master_seed ^ 0x6a09e667f3bcc909ULL);
    k = mix64(k ^ (a + 0x3c6ef372fe94f82bULL));
    k = mix64(k ^ (b + 0xa54ff53a5f1d36f1ULL));
    k = mix64(k ^ static_cast<std::uint64_t>(purpose));
    return Stream(k);
}

} // namespace wls
