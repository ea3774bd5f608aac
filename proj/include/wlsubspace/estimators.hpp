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

#include "wlsubspace/channel.hpp"
#include "wlsubspace/types.hpp"

#include <variant>

namespace wls {

enum class Domain { Complex, Real };

/// Unit-norm principal eigenvector of a sample covariance, before any
/// ambiguity correction.
///
/// Orientation is canonical: a complex vector is rotated so its
/// largest-magnitude entry is real and positive, a real vector is flipped so
/// its largest-magnitude entry is positive (lowest index on ties).
/// `eigen_gap` is the distance to the second eigenvalue (0 for 1x1 input).
struct RawEstimate {
    std::variant<CVector, RVector> vector;
    double eigenvalue = 0.0;
    double eigen_gap = 0.0;

    Domain domain() const noexcept {
        return std::holds_alternative<CVector>(vector) ? Domain::Complex : Domain::Real;
    }
    // Throws InvalidArgument when the estimate lives in the other domain.
    const CVector& complex() const;
    const RVector& real() const;
};

// (1/N) sum r r^H, no bias correction.
CMatrix sample_covariance(const ReceivedBlock& block);
// (1/N) sum r_bar r_bar^T over the real representations.
RMatrix sample_real_covariance(const ReceivedBlock& block);

/// Principal eigenpair of a self-adjoint matrix.
///
/// Throws InvalidArgument if the input is not square or deviates from
/// self-adjointness by more than 1e-10 (relative to its largest entry), and
/// NumericalError if the solver fails or the eigen-residual exceeds
/// 1e-10 relative to max(|lambda|, largest entry).
RawEstimate principal_eigenvector(const CMatrix& m);
RawEstimate principal_eigenvector(const RMatrix& m);

RawEstimate conventional_estimate(const ReceivedBlock& block);
RawEstimate wl_estimate(const ReceivedBlock& block);

} // namespace wls
