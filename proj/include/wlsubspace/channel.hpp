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

#include "wlsubspace/rng.hpp"
#include "wlsubspace/types.hpp"

#include <vector>

namespace wls {

/// One SIMO flat-fading channel: g and the quantities derived from it.
///
/// Immutable after construction. `largest` is the 0-based index of the
/// largest-magnitude coefficient (lowest index on ties).
class ChannelRealization {
public:
    // Throws InvalidArgument for an empty or all-zero g, or gamma2 <= 0.
    ChannelRealization(CVector g, double gamma2);

    const CVector& g() const noexcept { return g_; }
    const CVector& h() const noexcept { return h_; }
    const RVector& g_bar() const noexcept { return g_bar_; }
    const RVector& h_bar() const noexcept { return h_bar_; }
    double gamma2() const noexcept { return gamma2_; }
    double g_norm2() const noexcept { return g_norm2_; }
    Index largest() const noexcept { return largest_; }
    Index size() const noexcept { return g_.size(); }

private:
    CVector g_;
    double gamma2_;
    double g_norm2_;
    CVector h_;
    RVector g_bar_;
    RVector h_bar_;
    Index largest_;
};

/// N received vectors r(i) = b(i) g + n(i), stored as the columns of a
/// J x N matrix.
class ReceivedBlock {
public:
    ReceivedBlock(CMatrix samples, std::vector<int> symbols, double sigma2);

    const CMatrix& samples() const noexcept { return samples_; }
    const std::vector<int>& symbols() const noexcept { return symbols_; }
    double sigma2() const noexcept { return sigma2_; }
    double snr_db() const;
    Index size() const noexcept { return samples_.cols(); }
    Index antennas() const noexcept { return samples_.rows(); }
    // 2J x N matrix of stacked real/imaginary parts.
    RMatrix real_samples() const;

private:
    CMatrix samples_;
    std::vector<int> symbols_;
    double sigma2_;
};

/// i.i.d. CN(0, gamma2) coefficients. An all-zero draw is redrawn.
ChannelRealization draw_channel(Index J, double gamma2, Stream& rng);

/// Noise is drawn as unit-variance complex Gaussians scaled by sigma, so two
/// blocks from equal-keyed streams at different sigma2 share their noise
/// shape.
ReceivedBlock draw_block(const ChannelRealization& ch, Index N, double sigma2,
                         Stream& symbols, Stream& noise);
ReceivedBlock draw_block(const ChannelRealization& ch, Index N, double sigma2, Stream& rng);

// R = ||g||^2 h h^H + sigma2 I.
CMatrix true_covariance(const ChannelRealization& ch, double sigma2);
// C = E[r r^T] = g g^T.
CMatrix pseudo_covariance(const ChannelRealization& ch);
// [R C; C* R*] for the augmented vector [r; r*].
CMatrix augmented_covariance(const ChannelRealization& ch, double sigma2);
// ||g||^2 h_bar h_bar^T + (sigma2 / 2) I.
RMatrix true_real_covariance(const ChannelRealization& ch, double sigma2);

// [Re v; Im v].
RVector to_real(const CVector& v);
RMatrix to_real(const CMatrix& columns);
// Inverse of to_real. Throws InvalidArgument for odd length.
CVector from_real(const RVector& v);

// Psi = [I jI; I -jI], mapping real representations onto augmented vectors.
CMatrix psi_matrix(Index J);
CVector psi_apply(const RVector& x);
// Psi^H y.
CVector psi_adjoint(const CVector& y);

} // namespace wls
