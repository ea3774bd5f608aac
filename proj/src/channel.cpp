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
#include "wlsubspace/channel.hpp"

#include "wlsubspace/error.hpp"

#include <cmath>
#include <iostream>
#include <limits>

namespace wls {

namespace {

Index largest_index(const CVector& v) {
    Index best = 0;
    for (Index j = 1; j < v.size(); ++j)
        if (std::abs(v(j)) > std::abs(v(best))) best = j;
    return best;
}

} // namespace

ChannelRealization::ChannelRealization(CVector g, double gamma2)
    : g_(std::move(g)), gamma2_(gamma2) {
    if (g_.size() < 1) throw InvalidArgument("ChannelRealization: J must be >= 1");
    if (!(gamma2_ > 0.0) || !std::isfinite(gamma2_))
        throw InvalidArgument("ChannelRealization: gamma2 must be positive");
    if (!g_.allFinite()) throw InvalidArgument("ChannelRealization: non-finite coefficient");
    g_norm2_ = g_.squaredNorm();
    if (!(g_norm2_ > 0.0)) throw InvalidArgument("ChannelRealization: g must be nonzero");
    h_ = g_ / std::sqrt(g_norm2_);
    g_bar_ = to_real(g_);
    h_bar_ = to_real(h_);
    largest_ = largest_index(h_);
}

ReceivedBlock::ReceivedBlock(CMatrix samples, std::vector<int> symbols, double sigma2)
    : samples_(std::move(samples)), symbols_(std::move(symbols)), sigma2_(sigma2) {
    if (samples_.cols() < 1) throw InvalidArgument("ReceivedBlock: N must be >= 1");
    if (static_cast<Index>(symbols_.size()) != samples_.cols())
        throw InvalidArgument("ReceivedBlock: one symbol per sample required");
    if (!samples_.allFinite()) throw InvalidArgument("ReceivedBlock: non-finite sample");
    if (!(sigma2_ >= 0.0)) throw InvalidArgument("ReceivedBlock: sigma2 must be >= 0");
}

double ReceivedBlock::snr_db() const {
    if (sigma2_ == 0.0) return std::numeric_limits<double>::infinity();
    return -10.0 * std::log10(sigma2_);
}

RMatrix ReceivedBlock::real_samples() const { return to_real(samples_); }

ChannelRealization draw_channel(Index J, double gamma2, Stream& rng) {
    if (J < 1) throw InvalidArgument("draw_channel: J must be >= 1");
    if (!(gamma2 > 0.0) || !std::isfinite(gamma2))
        throw InvalidArgument("draw_channel: gamma2 must be positive");
    CVector g(J);
    for (;;) {
        for (Index j = 0; j < J; ++j) g(j) = rng.complex_normal(gamma2);
        if (g.squaredNorm() > 0.0) break;
        std::clog << "wlsubspace: degenerate channel draw (||g|| = 0), redrawing\n";
    }
    return ChannelRealization(std::move(g), gamma2);
}

ReceivedBlock draw_block(const ChannelRealization& ch, Index N, double sigma2, Stream& symbols,
                         Stream& noise) {
    if (N < 1) throw InvalidArgument("draw_block: N must be >= 1");
    if (!(sigma2 >= 0.0) || !std::isfinite(sigma2))
        throw InvalidArgument("draw_block: sigma2 must be finite and >= 0");
    const Index J = ch.size();
    const double sigma = std::sqrt(sigma2);
    CMatrix r(J, N);
    std::vector<int> b(static_cast<std::size_t>(N));
    for (Index i = 0; i < N; ++i) {
        b[static_cast<std::size_t>(i)] = (symbols() >> 63) ? 1 : -1;
        for (Index j = 0; j < J; ++j)
            r(j, i) = static_cast<double>(b[static_cast<std::size_t>(i)]) * ch.g()(j) +
                      sigma * noise.complex_normal(1.0);
    }
    return ReceivedBlock(std::move(r), std::move(b), sigma2);
}

ReceivedBlock draw_block(const ChannelRealization& ch, Index N, double sigma2, Stream& rng) {
    return draw_block(ch, N, sigma2, rng, rng);
}

CMatrix true_covariance(const ChannelRealization& ch, double sigma2) {
    const Index J = ch.size();
    CMatrix R = ch.g_norm2() * ch.h() * ch.h().adjoint();
    R += sigma2 * CMatrix::Identity(J, J);
    return R;
}

CMatrix pseudo_covariance(const ChannelRealization& ch) { return ch.g() * ch.g().transpose(); }

CMatrix augmented_covariance(const ChannelRealization& ch, double sigma2) {
    const Index J = ch.size();
    const CMatrix R = true_covariance(ch, sigma2);
    const CMatrix C = pseudo_covariance(ch);
    CMatrix A(2 * J, 2 * J);
    A.topLeftCorner(J, J) = R;
    A.topRightCorner(J, J) = C;
    A.bottomLeftCorner(J, J) = C.conjugate();
    A.bottomRightCorner(J, J) = R.conjugate();
    return A;
}

RMatrix true_real_covariance(const ChannelRealization& ch, double sigma2) {
    const Index n = 2 * ch.size();
    RMatrix R = ch.g_norm2() * ch.h_bar() * ch.h_bar().transpose();
    R += 0.5 * sigma2 * RMatrix::Identity(n, n);
    return R;
}

RVector to_real(const CVector& v) {
    RVector out(2 * v.size());
    out.head(v.size()) = v.real();
    out.tail(v.size()) = v.imag();
    return out;
}

RMatrix to_real(const CMatrix& columns) {
    const Index J = columns.rows();
    RMatrix out(2 * J, columns.cols());
    out.topRows(J) = columns.real();
    out.bottomRows(J) = columns.imag();
    return out;
}

CVector from_real(const RVector& v) {
    if (v.size() % 2 != 0) throw InvalidArgument("from_real: length must be even");
    const Index J = v.size() / 2;
    CVector out(J);
    for (Index j = 0; j < J; ++j) out(j) = cdouble(v(j), v(J + j));
    return out;
}

CMatrix psi_matrix(Index J) {
    const cdouble i1(0.0, 1.0);
    CMatrix P = CMatrix::Zero(2 * J, 2 * J);
    for (Index j = 0; j < J; ++j) {
        P(j, j) = 1.0;
        P(j, J + j) = i1;
        P(J + j, j) = 1.0;
        P(J + j, J + j) = -i1;
    }
    return P;
}

CVector psi_apply(const RVector& x) {
    if (x.size() % 2 != 0) throw InvalidArgument("psi_apply: length must be even");
    const CVector v = from_real(x);
    CVector out(x.size());
    out.head(v.size()) = v;
    out.tail(v.size()) = v.conjugate();
    return out;
}

CVector psi_adjoint(const CVector& y) {
    if (y.size() % 2 != 0) throw InvalidArgument("psi_adjoint: length must be even");
    const Index J = y.size() / 2;
    const cdouble i1(0.0, 1.0);
    CVector out(2 * J);
    out.head(J) = y.head(J) + y.tail(J);
    out.tail(J) = -i1 * y.head(J) + i1 * y.tail(J);
    return out;
}

} // namespace wls
