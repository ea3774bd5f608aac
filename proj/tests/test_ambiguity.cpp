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
#include "oracles.hpp"

#include "wlsubspace/ambiguity.hpp"
#include "wlsubspace/analysis.hpp"
#include "wlsubspace/error.hpp"
#include "wlsubspace/numerics.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

using namespace wls;

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

ChannelRealization fixed_channel(Index J = 5, std::uint64_t seed = 31) {
    Stream s = substream(seed, 0, 0, StreamPurpose::Channel);
    return draw_channel(J, 1.0, s);
}

// Channel with a prescribed ||g||^2.
ChannelRealization scaled_channel(double g_norm2, Index J = 5) {
    const ChannelRealization base = fixed_channel(J);
    return ChannelRealization(base.h() * std::sqrt(g_norm2), 1.0);
}

RawEstimate raw_complex(const CVector& v) {
    RawEstimate r;
    r.vector = v;
    return r;
}

RawEstimate raw_real(const RVector& v) {
    RawEstimate r;
    r.vector = v;
    return r;
}

CVector random_unit(Index J, Stream& s) {
    CVector v(J);
    for (Index j = 0; j < J; ++j) v(j) = s.complex_normal(1.0);
    return v.normalized();
}

double angle_distance(double a, double b) {
    const double d = std::fmod(std::abs(a - b), two_pi);
    return std::min(d, two_pi - d);
}

ReceivedBlock block_for(const ChannelRealization& ch, int N, double s2, int b, std::uint64_t seed) {
    Stream sy = substream(seed, 0, b, StreamPurpose::Symbols);
    Stream no = substream(seed, 0, b, StreamPurpose::Noise);
    return draw_block(ch, N, s2, sy, no);
}

} // namespace

TEST_CASE("scenario names round-trip") {
    for (auto k : {ScenarioKind::Optimal, ScenarioKind::Suboptimal, ScenarioKind::LargestMagnitude,
                   ScenarioKind::Training})
        CHECK(parse_scenario_kind(to_string(k)) == k);
    CHECK_THROWS_AS(parse_scenario_kind("best"), InvalidArgument);
    CHECK_THROWS_AS(Scenario::training(0), InvalidArgument);
    CHECK_THROWS_AS(Scenario::suboptimal(-1), InvalidArgument);
}

TEST_CASE("optimal_phase: aligned and rotated inputs") {
    const ChannelRealization ch = fixed_channel();
    CHECK(optimal_phase(ch.h(), ch.h()).angle == doctest::Approx(0.0).epsilon(1e-15));
    for (double phi : {0.3, 1.0, 2.5, -2.0, 3.1}) {
        const CVector raw = std::polar(1.0, phi) * ch.h();
        const double expect = std::fmod(two_pi - std::fmod(phi + two_pi, two_pi), two_pi);
        CHECK(angle_distance(optimal_phase(raw, ch.h()).angle, expect) < 1e-12);
    }
    CHECK_THROWS_AS(optimal_phase(ch.h(), CVector::Zero(3)), InvalidArgument);
}

TEST_CASE("optimal_phase: brute-force grid minimizer") {
    Stream s(1234);
    for (int t = 0; t < 5; ++t) {
        const CVector u = random_unit(5, s);
        const CVector h = random_unit(5, s);
        const double grid = oracle::grid_min_angle(u, h, 1000000);
        CHECK(angle_distance(optimal_phase(u, h).angle, grid) <= 1e-5);
    }
}

TEST_CASE("optimal corrections minimize the distance (grid check)") {
    const ChannelRealization ch = fixed_channel();
    for (int b = 0; b < 20; ++b) {
        const ReceivedBlock blk = block_for(ch, 50, 0.3, b, 8);
        const RawEstimate c = conventional_estimate(blk);
        const double best = squared_error(apply(c, Scenario::optimal(), ch), ch);
        for (int i = 0; i < 720; ++i) {
            const double th = two_pi * i / 720;
            CHECK(best <= (std::polar(1.0, th) * c.complex() - ch.h()).squaredNorm() + 1e-15);
        }
        const RawEstimate w = wl_estimate(blk);
        const CorrectedEstimate wc = apply(w, Scenario::optimal(), ch);
        CHECK(squared_error(wc, ch) <= (-wc.real() - ch.h_bar()).squaredNorm());
    }
}

TEST_CASE("suboptimal_phase: defining properties") {
    const ChannelRealization ch = fixed_channel();
    CHECK(suboptimal_phase(ch.h(), ch.h()(2), 2).angle == doctest::Approx(0.0).epsilon(1e-15));
    Stream s(77);
    for (int t = 0; t < 50; ++t) {
        const CVector u = random_unit(5, s);
        for (Index ell = 0; ell < 5; ++ell) {
            const PhaseCorrection pc = suboptimal_phase(u, ch.h()(ell), ell);
            const cdouble corrected = std::polar(1.0, pc.angle) * u(ell);
            CHECK(angle_distance(std::arg(corrected), std::arg(ch.h()(ell))) <= 1e-12);
        }
    }
    // single coefficient: suboptimal and optimal agree
    CVector h1(1), u1(1);
    h1 << std::polar(1.0, 0.4);
    u1 << std::polar(1.0, -1.1);
    CHECK(angle_distance(suboptimal_phase(u1, h1(0), 0).angle, optimal_phase(u1, h1).angle) <
          1e-14);
    CVector z = ch.h();
    z(1) = 0.0;
    CHECK_THROWS_AS(suboptimal_phase(z, ch.h()(1), 1), DomainError);
    CHECK_THROWS_AS(suboptimal_phase(z, ch.h()(1), 7), InvalidArgument);
}

TEST_CASE("apply: zero reference coefficient is flagged, not thrown") {
    CVector g(3);
    g << 1.0, 0.0, cdouble(0.0, 2.0);
    const ChannelRealization ch(g, 1.0);
    const CorrectedEstimate ce = apply(raw_complex(ch.h()), Scenario::suboptimal(1), ch);
    CHECK(ce.degenerate());
    CHECK(std::get<PhaseCorrection>(ce.correction).angle == 0.0);
    const CorrectedEstimate ok = apply(raw_complex(ch.h()), Scenario::suboptimal(0), ch);
    CHECK_FALSE(ok.degenerate());
    CHECK_THROWS_AS(apply(raw_complex(ch.h()), Scenario::suboptimal(3), ch), InvalidArgument);
    CHECK_THROWS_AS(apply(raw_complex(ch.h()), Scenario::training(1), ch), InvalidArgument);
}

TEST_CASE("largest_mag_index: examples and linear-scan oracle") {
    CVector h(2);
    h << 0.6, 0.8;
    CHECK(largest_mag_index(h) == 1); // 0-based
    CHECK(largest_mag_index(CVector(CVector::Constant(4, cdouble(0.5, 0.0)))) == 0);
    CVector mixed(3);
    mixed << cdouble(0.0, 0.5), cdouble(0.5, 0.0), cdouble(-0.5, 0.0);
    CHECK(largest_mag_index(mixed) == 0);
    Stream s(5);
    for (int t = 0; t < 200; ++t) {
        const CVector v = random_unit(7, s);
        Index best = 0;
        for (Index j = 0; j < 7; ++j)
            if (std::abs(v(j)) > std::abs(v(best))) best = j;
        CHECK(largest_mag_index(v) == best);
        CHECK(largest_mag_index(to_real(v)) == best);
    }
    const ChannelRealization ch = fixed_channel();
    CHECK(ch.largest() == largest_mag_index(ch.h()));
}

TEST_CASE("make_pilots: noiseless, determinism, averaging variance") {
    const ChannelRealization ch = fixed_channel();
    Stream a(10);
    CHECK(make_pilots(ch, 3, 0.0, a).averaged == ch.g());
    Stream c(99), d(99);
    CHECK(make_pilots(ch, 4, 0.5, c).averaged == make_pilots(ch, 4, 0.5, d).averaged);
    CHECK_THROWS_AS(make_pilots(ch, 0, 0.5, c), InvalidArgument);
    CHECK_THROWS_AS(make_pilots(ch, 1, -0.5, c), InvalidArgument);

    const int draws = 100000;
    for (int K : {1, 4}) {
        const double s2 = 0.8;
        Eigen::VectorXd var = Eigen::VectorXd::Zero(ch.size());
        for (int t = 0; t < draws; ++t) {
            Stream st = substream(3, t, K, StreamPurpose::Pilots);
            const CVector e = make_pilots(ch, K, s2, st).averaged - ch.g();
            var += e.cwiseAbs2();
        }
        var /= draws;
        for (Index j = 0; j < ch.size(); ++j) CHECK(std::abs(var(j) - s2 / K) / (s2 / K) <= 0.03);
    }
}

TEST_CASE("training_phase: noiseless pilots give the optimal phase") {
    const ChannelRealization ch = fixed_channel();
    Stream s(4), ps(8);
    for (int t = 0; t < 20; ++t) {
        const CVector u = random_unit(5, s);
        const PilotBlock p = make_pilots(ch, 1, 0.0, ps);
        CHECK(angle_distance(training_phase(u, p).angle, optimal_phase(u, ch.h()).angle) < 1e-13);
    }
}

TEST_CASE("training_phase: phase error follows the Ricean law") {
    // raw = h so that the concentration is exactly K ||g||^2 / sigma2.
    const double g2 = 5.0, s2 = 0.5;
    const int K = 1, trials = 100000;
    const ChannelRealization ch = scaled_channel(g2);
    const double rho = K * g2 / s2;
    std::vector<double> eps(trials);
    double cos_sum = 0.0;
    for (int t = 0; t < trials; ++t) {
        Stream st = substream(17, t, 0, StreamPurpose::Pilots);
        const PilotBlock p = make_pilots(ch, K, s2, st);
        double e = training_phase(ch.h(), p).angle;
        if (e > std::numbers::pi) e -= two_pi;
        eps[t] = -e; // the correction undoes the error
        cos_sum += std::cos(e);
    }
    std::sort(eps.begin(), eps.end());
    // CDF of the library density by cumulative trapezoid on a fine grid
    const int grid = 20000;
    double cdf = 0.0, sup = 0.0;
    double prev = ricean_phase_pdf(-std::numbers::pi, RiceanParam(rho));
    std::size_t idx = 0;
    for (int i = 1; i <= grid; ++i) {
        const double th = -std::numbers::pi + two_pi * i / grid;
        const double cur = ricean_phase_pdf(std::min(th, std::numbers::pi), RiceanParam(rho));
        cdf += 0.5 * (prev + cur) * two_pi / grid;
        prev = cur;
        while (idx < eps.size() && eps[idx] <= th) ++idx;
        sup = std::max(sup, std::abs(double(idx) / trials - cdf));
    }
    CHECK(sup <= 0.01);
    const double ec = expected_cos(RiceanParam(rho), CosineMode::Exact);
    CHECK(std::abs(cos_sum / trials - ec) / ec <= 0.01);
}

TEST_CASE("optimal_sign: aligned, flipped and paired with the phase") {
    const ChannelRealization ch = fixed_channel();
    CHECK(optimal_sign(ch.h_bar(), ch.h_bar()).sign == 1);
    CHECK(optimal_sign(-ch.h_bar(), ch.h_bar()).sign == -1);
    const SignCorrection zero = optimal_sign(RVector::Zero(10), ch.h_bar());
    CHECK(zero.sign == 1);
    CHECK(zero.degenerate);
    Stream s(6);
    for (int t = 0; t < 10000; ++t) {
        const CVector u = random_unit(5, s);
        const double theta = std::arg(u.dot(ch.h()));
        CHECK(optimal_sign(to_real(u), ch.h_bar()).sign == (std::cos(theta) > 0 ? 1 : -1));
    }
}

TEST_CASE("suboptimal_sign: properties") {
    const ChannelRealization ch = fixed_channel();
    for (Index ell = 0; ell < 5; ++ell) CHECK(suboptimal_sign(ch.h_bar(), ch.h_bar(), ell).sign == 1);
    Stream s(12);
    CVector h1(1);
    h1 << std::polar(1.0, 2.0);
    for (int t = 0; t < 100; ++t) {
        const RVector u = to_real(random_unit(1, s));
        CHECK(suboptimal_sign(u, to_real(h1), 0).sign == optimal_sign(u, to_real(h1)).sign);
    }
    CHECK_THROWS_AS(suboptimal_sign(RVector::Zero(9), RVector::Zero(9), 0), InvalidArgument);
    CHECK_THROWS_AS(suboptimal_sign(ch.h_bar(), ch.h_bar(), 5), InvalidArgument);
}

TEST_CASE("suboptimal_sign: agreement with the optimal sign (1e5 trials)") {
    const ChannelRealization ch = fixed_channel();
    // low SNR and short blocks so the agreement rate is well below one
    const int N = 10, trials = 100000;
    const double s2 = 1.0, g2 = ch.g_norm2();
    // weakest coefficient, where sign errors are most frequent
    Index ell = 0;
    ch.h().cwiseAbs2().minCoeff(&ell);
    const double m = std::norm(ch.h()(ell));
    long agree = 0;
    for (int t = 0; t < trials; ++t) {
        const RawEstimate w = wl_estimate(block_for(ch, N, s2, t, 4321));
        agree += suboptimal_sign(w.real(), ch.h_bar(), ell).sign ==
                 optimal_sign(w.real(), ch.h_bar()).sign;
    }
    const double factor = s2 * g2 / 2 + s2 * s2 / 4;
    const double predicted = gaussian_q(-std::sqrt(N * g2 * g2 * m / (factor * (1 - m))));
    MESSAGE("|h_ell|^2 = " << m << ", agreement " << double(agree) / trials << " vs " << predicted);
    CHECK(std::abs(double(agree) / trials - predicted) <= 0.01);
}

TEST_CASE("training_sign: noiseless, error rate and tail") {
    const ChannelRealization ch = scaled_channel(2.0);
    Stream ps(3);
    CHECK(training_sign(ch.h_bar(), make_pilots(ch, 1, 0.0, ps)).sign ==
          optimal_sign(ch.h_bar(), ch.h_bar()).sign);
    CHECK(training_sign(-ch.h_bar(), make_pilots(ch, 1, 0.0, ps)).sign == -1);

    long errors = 0;
    const int trials = 1000000;
    for (int t = 0; t < trials; ++t) {
        Stream st = substream(5, t, 1, StreamPurpose::Pilots);
        errors += training_sign(ch.h_bar(), make_pilots(ch, 1, 1.0, st)).sign != 1;
    }
    const double q2 = gaussian_q(2.0);
    CHECK(std::abs(double(errors) / trials - q2) / q2 <= 0.10);

    long rare = 0;
    for (int t = 0; t < 100000; ++t) {
        Stream st = substream(5, t, 25, StreamPurpose::Pilots);
        rare += training_sign(ch.h_bar(), make_pilots(ch, 25, 1.0, st)).sign != 1;
    }
    CHECK(rare == 0);
}

TEST_CASE("training: shared pilots give b_hat = b_o sgn(cos eps)") {
    const ChannelRealization ch = fixed_channel();
    for (int t = 0; t < 2000; ++t) {
        const ReceivedBlock blk = block_for(ch, 20, 0.5, t, 91);
        const RawEstimate c = conventional_estimate(blk);
        Stream st = substream(91, 0, t, StreamPurpose::Pilots);
        const PilotBlock p = make_pilots(ch, 1, 2.0, st);
        const double theta_o = optimal_phase(c.complex(), ch.h()).angle;
        const double eps = training_phase(c.complex(), p).angle - theta_o;
        const CVector h_o = std::polar(1.0, theta_o) * c.complex();
        for (double flip : {1.0, -1.0}) {
            const RVector real_raw = flip * to_real(h_o);
            const int b_o = optimal_sign(real_raw, ch.h_bar()).sign;
            const int b_hat = training_sign(real_raw, p).sign;
            CHECK(b_hat == b_o * (std::cos(eps) > 0 ? 1 : -1));
        }
    }
}

TEST_CASE("apply: unit norm, identity cases and noiseless training") {
    const ChannelRealization ch = fixed_channel();
    CHECK(squared_error(apply(raw_complex(ch.h()), Scenario::optimal(), ch), ch) == 0.0);
    CHECK(squared_error(apply(raw_real(ch.h_bar()), Scenario::optimal(), ch), ch) == 0.0);
    Stream ps(1);
    const PilotBlock clean = make_pilots(ch, 1, 0.0, ps);
    for (int b = 0; b < 50; ++b) {
        const ReceivedBlock blk = block_for(ch, 40, 0.4, b, 5);
        Stream pst = substream(5, 0, b, StreamPurpose::Pilots);
        const PilotBlock noisy = make_pilots(ch, 2, 0.4, pst);
        for (const RawEstimate& raw : {conventional_estimate(blk), wl_estimate(blk)}) {
            const CorrectedEstimate opt = apply(raw, Scenario::optimal(), ch);
            const CorrectedEstimate tr = apply(raw, Scenario::training(1), ch, &clean);
            CHECK(std::abs(squared_error(opt, ch) - squared_error(tr, ch)) < 1e-13);
            for (const Scenario& sc : {Scenario::optimal(), Scenario::suboptimal(3),
                                       Scenario::largest_magnitude(), Scenario::training(2)}) {
                const CorrectedEstimate ce = apply(raw, sc, ch, &noisy);
                const double norm = ce.domain() == Domain::Complex ? ce.complex().norm()
                                                                   : ce.real().norm();
                CHECK(std::abs(norm - 1.0) <= 1e-12);
                CHECK(ce.scenario == sc);
            }
        }
    }
}
