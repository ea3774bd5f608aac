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
#include "wlsubspace/ambiguity.hpp"

#include "wlsubspace/error.hpp"

#include <cmath>
#include <numbers>

namespace wls {

namespace {

double wrap_angle(double a) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double w = std::fmod(a, two_pi);
    if (w < 0.0) w += two_pi;
    if (w >= two_pi) w = 0.0;
    return w;
}

PhaseCorrection phase_of(cdouble z) {
    if (z == cdouble(0.0, 0.0)) return {0.0, true};
    return {wrap_angle(std::arg(z)), false};
}

SignCorrection sign_of(double x) {
    if (x == 0.0) return {1, true};
    return {x > 0.0 ? 1 : -1, false};
}

void require_same_size(Index a, Index b, const char* fn) {
    if (a != b) throw InvalidArgument(std::string(fn) + ": length mismatch");
}

} // namespace

std::string_view to_string(ScenarioKind kind) {
    switch (kind) {
    case ScenarioKind::Optimal: return "optimal";
    case ScenarioKind::Suboptimal: return "suboptimal";
    case ScenarioKind::LargestMagnitude: return "largest_magnitude";
    case ScenarioKind::Training: return "training";
    }
    return "unknown";
}

ScenarioKind parse_scenario_kind(std::string_view name) {
    for (auto k : {ScenarioKind::Optimal, ScenarioKind::Suboptimal, ScenarioKind::LargestMagnitude,
                   ScenarioKind::Training})
        if (to_string(k) == name) return k;
    throw InvalidArgument("unknown scenario '" + std::string(name) + "'");
}

Scenario Scenario::suboptimal(Index ell) {
    if (ell < 0) throw InvalidArgument("Scenario: coefficient index must be >= 0");
    return {ScenarioKind::Suboptimal, ell, 0};
}

Scenario Scenario::training(int K) {
    if (K < 1) throw InvalidArgument("Scenario: pilot count K must be >= 1");
    return {ScenarioKind::Training, 0, K};
}

bool CorrectedEstimate::degenerate() const noexcept {
    return std::visit([](const auto& c) { return c.degenerate; }, correction);
}

const CVector& CorrectedEstimate::complex() const {
    if (const auto* v = std::get_if<CVector>(&vector)) return *v;
    throw InvalidArgument("CorrectedEstimate: estimate is in the real domain");
}

const RVector& CorrectedEstimate::real() const {
    if (const auto* v = std::get_if<RVector>(&vector)) return *v;
    throw InvalidArgument("CorrectedEstimate: estimate is in the complex domain");
}

PhaseCorrection optimal_phase(const CVector& raw, const CVector& h) {
    require_same_size(raw.size(), h.size(), "optimal_phase");
    return phase_of(raw.dot(h)); // Eigen's dot conjugates the left operand
}

PhaseCorrection suboptimal_phase(const CVector& raw, cdouble h_ell, Index ell) {
    if (ell < 0 || ell >= raw.size()) throw InvalidArgument("suboptimal_phase: index out of range");
    if (raw(ell) == cdouble(0.0, 0.0) || h_ell == cdouble(0.0, 0.0))
        throw DomainError("suboptimal_phase: phase of a zero coefficient is undefined");
    return phase_of(std::conj(raw(ell)) * h_ell);
}

Index largest_mag_index(const CVector& h) {
    if (h.size() < 1) throw InvalidArgument("largest_mag_index: empty vector");
    Index best = 0;
    for (Index j = 1; j < h.size(); ++j)
        if (std::norm(h(j)) > std::norm(h(best))) best = j;
    return best;
}

Index largest_mag_index(const RVector& h_bar) { return largest_mag_index(from_real(h_bar)); }

PilotBlock make_pilots(const ChannelRealization& ch, int K, double sigma2, Stream& rng) {
    if (K < 1) throw InvalidArgument("make_pilots: K must be >= 1");
    if (!(sigma2 >= 0.0) || !std::isfinite(sigma2))
        throw InvalidArgument("make_pilots: sigma2 must be finite and >= 0");
    const Index J = ch.size();
    const double sigma = std::sqrt(sigma2);
    CVector noise_sum = CVector::Zero(J);
    for (int k = 0; k < K; ++k)
        for (Index j = 0; j < J; ++j) noise_sum(j) += sigma * rng.complex_normal(1.0);
    return {ch.g() + noise_sum / static_cast<double>(K), K, sigma2};
}

PhaseCorrection training_phase(const CVector& raw, const PilotBlock& pilots) {
    require_same_size(raw.size(), pilots.averaged.size(), "training_phase");
    return phase_of(raw.dot(pilots.averaged));
}

SignCorrection optimal_sign(const RVector& raw, const RVector& h_bar) {
    require_same_size(raw.size(), h_bar.size(), "optimal_sign");
    return sign_of(raw.dot(h_bar));
}

SignCorrection suboptimal_sign(const RVector& raw, const RVector& h_bar, Index ell) {
    require_same_size(raw.size(), h_bar.size(), "suboptimal_sign");
    if (raw.size() % 2 != 0) throw InvalidArgument("suboptimal_sign: length must be even");
    const Index J = raw.size() / 2;
    if (ell < 0 || ell >= J) throw InvalidArgument("suboptimal_sign: index out of range");
    return sign_of(h_bar(ell) * raw(ell) + h_bar(J + ell) * raw(J + ell));
}

SignCorrection training_sign(const RVector& raw, const PilotBlock& pilots) {
    require_same_size(raw.size(), 2 * pilots.averaged.size(), "training_sign");
    return sign_of(raw.dot(pilots.real()));
}

namespace {

PhaseCorrection resolve_phase(const CVector& u, const Scenario& s, const ChannelRealization& ch,
                              const PilotBlock* pilots) {
    switch (s.kind) {
    case ScenarioKind::Optimal: return optimal_phase(u, ch.h());
    case ScenarioKind::Suboptimal:
    case ScenarioKind::LargestMagnitude: {
        const Index ell = s.kind == ScenarioKind::Suboptimal ? s.ell : ch.largest();
        if (ell >= ch.size()) throw InvalidArgument("apply: coefficient index out of range");
        try {
            return suboptimal_phase(u, ch.h()(ell), ell);
        } catch (const DomainError&) {
            return {0.0, true};
        }
    }
    case ScenarioKind::Training: return training_phase(u, *pilots);
    }
    throw InvalidArgument("apply: unknown scenario");
}

SignCorrection resolve_sign(const RVector& u, const Scenario& s, const ChannelRealization& ch,
                            const PilotBlock* pilots) {
    switch (s.kind) {
    case ScenarioKind::Optimal: return optimal_sign(u, ch.h_bar());
    case ScenarioKind::Suboptimal:
    case ScenarioKind::LargestMagnitude: {
        const Index ell = s.kind == ScenarioKind::Suboptimal ? s.ell : ch.largest();
        if (ell >= ch.size()) throw InvalidArgument("apply: coefficient index out of range");
        return suboptimal_sign(u, ch.h_bar(), ell);
    }
    case ScenarioKind::Training: return training_sign(u, *pilots);
    }
    throw InvalidArgument("apply: unknown scenario");
}

} // namespace

CorrectedEstimate apply(const RawEstimate& raw, const Scenario& scenario,
                        const ChannelRealization& ch, const PilotBlock* pilots) {
    if (scenario.kind == ScenarioKind::Training) {
        if (pilots == nullptr) throw InvalidArgument("apply: training scenario requires pilots");
        if (pilots->averaged.size() != ch.size())
            throw InvalidArgument("apply: pilot length does not match the channel");
    }
    if (scenario.kind == ScenarioKind::Suboptimal && scenario.ell >= ch.size())
        throw InvalidArgument("apply: suboptimal scenario requires an index in [0, J)");

    CorrectedEstimate out;
    out.scenario = scenario;
    if (raw.domain() == Domain::Complex) {
        const CVector& u = raw.complex();
        if (u.size() != ch.size()) throw InvalidArgument("apply: estimate length mismatch");
        const PhaseCorrection pc = resolve_phase(u, scenario, ch, pilots);
        out.vector = CVector(std::polar(1.0, pc.angle) * u);
        out.correction = pc;
    } else {
        const RVector& u = raw.real();
        if (u.size() != 2 * ch.size()) throw InvalidArgument("apply: estimate length mismatch");
        const SignCorrection sc = resolve_sign(u, scenario, ch, pilots);
        out.vector = RVector(static_cast<double>(sc.sign) * u);
        out.correction = sc;
    }
    return out;
}

double squared_error(const CorrectedEstimate& corrected, const ChannelRealization& ch) {
    if (corrected.domain() == Domain::Complex) {
        const CVector& v = corrected.complex();
        if (v.size() != ch.size()) throw InvalidArgument("squared_error: length mismatch");
        return (v - ch.h()).squaredNorm();
    }
    const RVector& v = corrected.real();
    if (v.size() != ch.h_bar().size()) throw InvalidArgument("squared_error: length mismatch");
    return (v - ch.h_bar()).squaredNorm();
}

} // namespace wls
