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
#include "wlsubspace/estimators.hpp"
#include "wlsubspace/rng.hpp"
#include "wlsubspace/types.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace wls {

enum class ScenarioKind { Optimal, Suboptimal, LargestMagnitude, Training };

std::string_view to_string(ScenarioKind kind);
// Accepts the names produced by to_string. Throws InvalidArgument otherwise.
ScenarioKind parse_scenario_kind(std::string_view name);

/// Which side information resolves the phase / sign ambiguity.
///
/// Suboptimal carries the 0-based index of the known coefficient, Training
/// the number of +1 pilots.
struct Scenario {
    ScenarioKind kind = ScenarioKind::Optimal;
    Index ell = 0;
    int pilots = 0;

    static Scenario optimal() { return {ScenarioKind::Optimal, 0, 0}; }
    static Scenario suboptimal(Index ell);
    static Scenario largest_magnitude() { return {ScenarioKind::LargestMagnitude, 0, 0}; }
    static Scenario training(int K);

    friend bool operator==(const Scenario&, const Scenario&) = default;
};

/// Averaged pilot observation z_m = g + (1/K) sum n_k (all pilots +1).
struct PilotBlock {
    CVector averaged;
    int K = 0;
    double sigma2 = 0.0;

    RVector real() const { return to_real(averaged); }
};

struct PhaseCorrection {
    double angle = 0.0; // in [0, 2 pi)
    bool degenerate = false;
};

struct SignCorrection {
    int sign = 1;
    bool degenerate = false;
};

/// Estimate after ambiguity correction: e^{j angle} raw or sign * raw.
struct CorrectedEstimate {
    std::variant<CVector, RVector> vector;
    std::variant<PhaseCorrection, SignCorrection> correction;
    Scenario scenario;

    Domain domain() const noexcept {
        return std::holds_alternative<CVector>(vector) ? Domain::Complex : Domain::Real;
    }
    bool degenerate() const noexcept;
    const CVector& complex() const;
    const RVector& real() const;
};

// Angle of raw^H h, which minimizes ||e^{j theta} raw - h||. Flags raw _|_ h.
PhaseCorrection optimal_phase(const CVector& raw, const CVector& h);

// Angle of conj(raw_ell) h_ell. Throws DomainError if either factor is zero.
PhaseCorrection suboptimal_phase(const CVector& raw, cdouble h_ell, Index ell);

// argmax_j |h_j|, lowest index on ties. The real overload reads h_bar as
// (Re, Im) pairs (j, J + j).
Index largest_mag_index(const CVector& h);
Index largest_mag_index(const RVector& h_bar);

PilotBlock make_pilots(const ChannelRealization& ch, int K, double sigma2, Stream& rng);

// Angle of raw^H z_m. Flags a zero inner product.
PhaseCorrection training_phase(const CVector& raw, const PilotBlock& pilots);

// sgn(raw^T h_bar); +1 and flagged on exact orthogonality.
SignCorrection optimal_sign(const RVector& raw, const RVector& h_bar);

// sgn(h_bar_ell raw_ell + h_bar_{J+ell} raw_{J+ell}).
SignCorrection suboptimal_sign(const RVector& raw, const RVector& h_bar, Index ell);

// sgn(raw^T z_bar_m).
SignCorrection training_sign(const RVector& raw, const PilotBlock& pilots);

/// Resolve the ambiguity of `raw` according to `scenario`. Training needs
/// pilots. Degenerate cases (zero reference coefficient, orthogonality)
/// resolve to angle 0 / sign +1 and are flagged instead of thrown.
CorrectedEstimate apply(const RawEstimate& raw, const Scenario& scenario,
                        const ChannelRealization& ch, const PilotBlock* pilots = nullptr);

// ||corrected - h||^2 in the estimate's own domain (h or h_bar).
double squared_error(const CorrectedEstimate& corrected, const ChannelRealization& ch);

} // namespace wls
