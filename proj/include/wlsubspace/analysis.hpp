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

#include "wlsubspace/ambiguity.hpp"
#include "wlsubspace/channel.hpp"
#include "wlsubspace/types.hpp"

#include <optional>
#include <string_view>
#include <variant>

namespace wls {

enum class Estimator { Conventional, WidelyLinear };

std::string_view to_string(Estimator e);

/// Which layer of approximation a closed form uses.
///
/// Exact: Bessel form of E[cos] for phase-error penalties.
/// Approx: exp(-1/(4 rho)) in place of E[cos].
/// Taylor: first-order expansion of the largest-magnitude phase penalty
///         (conventional estimator, LargestMagnitude only).
/// Sign-correction and optimal-scenario formulas have a single form; Approx
/// returns the same value as Exact for them.
enum class TheoryVariant { Exact, Approx, Taylor };

/// Arguments of the closed-form MSE predictors for one fixed channel.
///
/// h_ell_mag2 is |h_ell|^2 for Suboptimal, h_L_mag2 is |h_L|^2 for
/// LargestMagnitude; the pilot count comes from scenario.pilots.
struct TheoryQuery {
    Estimator estimator = Estimator::Conventional;
    Scenario scenario;
    int J = 1;
    int N = 1;
    double sigma2 = 1.0;
    double g_norm2 = 1.0;
    std::optional<double> h_ell_mag2;
    std::optional<double> h_L_mag2;

    // Fills every channel functional from `ch`; ell comes from the scenario.
    static TheoryQuery for_channel(Estimator estimator, const Scenario& scenario,
                                   const ChannelRealization& ch, int N, double sigma2);
};

double theory_mse(const TheoryQuery& q, TheoryVariant variant = TheoryVariant::Exact);

// Concentration of the phase error of the ell-th corrected coefficient.
double suboptimal_rho(int N, double sigma2, double g_norm2, double mag2);
// Concentration K ||g||^2 / sigma2 of the pilot-based phase error.
double training_rho(int K, double sigma2, double g_norm2);

enum class DeltaForm {
    Optimal,
    // Taylor-form conventional MSE minus the WL largest-magnitude MSE,
    // including the sign-error term.
    LargestMagnitudeFull,
    // Same, with the WL sign-error term dropped.
    LargestMagnitudeSimplified,
};

/// Conventional minus WL theory MSE for two queries describing the same
/// channel. Positive means the WL estimator wins. Throws InvalidArgument on
/// mismatched queries.
double delta_mse(const TheoryQuery& conventional, const TheoryQuery& wl, DeltaForm form);

// Direct forms used by the probability sweeps.
double delta_mse_optimal(int J, int N, double sigma2, double g_norm2);
double delta_mse_lmag_simplified(int J, int N, double sigma2, double g_norm2, double h_L_mag2);

// P{||g||^2 < sigma2 (J - 3/2)} for i.i.d. CN(0, gamma2) coefficients.
double prob_wl_wins_optimal(int J, double sigma2, double gamma2);

// Probability that pilot-based sign correction disagrees with the optimal sign.
double prob_sign_error_training(double g_norm2, int K, double sigma2);

/// Two candidate forms of the channel-averaged pilot sign-error probability
/// 1/2 [1 - mu sum_{l<J} C(2l, l) t^p(l)], mu = sqrt(K g2 / (K g2 + s2)),
/// t = s2 / (4 (K g2 + s2)).
/// Flat: p(l) = 1 for every l. Powered: p(l) = l.
enum class SeriesForm { Flat, Powered };

struct FlaggedProbability {
    double value = 0.0;
    // False when K gamma2 / sigma2 <= 1, outside the stated validity range.
    bool valid = true;
};

FlaggedProbability prob_sign_error_unconditional(int J, int K, double gamma2, double sigma2,
                                                 SeriesForm form);

enum class BoundsVariant {
    // J = 2: (1 - e^{-x/2}, 1 - e^{-x}), x = sigma2 / gamma2.
    HalfToOne,
    // J = 2: (1 - e^{-x}, 1 - e^{-2x}).
    OneToTwo,
    // J >= 3: lower bound from 2|g_L|^2 - ||g||^2 <= sigma2.
    SufficientCondition,
};

std::string_view to_string(BoundsVariant v);

struct BoundsRecord {
    BoundsVariant variant = BoundsVariant::SufficientCondition;
    double lower = 0.0;
    std::optional<double> upper;
    // 1 - J (1/2)^{J-1}, SNR-independent; J >= 3 only.
    std::optional<double> looser_lower;
};

/// Bounds on P{WL beats conventional} under largest-magnitude correction.
/// For J = 2 both candidate pairs are returned (HalfToOne first); for J >= 3
/// a single SufficientCondition record.
struct LmagBounds {
    BoundsRecord primary;
    std::optional<BoundsRecord> alternative;
};

LmagBounds lmag_bounds(int J, double sigma2, double gamma2);

/// corrected = truth + q + alpha truth with q _|_ truth.
struct ComplexDecomposition {
    CVector q;
    double alpha = 0.0;
};

struct RealDecomposition {
    RVector q;
    double mu = 0.0;
};

// Both arguments must be unit norm (1e-8); the complex form additionally
// requires truth^H corrected to be real, as it is after optimal correction.
ComplexDecomposition decompose_error(const CVector& corrected, const CVector& truth);
RealDecomposition decompose_error(const RVector& corrected, const RVector& truth);

// Requires an Optimal-scenario estimate.
std::variant<ComplexDecomposition, RealDecomposition>
error_decomposition(const CorrectedEstimate& corrected, const ChannelRealization& ch);

// Orthonormal basis of the sigma2 eigenspace of the exact covariance
// (J x (J-1)), and of the sigma2/2 eigenspace of the real covariance
// (2J x (2J-1)).
CMatrix noise_subspace(const ChannelRealization& ch, double sigma2);
RMatrix real_noise_subspace(const ChannelRealization& ch, double sigma2);

// First-order error (1/||g||^2) V V^H (R_hat - R) h of the optimally
// corrected estimate.
CVector first_order_error(const CMatrix& sample_cov, const ChannelRealization& ch, double sigma2);
RVector first_order_error(const RMatrix& sample_real_cov, const ChannelRealization& ch,
                          double sigma2);

// E[q q^H] ~ (sigma2 g2 + sigma2^2) / (N g2^2) V V^H.
CMatrix predicted_error_covariance(const ChannelRealization& ch, double sigma2, int N);
// E[q_bar q_bar^T] ~ (sigma2 g2 / 2 + sigma2^2 / 4) / (N g2^2) V_r V_r^T.
RMatrix predicted_real_error_covariance(const ChannelRealization& ch, double sigma2, int N);
// Variance of q_bar_ell h_bar_ell + q_bar_{J+ell} h_bar_{J+ell}.
double predicted_paired_variance(const ChannelRealization& ch, double sigma2, int N, Index ell);

} // namespace wls
