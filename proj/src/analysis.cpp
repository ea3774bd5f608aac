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
#include "wlsubspace/analysis.hpp"

#include "wlsubspace/error.hpp"
#include "wlsubspace/numerics.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <string>

namespace wls {

namespace {

constexpr double kMagTol = 1e-12;
constexpr double kUnitTol = 1e-8;

// sigma2 g2 + sigma2^2: per-dimension noise factor of the complex estimator.
double complex_factor(double sigma2, double g2) { return sigma2 * g2 + sigma2 * sigma2; }
// sigma2 g2 / 2 + sigma2^2 / 4: the real-domain counterpart.
double real_factor(double sigma2, double g2) { return 0.5 * sigma2 * g2 + 0.25 * sigma2 * sigma2; }

double conventional_optimal(int J, int N, double sigma2, double g2) {
    return complex_factor(sigma2, g2) * (J - 1) / (N * g2 * g2);
}

double wl_optimal(int J, int N, double sigma2, double g2) {
    return real_factor(sigma2, g2) * (2 * J - 1) / (N * g2 * g2);
}

bool is_unit_magnitude(double mag2) { return mag2 >= 1.0 - kMagTol; }

// N g2^2 m / (factor (1 - m)).
double wl_sign_snr(int N, double sigma2, double g2, double mag2) {
    return N * g2 * g2 * mag2 / (real_factor(sigma2, g2) * (1.0 - mag2));
}

void validate(const TheoryQuery& q) {
    if (q.J < 1) throw InvalidArgument("theory: J must be >= 1");
    if (q.N < 1) throw InvalidArgument("theory: N must be >= 1");
    if (!(q.sigma2 > 0.0) || !std::isfinite(q.sigma2))
        throw InvalidArgument("theory: sigma2 must be positive");
    if (!(q.g_norm2 > 0.0) || !std::isfinite(q.g_norm2))
        throw InvalidArgument("theory: g_norm2 must be positive");
    auto check_mag = [](const std::optional<double>& m, const char* name) {
        if (!m) throw InvalidArgument(std::string("theory: scenario requires ") + name);
        if (!(*m > 0.0) || *m > 1.0 + kMagTol)
            throw InvalidArgument(std::string("theory: ") + name + " must lie in (0, 1]");
    };
    switch (q.scenario.kind) {
    case ScenarioKind::Optimal: break;
    case ScenarioKind::Suboptimal: check_mag(q.h_ell_mag2, "h_ell_mag2"); break;
    case ScenarioKind::LargestMagnitude:
        check_mag(q.h_L_mag2, "h_L_mag2");
        if (*q.h_L_mag2 < 1.0 / q.J - kMagTol)
            throw InvalidArgument("theory: h_L_mag2 must be >= 1/J");
        break;
    case ScenarioKind::Training:
        if (q.scenario.pilots < 1) throw InvalidArgument("theory: training requires K >= 1");
        break;
    }
}

double conventional_mse(const TheoryQuery& q, TheoryVariant variant) {
    const double base = conventional_optimal(q.J, q.N, q.sigma2, q.g_norm2);
    const auto mode = variant == TheoryVariant::Approx ? CosineMode::Approx : CosineMode::Exact;
    switch (q.scenario.kind) {
    case ScenarioKind::Optimal: return base;
    case ScenarioKind::Suboptimal:
    case ScenarioKind::LargestMagnitude: {
        const bool largest = q.scenario.kind == ScenarioKind::LargestMagnitude;
        const double m = largest ? *q.h_L_mag2 : *q.h_ell_mag2;
        if (variant == TheoryVariant::Taylor) {
            return complex_factor(q.sigma2, q.g_norm2) * (q.J + 1.0 / (2.0 * m) - 1.5) /
                   (q.N * q.g_norm2 * q.g_norm2);
        }
        if (is_unit_magnitude(m)) return base;
        const double rho = suboptimal_rho(q.N, q.sigma2, q.g_norm2, m);
        return base + 2.0 * (1.0 - expected_cos(RiceanParam(rho), mode));
    }
    case ScenarioKind::Training: {
        const double rho = training_rho(q.scenario.pilots, q.sigma2, q.g_norm2);
        return base + 2.0 * (1.0 - expected_cos(RiceanParam(rho), mode));
    }
    }
    throw InvalidArgument("theory: unknown scenario");
}

double wl_mse(const TheoryQuery& q) {
    const double base = wl_optimal(q.J, q.N, q.sigma2, q.g_norm2);
    switch (q.scenario.kind) {
    case ScenarioKind::Optimal: return base;
    case ScenarioKind::Suboptimal:
    case ScenarioKind::LargestMagnitude: {
        const double m = q.scenario.kind == ScenarioKind::LargestMagnitude ? *q.h_L_mag2
                                                                            : *q.h_ell_mag2;
        if (is_unit_magnitude(m)) return base;
        // 4 - 4 Q(-x) written as 4 Q(x) to keep the tail
        return base + 4.0 * gaussian_q(std::sqrt(wl_sign_snr(q.N, q.sigma2, q.g_norm2, m)));
    }
    case ScenarioKind::Training:
        return base + 4.0 * prob_sign_error_training(q.g_norm2, q.scenario.pilots, q.sigma2);
    }
    throw InvalidArgument("theory: unknown scenario");
}

void require_unit(double norm, const char* fn) {
    if (std::abs(norm - 1.0) > kUnitTol)
        throw InvalidArgument(std::string(fn) + ": inputs must have unit norm");
}

template <class Matrix>
Matrix noise_basis(const Matrix& R) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(R);
    if (solver.info() != Eigen::Success)
        throw NumericalError("noise_subspace: eigendecomposition failed", 0);
    // All but the largest eigenvalue (last column) span the noise subspace.
    return solver.eigenvectors().leftCols(R.rows() - 1);
}

} // namespace

std::string_view to_string(Estimator e) {
    return e == Estimator::Conventional ? "conventional" : "wl";
}

std::string_view to_string(BoundsVariant v) {
    switch (v) {
    case BoundsVariant::HalfToOne: return "half_to_one";
    case BoundsVariant::OneToTwo: return "one_to_two";
    case BoundsVariant::SufficientCondition: return "sufficient_condition";
    }
    return "unknown";
}

TheoryQuery TheoryQuery::for_channel(Estimator estimator, const Scenario& scenario,
                                     const ChannelRealization& ch, int N, double sigma2) {
    TheoryQuery q;
    q.estimator = estimator;
    q.scenario = scenario;
    q.J = static_cast<int>(ch.size());
    q.N = N;
    q.sigma2 = sigma2;
    q.g_norm2 = ch.g_norm2();
    q.h_L_mag2 = std::norm(ch.h()(ch.largest()));
    if (scenario.kind == ScenarioKind::Suboptimal) {
        if (scenario.ell >= ch.size())
            throw InvalidArgument("TheoryQuery: coefficient index out of range");
        q.h_ell_mag2 = std::norm(ch.h()(scenario.ell));
    }
    return q;
}

double suboptimal_rho(int N, double sigma2, double g_norm2, double mag2) {
    return N * g_norm2 * g_norm2 * mag2 / (complex_factor(sigma2, g_norm2) * (1.0 - mag2));
}

double training_rho(int K, double sigma2, double g_norm2) { return K * g_norm2 / sigma2; }

double theory_mse(const TheoryQuery& q, TheoryVariant variant) {
    validate(q);
    if (variant == TheoryVariant::Taylor &&
        !(q.estimator == Estimator::Conventional &&
          q.scenario.kind == ScenarioKind::LargestMagnitude))
        throw InvalidArgument(
            "theory: Taylor form exists only for conventional largest-magnitude correction");
    return q.estimator == Estimator::Conventional ? conventional_mse(q, variant) : wl_mse(q);
}

double delta_mse_optimal(int J, int N, double sigma2, double g_norm2) {
    const double s4 = sigma2 * sigma2;
    return (-0.5 * sigma2 * g_norm2 + s4 * (0.5 * J - 0.75)) / (N * g_norm2 * g_norm2);
}

double delta_mse_lmag_simplified(int J, int N, double sigma2, double g_norm2, double h_L_mag2) {
    const double inv = 1.0 / (2.0 * h_L_mag2);
    return sigma2 / (N * g_norm2) * (inv - 1.0) +
           sigma2 * sigma2 / (N * g_norm2 * g_norm2) * (0.5 * J + inv - 1.25);
}

double delta_mse(const TheoryQuery& conventional, const TheoryQuery& wl, DeltaForm form) {
    if (conventional.estimator != Estimator::Conventional || wl.estimator != Estimator::WidelyLinear)
        throw InvalidArgument("delta_mse: expected a (conventional, wl) query pair");
    if (conventional.J != wl.J || conventional.N != wl.N || conventional.sigma2 != wl.sigma2 ||
        conventional.g_norm2 != wl.g_norm2)
        throw InvalidArgument("delta_mse: queries describe different settings");
    validate(conventional);
    validate(wl);
    const int J = conventional.J;
    const int N = conventional.N;
    const double s2 = conventional.sigma2;
    const double g2 = conventional.g_norm2;
    if (form == DeltaForm::Optimal) {
        if (conventional.scenario.kind != ScenarioKind::Optimal ||
            wl.scenario.kind != ScenarioKind::Optimal)
            throw InvalidArgument("delta_mse: optimal form needs optimal-scenario queries");
        return theory_mse(conventional) - theory_mse(wl);
    }
    if (conventional.scenario.kind != ScenarioKind::LargestMagnitude ||
        wl.scenario.kind != ScenarioKind::LargestMagnitude)
        throw InvalidArgument("delta_mse: largest-magnitude form needs largest-magnitude queries");
    if (*conventional.h_L_mag2 != *wl.h_L_mag2)
        throw InvalidArgument("delta_mse: queries disagree on h_L_mag2");
    if (form == DeltaForm::LargestMagnitudeSimplified)
        return delta_mse_lmag_simplified(J, N, s2, g2, *conventional.h_L_mag2);
    return theory_mse(conventional, TheoryVariant::Taylor) - theory_mse(wl);
}

double prob_wl_wins_optimal(int J, double sigma2, double gamma2) {
    if (J < 2) throw InvalidArgument("prob_wl_wins_optimal: J must be >= 2");
    if (!(sigma2 > 0.0) || !(gamma2 > 0.0))
        throw InvalidArgument("prob_wl_wins_optimal: variances must be positive");
    return reg_lower_gamma(sigma2 / gamma2 * (J - 1.5), J);
}

double prob_sign_error_training(double g_norm2, int K, double sigma2) {
    if (K < 1) throw InvalidArgument("prob_sign_error_training: K must be >= 1");
    if (!(sigma2 > 0.0) || !(g_norm2 > 0.0))
        throw InvalidArgument("prob_sign_error_training: g_norm2 and sigma2 must be positive");
    return gaussian_q(std::sqrt(2.0 * K * g_norm2 / sigma2));
}

FlaggedProbability prob_sign_error_unconditional(int J, int K, double gamma2, double sigma2,
                                                 SeriesForm form) {
    if (J < 1 || K < 1) throw InvalidArgument("prob_sign_error_unconditional: J, K must be >= 1");
    if (!(gamma2 > 0.0) || !(sigma2 > 0.0))
        throw InvalidArgument("prob_sign_error_unconditional: variances must be positive");
    const double kg = K * gamma2;
    const double mu = std::sqrt(kg / (kg + sigma2));
    const double t = sigma2 / (4.0 * (kg + sigma2));
    double sum = 0.0;
    double binom = 1.0; // C(2l, l)
    double power = 1.0; // t^l
    for (int l = 0; l < J; ++l) {
        sum += binom * (form == SeriesForm::Flat ? t : power);
        binom = binom * (2.0 * l + 1.0) * (2.0 * l + 2.0) / ((l + 1.0) * (l + 1.0));
        power *= t;
    }
    return {0.5 * (1.0 - mu * sum), kg / sigma2 > 1.0};
}

LmagBounds lmag_bounds(int J, double sigma2, double gamma2) {
    if (J < 2) throw InvalidArgument("lmag_bounds: J must be >= 2");
    if (!(sigma2 > 0.0) || !(gamma2 > 0.0))
        throw InvalidArgument("lmag_bounds: variances must be positive");
    const double x = sigma2 / gamma2;
    LmagBounds out;
    if (J == 2) {
        out.primary = {BoundsVariant::HalfToOne, 1.0 - std::exp(-0.5 * x), 1.0 - std::exp(-x),
                       std::nullopt};
        out.alternative = BoundsRecord{BoundsVariant::OneToTwo, 1.0 - std::exp(-x),
                                       1.0 - std::exp(-2.0 * x), std::nullopt};
        return out;
    }
    const double tail = J * std::pow(0.5, J - 1);
    out.primary = {BoundsVariant::SufficientCondition, 1.0 - tail * std::exp(-x), std::nullopt,
                   1.0 - tail};
    return out;
}

ComplexDecomposition decompose_error(const CVector& corrected, const CVector& truth) {
    if (corrected.size() != truth.size()) throw InvalidArgument("decompose_error: length mismatch");
    require_unit(corrected.norm(), "decompose_error");
    require_unit(truth.norm(), "decompose_error");
    const cdouble proj = truth.dot(corrected);
    if (std::abs(proj.imag()) > kUnitTol)
        throw InvalidArgument("decompose_error: estimate is not optimally phase corrected");
    ComplexDecomposition d;
    d.alpha = proj.real() - 1.0;
    d.q = corrected - proj.real() * truth;
    return d;
}

RealDecomposition decompose_error(const RVector& corrected, const RVector& truth) {
    if (corrected.size() != truth.size()) throw InvalidArgument("decompose_error: length mismatch");
    require_unit(corrected.norm(), "decompose_error");
    require_unit(truth.norm(), "decompose_error");
    const double proj = truth.dot(corrected);
    return {corrected - proj * truth, proj - 1.0};
}

std::variant<ComplexDecomposition, RealDecomposition>
error_decomposition(const CorrectedEstimate& corrected, const ChannelRealization& ch) {
    if (corrected.scenario.kind != ScenarioKind::Optimal)
        throw InvalidArgument("error_decomposition: requires an optimally corrected estimate");
    if (corrected.domain() == Domain::Complex) return decompose_error(corrected.complex(), ch.h());
    return decompose_error(corrected.real(), ch.h_bar());
}

CMatrix noise_subspace(const ChannelRealization& ch, double sigma2) {
    return noise_basis(true_covariance(ch, sigma2));
}

RMatrix real_noise_subspace(const ChannelRealization& ch, double sigma2) {
    return noise_basis(true_real_covariance(ch, sigma2));
}

CVector first_order_error(const CMatrix& sample_cov, const ChannelRealization& ch, double sigma2) {
    const CMatrix V = noise_subspace(ch, sigma2);
    const CMatrix dR = sample_cov - true_covariance(ch, sigma2);
    return V * (V.adjoint() * (dR * ch.h())) / ch.g_norm2();
}

RVector first_order_error(const RMatrix& sample_real_cov, const ChannelRealization& ch,
                          double sigma2) {
    const RMatrix V = real_noise_subspace(ch, sigma2);
    const RMatrix dR = sample_real_cov - true_real_covariance(ch, sigma2);
    return V * (V.transpose() * (dR * ch.h_bar())) / ch.g_norm2();
}

CMatrix predicted_error_covariance(const ChannelRealization& ch, double sigma2, int N) {
    const double g2 = ch.g_norm2();
    const CMatrix V = noise_subspace(ch, sigma2);
    return complex_factor(sigma2, g2) / (N * g2 * g2) * (V * V.adjoint());
}

RMatrix predicted_real_error_covariance(const ChannelRealization& ch, double sigma2, int N) {
    const double g2 = ch.g_norm2();
    const RMatrix V = real_noise_subspace(ch, sigma2);
    return real_factor(sigma2, g2) / (N * g2 * g2) * (V * V.transpose());
}

double predicted_paired_variance(const ChannelRealization& ch, double sigma2, int N, Index ell) {
    if (ell < 0 || ell >= ch.size())
        throw InvalidArgument("predicted_paired_variance: index out of range");
    const double g2 = ch.g_norm2();
    const double m = std::norm(ch.h()(ell));
    return real_factor(sigma2, g2) / (N * g2 * g2) * (m - m * m);
}

} // namespace wls
