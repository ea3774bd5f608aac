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

namespace wls {

/// Concentration parameter of a Ricean phase law: the squared mean over the
/// variance of the proper complex Gaussian whose angle is observed.
class RiceanParam {
public:
    explicit RiceanParam(double rho);
    double rho() const noexcept { return rho_; }

private:
    double rho_;
};

enum class CosineMode { Exact, Approx };

// Above this concentration the Bessel form of E[cos] is replaced by
// exp(-1/(4 rho)); e^{-rho/2} and I_k(rho/2) are evaluated separately and
// run out of range beyond it.
inline constexpr double kExactCosineRhoLimit = 700.0;

double erf(double x);

// Gaussian tail probability Q(x) = P{Z > x}, Z standard normal.
double gaussian_q(double x);

/// Modified Bessel function of the first kind, order 0 or 1, for x >= 0.
/// Throws OverflowError when the value exceeds double range.
double bessel_i(int order, double x);

/// Regularized lower incomplete gamma G(x, s) = P(s, x), i.e. the CDF at x
/// of a unit-scale Gamma(s) variable.
double reg_lower_gamma(double x, double s);

/// Density of the angle of m + w, w ~ CN(0, v), m > 0, with rho = m^2 / v.
/// theta must lie in [-pi, pi].
double ricean_phase_pdf(double theta, RiceanParam param);

/// E[cos(theta)] under the Ricean phase law. Exact mode uses the Bessel
/// closed form (approximation above kExactCosineRhoLimit); Approx mode
/// returns exp(-1/(4 rho)) and rejects rho == 0.
double expected_cos(RiceanParam param, CosineMode mode);

} // namespace wls
