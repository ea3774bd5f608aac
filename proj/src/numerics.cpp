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
#include "wlsubspace/numerics.hpp"

#include "wlsubspace/error.hpp"

#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace wls {

namespace {

void require_finite(double x, const char* fn) {
    if (!std::isfinite(x)) throw DomainError(std::string(fn) + ": argument must be finite");
}

} // namespace

RiceanParam::RiceanParam(double rho) : rho_(rho) {
    if (!std::isfinite(rho) || rho < 0.0)
        throw DomainError("RiceanParam: rho must be finite and >= 0");
}

double erf(double x) {
    require_finite(x, "erf");
    return std::erf(x);
}

double gaussian_q(double x) {
    require_finite(x, "gaussian_q");
    // erfc keeps relative accuracy in the upper tail where 1 - erf cancels.
    return 0.5 * std::erfc(x / std::numbers::sqrt2);
}

double bessel_i(int order, double x) {
    if (order != 0 && order != 1)
        throw InvalidArgument("bessel_i: order must be 0 or 1");
    require_finite(x, "bessel_i");
    if (x < 0.0) throw DomainError("bessel_i: x must be >= 0");
    double value = 0.0;
    try {
        value = boost::math::cyl_bessel_i(order, x);
    } catch (const std::overflow_error&) {
        throw OverflowError("bessel_i: I" + std::to_string(order) + "(" + std::to_string(x) +
                            ") overflows double");
    }
    if (!std::isfinite(value))
        throw OverflowError("bessel_i: I" + std::to_string(order) + "(" + std::to_string(x) +
                            ") overflows double");
    return value;
}

double reg_lower_gamma(double x, double s) {
    require_finite(x, "reg_lower_gamma");
    require_finite(s, "reg_lower_gamma");
    if (x < 0.0) throw DomainError("reg_lower_gamma: x must be >= 0");
    if (s <= 0.0) throw DomainError("reg_lower_gamma: s must be > 0");
    if (x == 0.0) return 0.0;
    return boost::math::gamma_p(s, x);
}

double ricean_phase_pdf(double theta, RiceanParam param) {
    require_finite(theta, "ricean_phase_pdf");
    if (theta < -std::numbers::pi || theta > std::numbers::pi)
        throw DomainError("ricean_phase_pdf: theta must lie in [-pi, pi]");
    const double rho = param.rho();
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    // e^{-rho} e^{rho cos^2} folded into e^{-rho sin^2}; 1 + erf(a) = erfc(-a).
    const double tail = std::erfc(-std::sqrt(rho) * c);
    const double body = std::sqrt(std::numbers::pi * rho) * c * std::exp(-rho * s * s) * tail;
    return (std::exp(-rho) + body) / (2.0 * std::numbers::pi);
}

double expected_cos(RiceanParam param, CosineMode mode) {
    const double rho = param.rho();
    if (mode == CosineMode::Approx) {
        if (rho == 0.0) throw DomainError("expected_cos: approximation undefined at rho = 0");
        return std::exp(-1.0 / (4.0 * rho));
    }
    if (rho == 0.0) return 0.0;
    if (rho > kExactCosineRhoLimit) return std::exp(-1.0 / (4.0 * rho));
    const double half = rho / 2.0;
    const double value = std::sqrt(std::numbers::pi * rho / 4.0) * std::exp(-half) *
                         (bessel_i(0, half) + bessel_i(1, half));
    return std::min(value, 1.0);
}

} // namespace wls
