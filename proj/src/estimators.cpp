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
#include "wlsubspace/estimators.hpp"

#include "wlsubspace/error.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace wls {

namespace {

constexpr double kSelfAdjointTol = 1e-10;
constexpr double kResidualTol = 1e-10;

template <class Vec>
Index largest_entry(const Vec& v) {
    Index best = 0;
    for (Index j = 1; j < v.size(); ++j)
        if (std::abs(v(j)) > std::abs(v(best))) best = j;
    return best;
}

void canonicalize(CVector& v) {
    const Index k = largest_entry(v);
    const cdouble pivot = v(k);
    if (std::abs(pivot) == 0.0) return;
    v *= std::conj(pivot) / std::abs(pivot);
    v(k) = std::abs(v(k));
}

void canonicalize(RVector& v) {
    if (v(largest_entry(v)) < 0.0) v = -v;
}

template <class Matrix>
RawEstimate principal_pair(const Matrix& m) {
    if (m.rows() != m.cols() || m.rows() < 1)
        throw InvalidArgument("principal_eigenvector: matrix must be square and nonempty");
    if (!m.allFinite()) throw InvalidArgument("principal_eigenvector: non-finite entry");
    const double scale = std::max(m.cwiseAbs().maxCoeff(), 1.0);
    const double asym = (m - m.adjoint()).cwiseAbs().maxCoeff();
    if (asym > kSelfAdjointTol * scale)
        throw InvalidArgument("principal_eigenvector: matrix is not self-adjoint (deviation " +
                              std::to_string(asym) + ")");

    Eigen::SelfAdjointEigenSolver<Matrix> solver(m);
    const Index n = m.rows();
    if (solver.info() != Eigen::Success) {
        const auto limit = static_cast<std::size_t>(
            Eigen::SelfAdjointEigenSolver<Matrix>::m_maxIterations * n);
        throw NumericalError("principal_eigenvector: solver did not converge within " +
                                 std::to_string(limit) + " iterations",
                             limit);
    }
    // Eigen sorts eigenvalues in increasing order.
    const double lambda = solver.eigenvalues()(n - 1);
    Eigen::Matrix<typename Matrix::Scalar, Eigen::Dynamic, 1> v = solver.eigenvectors().col(n - 1);
    v.normalize();
    canonicalize(v);

    const double residual = (m * v - lambda * v).norm();
    if (residual > kResidualTol * std::max({std::abs(lambda), m.cwiseAbs().maxCoeff(),
                                            std::numeric_limits<double>::min()}))
        throw NumericalError("principal_eigenvector: eigen-residual " + std::to_string(residual) +
                                 " above tolerance",
                             0);

    RawEstimate out;
    out.vector = std::move(v);
    out.eigenvalue = lambda;
    out.eigen_gap = n > 1 ? lambda - solver.eigenvalues()(n - 2) : 0.0;
    return out;
}

} // namespace

const CVector& RawEstimate::complex() const {
    if (const auto* v = std::get_if<CVector>(&vector)) return *v;
    throw InvalidArgument("RawEstimate: estimate is in the real domain");
}

const RVector& RawEstimate::real() const {
    if (const auto* v = std::get_if<RVector>(&vector)) return *v;
    throw InvalidArgument("RawEstimate: estimate is in the complex domain");
}

CMatrix sample_covariance(const ReceivedBlock& block) {
    const CMatrix& r = block.samples();
    CMatrix R = CMatrix::Zero(r.rows(), r.rows());
    R.selfadjointView<Eigen::Lower>().rankUpdate(r, 1.0 / static_cast<double>(r.cols()));
    return R.selfadjointView<Eigen::Lower>();
}

RMatrix sample_real_covariance(const ReceivedBlock& block) {
    const RMatrix r = block.real_samples();
    RMatrix R = RMatrix::Zero(r.rows(), r.rows());
    R.selfadjointView<Eigen::Lower>().rankUpdate(r, 1.0 / static_cast<double>(r.cols()));
    return R.selfadjointView<Eigen::Lower>();
}

RawEstimate principal_eigenvector(const CMatrix& m) { return principal_pair(m); }

RawEstimate principal_eigenvector(const RMatrix& m) { return principal_pair(m); }

RawEstimate conventional_estimate(const ReceivedBlock& block) {
    return principal_eigenvector(sample_covariance(block));
}

RawEstimate wl_estimate(const ReceivedBlock& block) {
    return principal_eigenvector(sample_real_covariance(block));
}

} // namespace wls
