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

#include "wlsubspace/analysis.hpp"
#include "wlsubspace/config.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace wls {

/// One (grid point, estimator, scenario) cell of an MSE sweep.
/// K is 0 for non-training scenarios. theory_* are averages of the closed
/// forms over the same channels; empirical columns are NaN in theory_table.
struct SummaryRow {
    double x = 0.0;
    Estimator estimator = Estimator::Conventional;
    ScenarioKind scenario = ScenarioKind::Optimal;
    int K = 0;
    double empirical_mse = 0.0;
    double theory_exact = 0.0;
    double theory_approx = 0.0;
    double std_error = 0.0;
    long trials = 0;
};

/// One (J, SNR) cell of a probability sweep. Missing values are NaN.
struct ProbRow {
    int J = 0;
    double snr_db = 0.0;
    double p_empirical = 0.0;
    double p_theory = 0.0;
    double bound_lower = 0.0;
    double bound_upper = 0.0;
    double bound_loose = 0.0;
    long trials = 0;
};

struct MseSweep {
    std::vector<SummaryRow> rows;
    long solver_failures = 0;
};

inline constexpr std::string_view kMseCsvHeader =
    "x,estimator,scenario,K,empirical_mse,theory_exact,theory_approx,std_error,trials";
inline constexpr std::string_view kProbCsvHeader =
    "J,snr_db,p_empirical,p_theory,bound_lower,bound_upper,bound_loose,trials";

// Runs fn(0..count-1) on `threads` workers. If any call throws, the
// exception from the lowest index is rethrown after all workers stop.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& fn);

// Experiments mse_vs_snr, mse_vs_n and theory_table. Throws NumericalError
// when more than max_solver_failures trials fail.
MseSweep run_mse_sweep(const ExperimentConfig& cfg, int threads = 1);

// Experiments prob_optimal_vs_j and prob_lmag_vs_j.
std::vector<ProbRow> run_prob_sweep(const ExperimentConfig& cfg, int threads = 1);

/// Squared errors of one paired trial, in row order of the sweep for one
/// grid point (conventional rows first). Recomputes serially what the
/// sweep accumulates, for pairing checks.
struct TrialErrors {
    std::vector<double> errors;
    bool solver_failed = false;
};
TrialErrors run_trial(const ExperimentConfig& cfg, int channel, int block, std::size_t grid_point);

/// Channel c of an MSE sweep and the 0-based reference index its Suboptimal
/// rows use; identical for every grid point.
struct SweepChannel {
    ChannelRealization channel;
    Index ell = 0;
};
SweepChannel sweep_channel(const ExperimentConfig& cfg, int c);

std::string mse_csv(const std::vector<SummaryRow>& rows);
std::string prob_csv(const std::vector<ProbRow>& rows);
void emit_csv(const std::vector<SummaryRow>& rows, const std::string& path);
void emit_csv(const std::vector<ProbRow>& rows, const std::string& path);
void write_text(const std::string& path, const std::string& text);

// Dispatches on cfg.experiment and returns the CSV text.
std::string run_to_csv(const ExperimentConfig& cfg, int threads, long* solver_failures = nullptr);

std::vector<std::string> preset_names();
// Config text of a built-in preset; throws ConfigError (key "preset").
std::string preset_text(std::string_view name);
ExperimentConfig preset(std::string_view name);

/// Monte Carlo adjudication of the two pilot sign-error series and of the
/// two candidate J = 2 bound pairs.
struct SeriesCase {
    int J = 0;
    int K = 0;
    double sigma2 = 0.0;
    double mc_mean = 0.0;
    double mc_std_error = 0.0;
    double flat = 0.0;
    double powered = 0.0;
    bool flat_matches = false;
    bool powered_matches = false;
};

struct BoundCase {
    double snr_db = 0.0;
    double p_empirical = 0.0;
    double std_error = 0.0;
    BoundsRecord half_to_one;
    BoundsRecord one_to_two;
    bool half_to_one_holds = false;
    bool one_to_two_holds = false;
};

struct AdjudicationReport {
    long draws = 0;
    std::vector<SeriesCase> series;
    std::vector<BoundCase> bounds;
    // "flat", "powered", "both" or "neither".
    std::string series_verdict;
    // "half_to_one", "one_to_two", "both" or "neither".
    std::string bounds_verdict;
};

AdjudicationReport run_adjudication(std::uint64_t master_seed, long draws, int threads = 1);
std::string format_report(const AdjudicationReport& report);

} // namespace wls
