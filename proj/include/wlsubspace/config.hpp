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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wls {

enum class Experiment { MseVsSnr, MseVsN, ProbOptimalVsJ, ProbLmagVsJ, TheoryTable };

std::string_view to_string(Experiment e);
Experiment parse_experiment(std::string_view name);

/// Flat key = value experiment description.
///
/// MSE sweeps (mse_vs_snr, mse_vs_n, theory_table) use a single J; the
/// swept axis is snr_db or N and the other one must hold a single value.
/// Probability sweeps iterate over every J and snr_db and read `channels` as
/// the number of independent channel draws. Suboptimal correction uses a
/// coefficient index drawn uniformly per channel.
struct ExperimentConfig {
    Experiment experiment = Experiment::MseVsSnr;
    std::vector<int> J{5};
    double gamma2 = 1.0;
    int channels = 1000;
    int blocks_per_channel = 10;
    std::vector<int> N{100};
    std::vector<double> snr_db{10.0};
    std::vector<ScenarioKind> scenarios{ScenarioKind::Optimal};
    std::vector<int> K{1};
    std::optional<std::uint64_t> master_seed;
    std::string output_path;
    // Trials lost to eigensolver failures before a run is aborted.
    int max_solver_failures = 0;

    bool operator==(const ExperimentConfig&) const = default;
};

// Parses config text. Errors carry the offending key and line number.
// seed_override replaces master_seed before validation, so it can supply a
// missing key.
ExperimentConfig parse_config(std::string_view text,
                              std::optional<std::uint64_t> seed_override = std::nullopt);
ExperimentConfig load_config(const std::string& path,
                             std::optional<std::uint64_t> seed_override = std::nullopt);

// Inverse of parse_config; numbers are written in shortest round-trip form.
std::string format_config(const ExperimentConfig& cfg);
void write_config(const ExperimentConfig& cfg, const std::string& path);

// Checks cross-key constraints; parse_config calls it.
void validate_config(const ExperimentConfig& cfg);

// SNR in dB to noise variance (SNR = -10 log10 sigma2); +inf maps to 0.
double snr_to_sigma2(double snr_db);

// Shortest decimal that parses back to the same double.
std::string format_double(double x);

} // namespace wls
