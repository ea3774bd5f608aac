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
// Command-line front end. Talks to the library only through the C API.

#include "wlsubspace/wlsubspace.h"

#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

namespace {

enum Exit { kOk = 0, kOther = 1, kConfig = 2, kNumerical = 3 };

int exit_for(wls_status s) {
    switch (s) {
    case WLS_OK: return kOk;
    case WLS_CONFIG_ERROR: return kConfig;
    case WLS_NUMERICAL_ERROR: return kNumerical;
    default: return kOther;
    }
}

int report(wls_status s) {
    std::cerr << "error: " << wls_last_error() << '\n';
    return exit_for(s);
}

struct RunOptions {
    std::string config;
    std::string preset;
    std::optional<std::uint64_t> seed;
    std::string out;
    int threads = 1;
};

void add_run_options(CLI::App* cmd, RunOptions& o) {
    auto* cfg = cmd->add_option("--config", o.config, "Experiment config file");
    auto* pre = cmd->add_option("--preset", o.preset, "Built-in preset name");
    cfg->excludes(pre);
    cmd->add_option("--seed", o.seed, "Master seed (overrides the config)");
    cmd->add_option("--out", o.out, "CSV output path (default: config output_path, else stdout)");
    cmd->add_option("--threads", o.threads, "Worker threads (speed only)")
        ->check(CLI::PositiveNumber);
}

// Loads, runs and writes one experiment. `probability` selects which
// experiment family the subcommand accepts.
int run_experiment(const RunOptions& o, bool probability) {
    if (o.config.empty() == o.preset.empty()) {
        std::cerr << "error: exactly one of --config or --preset is required\n";
        return kConfig;
    }
    wls_config* cfg = nullptr;
    wls_status s = !o.config.empty()
                       ? (o.seed ? wls_config_load_seeded(o.config.c_str(), *o.seed, &cfg)
                                 : wls_config_load(o.config.c_str(), &cfg))
                       : wls_config_preset(o.preset.c_str(), &cfg);
    if (s != WLS_OK) return report(s);

    int is_prob = 0;
    wls_config_is_probability(cfg, &is_prob);
    if ((is_prob != 0) != probability) {
        std::cerr << "error: experiment belongs to the '" << (is_prob ? "prob" : "simulate")
                  << "' subcommand\n";
        wls_config_free(cfg);
        return kConfig;
    }
    if (o.seed) wls_config_set_seed(cfg, *o.seed);

    std::string out = o.out;
    if (out.empty()) {
        char* path = nullptr;
        wls_config_output_path(cfg, &path);
        out = path;
        wls_string_free(path);
    }

    wls_table* table = nullptr;
    s = wls_run(cfg, o.threads, &table);
    wls_config_free(cfg);
    if (s != WLS_OK) return report(s);
    if (wls_table_solver_failures(table) > 0)
        std::cerr << "warning: " << wls_table_solver_failures(table)
                  << " trials dropped after eigensolver failures\n";

    if (out.empty()) {
        char* csv = nullptr;
        s = wls_table_csv(table, &csv);
        if (s == WLS_OK) {
            std::cout << csv;
            wls_string_free(csv);
        }
    } else {
        s = wls_table_write(table, out.c_str());
    }
    wls_table_free(table);
    return s == WLS_OK ? kOk : report(s);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Conventional and widely linear subspace channel estimation"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(wls_version()));

    // theory
    auto* theory = app.add_subcommand("theory", "Evaluate the closed-form MSE for one channel");
    std::string estimator = "conventional";
    std::string scenario = "optimal";
    std::string variant = "exact";
    int J = 5, N = 100, K = 1;
    double snr_db = 10.0, g_norm2 = 5.0, h_ell_mag2 = -1.0, h_L_mag2 = -1.0;
    std::optional<double> sigma2;
    theory->add_option("--estimator", estimator, "conventional | wl")
        ->check(CLI::IsMember({"conventional", "wl"}));
    theory->add_option("--scenario", scenario, "optimal | suboptimal | largest_magnitude | training")
        ->check(CLI::IsMember({"optimal", "suboptimal", "largest_magnitude", "training"}));
    theory->add_option("--variant", variant, "exact | approx | taylor")
        ->check(CLI::IsMember({"exact", "approx", "taylor"}));
    theory->add_option("--J", J, "Number of antennas");
    theory->add_option("--N", N, "Block length");
    theory->add_option("--K", K, "Pilot count (training)");
    auto* snr_opt = theory->add_option("--snr-db", snr_db, "SNR in dB");
    theory->add_option("--sigma2", sigma2, "Noise variance (overrides --snr-db)")->excludes(snr_opt);
    theory->add_option("--g-norm2", g_norm2, "||g||^2");
    theory->add_option("--h-ell-mag2", h_ell_mag2, "|h_ell|^2 (suboptimal)");
    theory->add_option("--h-L-mag2", h_L_mag2, "|h_L|^2 (largest magnitude)");

    // simulate / prob
    RunOptions sim_opts, prob_opts;
    auto* simulate = app.add_subcommand("simulate", "Run an MSE sweep and write CSV");
    add_run_options(simulate, sim_opts);
    auto* prob = app.add_subcommand("prob", "Run a probability sweep and write CSV");
    add_run_options(prob, prob_opts);

    // adjudicate
    auto* adjudicate =
        app.add_subcommand("adjudicate", "Monte Carlo check of the competing closed-form variants");
    std::uint64_t adj_seed = 1;
    long draws = 1000000;
    int adj_threads = 1;
    std::string adj_out;
    adjudicate->add_option("--seed", adj_seed, "Master seed");
    adjudicate->add_option("--draws", draws, "Channel draws")->check(CLI::Range(2L, 1000000000L));
    adjudicate->add_option("--threads", adj_threads, "Worker threads")->check(CLI::PositiveNumber);
    adjudicate->add_option("--out", adj_out, "Report path (default: stdout)");

    // presets
    auto* presets = app.add_subcommand("presets", "List built-in presets");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kConfig;
    }

    if (*theory) {
        wls_theory_query q{};
        q.estimator = estimator == "wl" ? WLS_WIDELY_LINEAR : WLS_CONVENTIONAL;
        q.scenario = scenario == "suboptimal"          ? WLS_SUBOPTIMAL
                     : scenario == "largest_magnitude" ? WLS_LARGEST_MAGNITUDE
                     : scenario == "training"          ? WLS_TRAINING
                                                       : WLS_OPTIMAL;
        q.K = K;
        q.J = J;
        q.N = N;
        q.sigma2 = sigma2 ? *sigma2 : std::pow(10.0, -snr_db / 10.0);
        q.g_norm2 = g_norm2;
        q.h_ell_mag2 = h_ell_mag2;
        q.h_L_mag2 = h_L_mag2;
        const wls_variant v = variant == "approx"   ? WLS_APPROX
                              : variant == "taylor" ? WLS_TAYLOR
                                                    : WLS_EXACT;
        double mse = 0.0;
        const wls_status s = wls_theory_mse(&q, v, &mse);
        if (s != WLS_OK) return report(s);
        std::printf("%.17g\n", mse);
        return kOk;
    }
    if (*simulate) return run_experiment(sim_opts, false);
    if (*prob) return run_experiment(prob_opts, true);
    if (*adjudicate) {
        char* text = nullptr;
        wls_status s = wls_adjudicate(adj_seed, draws, adj_threads, &text);
        if (s != WLS_OK) return report(s);
        if (adj_out.empty()) {
            std::cout << text;
        } else {
            FILE* f = std::fopen(adj_out.c_str(), "wb");
            if (!f) {
                wls_string_free(text);
                std::cerr << "error: cannot open '" << adj_out << "'\n";
                return kOther;
            }
            std::fputs(text, f);
            std::fclose(f);
        }
        wls_string_free(text);
        return kOk;
    }
    if (*presets) {
        char* names = nullptr;
        const wls_status s = wls_preset_names(&names);
        if (s != WLS_OK) return report(s);
        std::cout << names;
        wls_string_free(names);
        return kOk;
    }
    return kOther;
}
