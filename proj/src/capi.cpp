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
#include "wlsubspace/wlsubspace.h"

#include "wlsubspace/analysis.hpp"
#include "wlsubspace/config.hpp"
#include "wlsubspace/error.hpp"
#include "wlsubspace/harness.hpp"

#include <cmath>
#include <cstring>
#include <limits>
#include <memory>
#include <new>
#include <string>

struct wls_config {
    wls::ExperimentConfig cfg;
};

struct wls_table {
    std::string csv;
    std::size_t rows = 0;
    long solver_failures = 0;
};

namespace {

thread_local std::string g_error;
thread_local std::string g_error_key;

wls_status fail(wls_status code, const char* what, const std::string& key = {}) {
    g_error = what;
    g_error_key = key;
    return code;
}

// Runs fn and maps library exceptions onto status codes.
template <class Fn>
wls_status guarded(Fn&& fn) {
    try {
        fn();
        return WLS_OK;
    } catch (const wls::ConfigError& e) {
        return fail(WLS_CONFIG_ERROR, e.what(), e.key());
    } catch (const wls::InvalidArgument& e) {
        return fail(WLS_INVALID_ARGUMENT, e.what());
    } catch (const wls::DomainError& e) {
        return fail(WLS_DOMAIN_ERROR, e.what());
    } catch (const wls::OverflowError& e) {
        return fail(WLS_OVERFLOW, e.what());
    } catch (const wls::NumericalError& e) {
        return fail(WLS_NUMERICAL_ERROR, e.what());
    } catch (const wls::IoError& e) {
        return fail(WLS_IO_ERROR, e.what());
    } catch (const std::bad_alloc&) {
        return fail(WLS_INTERNAL_ERROR, "out of memory");
    } catch (const std::exception& e) {
        return fail(WLS_INTERNAL_ERROR, e.what());
    } catch (...) {
        return fail(WLS_INTERNAL_ERROR, "unknown error");
    }
}

char* dup(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void require(const void* p, const char* name) {
    if (p == nullptr) throw wls::InvalidArgument(std::string(name) + " is null");
}

wls::ScenarioKind kind_of(wls_scenario s) {
    switch (s) {
    case WLS_OPTIMAL: return wls::ScenarioKind::Optimal;
    case WLS_SUBOPTIMAL: return wls::ScenarioKind::Suboptimal;
    case WLS_LARGEST_MAGNITUDE: return wls::ScenarioKind::LargestMagnitude;
    case WLS_TRAINING: return wls::ScenarioKind::Training;
    }
    throw wls::InvalidArgument("unknown scenario code");
}

wls::TheoryQuery to_query(const wls_theory_query& q) {
    wls::TheoryQuery t;
    t.estimator = q.estimator == WLS_WIDELY_LINEAR ? wls::Estimator::WidelyLinear
                                                   : wls::Estimator::Conventional;
    if (q.estimator != WLS_CONVENTIONAL && q.estimator != WLS_WIDELY_LINEAR)
        throw wls::InvalidArgument("unknown estimator code");
    t.scenario.kind = kind_of(q.scenario);
    t.scenario.pilots = q.K;
    t.J = q.J;
    t.N = q.N;
    t.sigma2 = q.sigma2;
    t.g_norm2 = q.g_norm2;
    if (q.h_ell_mag2 >= 0.0) t.h_ell_mag2 = q.h_ell_mag2;
    if (q.h_L_mag2 >= 0.0) t.h_L_mag2 = q.h_L_mag2;
    return t;
}

} // namespace

extern "C" {

const char* wls_version(void) { return "1.0.0"; }
const char* wls_last_error(void) { return g_error.c_str(); }
const char* wls_last_error_key(void) { return g_error_key.c_str(); }
void wls_string_free(char* s) { delete[] s; }

wls_status wls_config_load(const char* path, wls_config** out) {
    return guarded([&] {
        require(path, "path");
        require(out, "out");
        *out = new wls_config{wls::load_config(path)};
    });
}

wls_status wls_config_load_seeded(const char* path, uint64_t seed, wls_config** out) {
    return guarded([&] {
        require(path, "path");
        require(out, "out");
        *out = new wls_config{wls::load_config(path, seed)};
    });
}

wls_status wls_config_parse(const char* text, wls_config** out) {
    return guarded([&] {
        require(text, "text");
        require(out, "out");
        *out = new wls_config{wls::parse_config(text)};
    });
}

wls_status wls_config_preset(const char* name, wls_config** out) {
    return guarded([&] {
        require(name, "name");
        require(out, "out");
        *out = new wls_config{wls::preset(name)};
    });
}

wls_status wls_preset_names(char** out) {
    return guarded([&] {
        require(out, "out");
        std::string s;
        for (const auto& n : wls::preset_names()) s += n + "\n";
        *out = dup(s);
    });
}

wls_status wls_config_set_seed(wls_config* cfg, uint64_t seed) {
    return guarded([&] {
        require(cfg, "cfg");
        cfg->cfg.master_seed = seed;
    });
}

wls_status wls_config_set(wls_config* cfg, const char* key, const char* value) {
    return guarded([&] {
        require(cfg, "cfg");
        require(key, "key");
        require(value, "value");
        // Rewrite the formatted config with the key replaced and re-parse, so
        // the value goes through the same validation as a file.
        const std::string k(key);
        std::string text;
        const std::string formatted = wls::format_config(cfg->cfg);
        std::size_t start = 0;
        while (start < formatted.size()) {
            const std::size_t end = formatted.find('\n', start);
            const std::string line = formatted.substr(start, end - start);
            if (line.compare(0, k.size() + 3, k + " = ") != 0) text += line + "\n";
            start = end + 1;
        }
        text += k + " = " + value + "\n";
        cfg->cfg = wls::parse_config(text);
    });
}

wls_status wls_config_format(const wls_config* cfg, char** out) {
    return guarded([&] {
        require(cfg, "cfg");
        require(out, "out");
        *out = dup(wls::format_config(cfg->cfg));
    });
}

wls_status wls_config_write(const wls_config* cfg, const char* path) {
    return guarded([&] {
        require(cfg, "cfg");
        require(path, "path");
        wls::write_config(cfg->cfg, path);
    });
}

wls_status wls_config_output_path(const wls_config* cfg, char** out) {
    return guarded([&] {
        require(cfg, "cfg");
        require(out, "out");
        *out = dup(cfg->cfg.output_path);
    });
}

wls_status wls_config_is_probability(const wls_config* cfg, int* out) {
    return guarded([&] {
        require(cfg, "cfg");
        require(out, "out");
        const auto e = cfg->cfg.experiment;
        *out = e == wls::Experiment::ProbOptimalVsJ || e == wls::Experiment::ProbLmagVsJ;
    });
}

void wls_config_free(wls_config* cfg) { delete cfg; }

wls_status wls_run(const wls_config* cfg, int threads, wls_table** out) {
    return guarded([&] {
        require(cfg, "cfg");
        require(out, "out");
        auto t = std::make_unique<wls_table>();
        t->csv = wls::run_to_csv(cfg->cfg, threads, &t->solver_failures);
        std::size_t lines = 0;
        for (char c : t->csv) lines += c == '\n';
        t->rows = lines > 0 ? lines - 1 : 0;
        *out = t.release();
    });
}

size_t wls_table_rows(const wls_table* t) { return t ? t->rows : 0; }
long wls_table_solver_failures(const wls_table* t) { return t ? t->solver_failures : 0; }

wls_status wls_table_csv(const wls_table* t, char** out) {
    return guarded([&] {
        require(t, "table");
        require(out, "out");
        *out = dup(t->csv);
    });
}

wls_status wls_table_write(const wls_table* t, const char* path) {
    return guarded([&] {
        require(t, "table");
        require(path, "path");
        wls::write_text(path, t->csv);
    });
}

void wls_table_free(wls_table* t) { delete t; }

wls_status wls_theory_mse(const wls_theory_query* q, wls_variant variant, double* out) {
    return guarded([&] {
        require(q, "query");
        require(out, "out");
        wls::TheoryVariant v;
        switch (variant) {
        case WLS_EXACT: v = wls::TheoryVariant::Exact; break;
        case WLS_APPROX: v = wls::TheoryVariant::Approx; break;
        case WLS_TAYLOR: v = wls::TheoryVariant::Taylor; break;
        default: throw wls::InvalidArgument("unknown variant code");
        }
        *out = wls::theory_mse(to_query(*q), v);
    });
}

wls_status wls_delta_mse_optimal(int J, int N, double sigma2, double g_norm2, double* out) {
    return guarded([&] {
        require(out, "out");
        wls::TheoryQuery c;
        c.J = J;
        c.N = N;
        c.sigma2 = sigma2;
        c.g_norm2 = g_norm2;
        wls::TheoryQuery w = c;
        w.estimator = wls::Estimator::WidelyLinear;
        *out = wls::delta_mse(c, w, wls::DeltaForm::Optimal);
    });
}

wls_status wls_delta_mse_lmag(int J, int N, double sigma2, double g_norm2, double h_L_mag2,
                              int full, double* out) {
    return guarded([&] {
        require(out, "out");
        wls::TheoryQuery c;
        c.scenario = wls::Scenario::largest_magnitude();
        c.J = J;
        c.N = N;
        c.sigma2 = sigma2;
        c.g_norm2 = g_norm2;
        c.h_L_mag2 = h_L_mag2;
        wls::TheoryQuery w = c;
        w.estimator = wls::Estimator::WidelyLinear;
        *out = wls::delta_mse(c, w,
                              full ? wls::DeltaForm::LargestMagnitudeFull
                                   : wls::DeltaForm::LargestMagnitudeSimplified);
    });
}

wls_status wls_prob_wl_wins_optimal(int J, double sigma2, double gamma2, double* out) {
    return guarded([&] {
        require(out, "out");
        *out = wls::prob_wl_wins_optimal(J, sigma2, gamma2);
    });
}

wls_status wls_prob_sign_error_training(double g_norm2, int K, double sigma2, double* out) {
    return guarded([&] {
        require(out, "out");
        *out = wls::prob_sign_error_training(g_norm2, K, sigma2);
    });
}

wls_status wls_prob_sign_error_unconditional(int J, int K, double gamma2, double sigma2,
                                             int powered, double* out, int* valid) {
    return guarded([&] {
        require(out, "out");
        const auto r = wls::prob_sign_error_unconditional(
            J, K, gamma2, sigma2, powered ? wls::SeriesForm::Powered : wls::SeriesForm::Flat);
        *out = r.value;
        if (valid) *valid = r.valid ? 1 : 0;
    });
}

wls_status wls_lmag_bounds(int J, double sigma2, double gamma2, wls_bounds* out) {
    return guarded([&] {
        require(out, "out");
        constexpr double nan = std::numeric_limits<double>::quiet_NaN();
        const auto b = wls::lmag_bounds(J, sigma2, gamma2);
        out->lower = b.primary.lower;
        out->upper = b.primary.upper.value_or(nan);
        out->looser_lower = b.primary.looser_lower.value_or(nan);
        out->alt_lower = b.alternative ? b.alternative->lower : nan;
        out->alt_upper = b.alternative ? b.alternative->upper.value_or(nan) : nan;
    });
}

wls_status wls_adjudicate(uint64_t seed, long draws, int threads, char** report) {
    return guarded([&] {
        require(report, "report");
        *report = dup(wls::format_report(wls::run_adjudication(seed, draws, threads)));
    });
}

} // extern "C"
