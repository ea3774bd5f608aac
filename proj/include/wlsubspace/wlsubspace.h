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
/* C interface to the wlsubspace library.
 *
 * Every function returns a wls_status; on failure the message (and, for
 * configuration errors, the offending key) is available from
 * wls_last_error() / wls_last_error_key() on the calling thread until the
 * next failing call. Objects are opaque handles released with the matching
 * *_free function. Strings returned through char** are released with
 * wls_string_free. */
#ifndef WLSUBSPACE_H
#define WLSUBSPACE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define WLS_API __declspec(dllexport)
#else
#define WLS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
    WLS_OK = 0,
    WLS_INVALID_ARGUMENT = 1,
    WLS_DOMAIN_ERROR = 2,
    WLS_OVERFLOW = 3,
    WLS_NUMERICAL_ERROR = 4,
    WLS_CONFIG_ERROR = 5,
    WLS_IO_ERROR = 6,
    WLS_INTERNAL_ERROR = 7
} wls_status;

typedef enum { WLS_CONVENTIONAL = 0, WLS_WIDELY_LINEAR = 1 } wls_estimator;

typedef enum {
    WLS_OPTIMAL = 0,
    WLS_SUBOPTIMAL = 1,
    WLS_LARGEST_MAGNITUDE = 2,
    WLS_TRAINING = 3
} wls_scenario;

typedef enum { WLS_EXACT = 0, WLS_APPROX = 1, WLS_TAYLOR = 2 } wls_variant;

typedef struct wls_config wls_config;
typedef struct wls_table wls_table;

/* Closed-form MSE query for one channel. Magnitudes that the scenario does
 * not use may be left negative. */
typedef struct {
    wls_estimator estimator;
    wls_scenario scenario;
    int K;
    int J;
    int N;
    double sigma2;
    double g_norm2;
    double h_ell_mag2;
    double h_L_mag2;
} wls_theory_query;

/* Largest-magnitude bounds. Missing entries are NaN. For J = 2 the primary
 * pair is (1-e^{-x/2}, 1-e^{-x}) and the alternative (1-e^{-x}, 1-e^{-2x}). */
typedef struct {
    double lower;
    double upper;
    double looser_lower;
    double alt_lower;
    double alt_upper;
} wls_bounds;

WLS_API const char* wls_version(void);
WLS_API const char* wls_last_error(void);
WLS_API const char* wls_last_error_key(void);
WLS_API void wls_string_free(char* s);

WLS_API wls_status wls_config_load(const char* path, wls_config** out);
/* As wls_config_load with master_seed replaced before validation, so the
 * file may omit it. */
WLS_API wls_status wls_config_load_seeded(const char* path, uint64_t seed, wls_config** out);
WLS_API wls_status wls_config_parse(const char* text, wls_config** out);
WLS_API wls_status wls_config_preset(const char* name, wls_config** out);
/* Newline-separated list of built-in preset names. */
WLS_API wls_status wls_preset_names(char** out);
WLS_API wls_status wls_config_set_seed(wls_config* cfg, uint64_t seed);
/* Replaces one key with a value in config-file syntax. */
WLS_API wls_status wls_config_set(wls_config* cfg, const char* key, const char* value);
WLS_API wls_status wls_config_format(const wls_config* cfg, char** out);
WLS_API wls_status wls_config_write(const wls_config* cfg, const char* path);
/* Empty string when the config names no output path. */
WLS_API wls_status wls_config_output_path(const wls_config* cfg, char** out);
/* 1 for probability experiments, 0 for MSE experiments. */
WLS_API wls_status wls_config_is_probability(const wls_config* cfg, int* out);
WLS_API void wls_config_free(wls_config* cfg);

/* Runs the configured experiment. threads only affects speed. */
WLS_API wls_status wls_run(const wls_config* cfg, int threads, wls_table** out);
WLS_API size_t wls_table_rows(const wls_table* t);
WLS_API long wls_table_solver_failures(const wls_table* t);
WLS_API wls_status wls_table_csv(const wls_table* t, char** out);
WLS_API wls_status wls_table_write(const wls_table* t, const char* path);
WLS_API void wls_table_free(wls_table* t);

WLS_API wls_status wls_theory_mse(const wls_theory_query* q, wls_variant variant, double* out);
WLS_API wls_status wls_delta_mse_optimal(int J, int N, double sigma2, double g_norm2, double* out);
/* full != 0 keeps the WL sign-error term. */
WLS_API wls_status wls_delta_mse_lmag(int J, int N, double sigma2, double g_norm2,
                                      double h_L_mag2, int full, double* out);
WLS_API wls_status wls_prob_wl_wins_optimal(int J, double sigma2, double gamma2, double* out);
WLS_API wls_status wls_prob_sign_error_training(double g_norm2, int K, double sigma2,
                                                double* out);
/* powered != 0 selects the series with power l; valid is set to 0 outside
 * K gamma2 / sigma2 > 1. */
WLS_API wls_status wls_prob_sign_error_unconditional(int J, int K, double gamma2, double sigma2,
                                                     int powered, double* out, int* valid);
WLS_API wls_status wls_lmag_bounds(int J, double sigma2, double gamma2, wls_bounds* out);

/* Monte Carlo adjudication of the series and bound variants; text report. */
WLS_API wls_status wls_adjudicate(uint64_t seed, long draws, int threads, char** report);

#ifdef __cplusplus
}
#endif

#endif /* WLSUBSPACE_H */
