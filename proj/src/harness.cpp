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
#include "wlsubspace/harness.hpp"

#include "wlsubspace/channel.hpp"
#include "wlsubspace/error.hpp"
#include "wlsubspace/estimators.hpp"
#include "wlsubspace/numerics.hpp"
#include "wlsubspace/rng.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <fstream>
#include <limits>
#include <sstream>
#include <thread>

namespace wls {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr std::size_t kDrawChunk = 8192;

struct GridPoint {
    double x;
    int N;
    double sigma2;
};

struct RowSpec {
    Estimator estimator;
    ScenarioKind kind;
    int K;
};

struct Layout {
    int J;
    std::vector<GridPoint> points;
    std::vector<RowSpec> rows; // per grid point, conventional rows first
    bool any_suboptimal = false;
};

Layout make_layout(const ExperimentConfig& cfg) {
    validate_config(cfg);
    if (cfg.experiment == Experiment::ProbOptimalVsJ || cfg.experiment == Experiment::ProbLmagVsJ)
        throw InvalidArgument("run_mse_sweep: not an MSE experiment");
    Layout L;
    L.J = cfg.J.front();
    if (cfg.experiment == Experiment::MseVsN) {
        for (int n : cfg.N) L.points.push_back({double(n), n, snr_to_sigma2(cfg.snr_db.front())});
    } else {
        for (double s : cfg.snr_db) L.points.push_back({s, cfg.N.front(), snr_to_sigma2(s)});
    }
    for (auto est : {Estimator::Conventional, Estimator::WidelyLinear}) {
        for (auto kind : cfg.scenarios) {
            if (kind == ScenarioKind::Training) {
                for (int k : cfg.K) L.rows.push_back({est, kind, k});
            } else {
                L.rows.push_back({est, kind, 0});
            }
            if (kind == ScenarioKind::Suboptimal) L.any_suboptimal = true;
        }
    }
    return L;
}

Scenario scenario_for(const RowSpec& r, Index ell) {
    switch (r.kind) {
    case ScenarioKind::Optimal: return Scenario::optimal();
    case ScenarioKind::Suboptimal: return Scenario::suboptimal(ell);
    case ScenarioKind::LargestMagnitude: return Scenario::largest_magnitude();
    case ScenarioKind::Training: return Scenario::training(r.K);
    }
    throw InvalidArgument("unknown scenario");
}

struct ChannelDraw {
    ChannelRealization ch;
    Index ell;
};

ChannelDraw channel_for(std::uint64_t seed, int c, int J, double gamma2) {
    Stream s = substream(seed, static_cast<std::uint64_t>(c), 0, StreamPurpose::Channel);
    ChannelRealization ch = draw_channel(J, gamma2, s);
    const Index ell = s.uniform_index(J);
    return {std::move(ch), ell};
}

// Fills errors[r] for every row of one grid point. Returns false on solver
// failure, in which case the trial is dropped for both estimators.
bool paired_trial(const Layout& L, std::uint64_t seed, const ChannelDraw& cd, int c, int b,
                  const GridPoint& p, std::vector<double>& errors) {
    Stream sym = substream(seed, c, b, StreamPurpose::Symbols);
    Stream noise = substream(seed, c, b, StreamPurpose::Noise);
    const ReceivedBlock block = draw_block(cd.ch, p.N, p.sigma2, sym, noise);
    RawEstimate conv, wl;
    try {
        conv = conventional_estimate(block);
        wl = wl_estimate(block);
    } catch (const NumericalError&) {
        return false;
    }
    errors.assign(L.rows.size(), 0.0);
    for (std::size_t r = 0; r < L.rows.size(); ++r) {
        const RowSpec& spec = L.rows[r];
        const Scenario scen = scenario_for(spec, cd.ell);
        const RawEstimate& raw = spec.estimator == Estimator::Conventional ? conv : wl;
        if (spec.kind == ScenarioKind::Training) {
            // Both estimators see the same pilots for a given K.
            Stream ps = substream(seed, c, b, StreamPurpose::Pilots);
            const PilotBlock pilots = make_pilots(cd.ch, spec.K, p.sigma2, ps);
            errors[r] = squared_error(apply(raw, scen, cd.ch, &pilots), cd.ch);
        } else {
            errors[r] = squared_error(apply(raw, scen, cd.ch), cd.ch);
        }
    }
    return true;
}

struct Acc {
    double sum = 0.0;
    double sumsq = 0.0;
    long n = 0;
};

struct ChannelResult {
    std::vector<Acc> acc;       // points x rows
    std::vector<double> exact;  // points x rows
    std::vector<double> approx; // points x rows
    long failures = 0;
};

std::string csv_field(double v) { return format_double(v); }

} // namespace

void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& fn) {
    if (threads < 1) throw InvalidArgument("parallel_for: threads must be >= 1");
    const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(threads), count);
    std::vector<std::exception_ptr> errors(count);
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    auto work = [&] {
        while (!failed.load(std::memory_order_relaxed)) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                fn(i);
            } catch (...) {
                errors[i] = std::current_exception();
                failed = true;
            }
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

MseSweep run_mse_sweep(const ExperimentConfig& cfg, int threads) {
    const Layout L = make_layout(cfg);
    const std::uint64_t seed = *cfg.master_seed;
    const bool simulate = cfg.experiment != Experiment::TheoryTable;
    const std::size_t P = L.points.size();
    const std::size_t R = L.rows.size();

    std::vector<ChannelResult> per_channel(cfg.channels);
    parallel_for(per_channel.size(), threads, [&](std::size_t ci) {
        const int c = static_cast<int>(ci);
        const ChannelDraw cd = channel_for(seed, c, L.J, cfg.gamma2);
        ChannelResult res;
        res.acc.assign(P * R, Acc{});
        res.exact.assign(P * R, 0.0);
        res.approx.assign(P * R, 0.0);
        std::vector<double> errors;
        for (std::size_t pi = 0; pi < P; ++pi) {
            const GridPoint& p = L.points[pi];
            for (std::size_t r = 0; r < R; ++r) {
                if (p.sigma2 == 0.0) continue; // every closed form vanishes
                const TheoryQuery q = TheoryQuery::for_channel(
                    L.rows[r].estimator, scenario_for(L.rows[r], cd.ell), cd.ch, p.N, p.sigma2);
                res.exact[pi * R + r] = theory_mse(q, TheoryVariant::Exact);
                res.approx[pi * R + r] = theory_mse(q, TheoryVariant::Approx);
            }
            if (!simulate) continue;
            for (int b = 0; b < cfg.blocks_per_channel; ++b) {
                if (!paired_trial(L, seed, cd, c, b, p, errors)) {
                    ++res.failures;
                    continue;
                }
                for (std::size_t r = 0; r < R; ++r) {
                    Acc& a = res.acc[pi * R + r];
                    a.sum += errors[r];
                    a.sumsq += errors[r] * errors[r];
                    ++a.n;
                }
            }
        }
        per_channel[ci] = std::move(res);
    });

    // Reduce in channel order so the sums do not depend on scheduling.
    MseSweep out;
    std::vector<Acc> total(P * R);
    std::vector<double> exact(P * R, 0.0), approx(P * R, 0.0);
    for (const auto& res : per_channel) {
        out.solver_failures += res.failures;
        for (std::size_t i = 0; i < P * R; ++i) {
            total[i].sum += res.acc[i].sum;
            total[i].sumsq += res.acc[i].sumsq;
            total[i].n += res.acc[i].n;
            exact[i] += res.exact[i];
            approx[i] += res.approx[i];
        }
    }
    if (out.solver_failures > cfg.max_solver_failures)
        throw NumericalError("eigensolver failed on " + std::to_string(out.solver_failures) +
                                 " trials (limit " + std::to_string(cfg.max_solver_failures) + ")",
                             static_cast<std::size_t>(out.solver_failures));

    for (std::size_t pi = 0; pi < P; ++pi) {
        for (std::size_t r = 0; r < R; ++r) {
            const std::size_t i = pi * R + r;
            SummaryRow row;
            row.x = L.points[pi].x;
            row.estimator = L.rows[r].estimator;
            row.scenario = L.rows[r].kind;
            row.K = L.rows[r].K;
            row.theory_exact = exact[i] / cfg.channels;
            row.theory_approx = approx[i] / cfg.channels;
            if (!simulate) {
                row.empirical_mse = kNaN;
                row.std_error = kNaN;
                row.trials = 0;
            } else {
                const Acc& a = total[i];
                row.trials = a.n;
                row.empirical_mse = a.n ? a.sum / a.n : kNaN;
                if (a.n > 1) {
                    const double var =
                        std::max(0.0, (a.sumsq - a.sum * a.sum / a.n) / (a.n - 1));
                    row.std_error = std::sqrt(var / a.n);
                } else {
                    row.std_error = a.n ? 0.0 : kNaN;
                }
            }
            out.rows.push_back(row);
        }
    }
    return out;
}

SweepChannel sweep_channel(const ExperimentConfig& cfg, int c) {
    validate_config(cfg);
    if (c < 0 || c >= cfg.channels) throw InvalidArgument("sweep_channel: channel index out of range");
    ChannelDraw d = channel_for(*cfg.master_seed, c, cfg.J.front(), cfg.gamma2);
    return {std::move(d.ch), d.ell};
}

TrialErrors run_trial(const ExperimentConfig& cfg, int channel, int block, std::size_t grid_point) {
    const Layout L = make_layout(cfg);
    if (channel < 0 || channel >= cfg.channels || block < 0 || block >= cfg.blocks_per_channel ||
        grid_point >= L.points.size())
        throw InvalidArgument("run_trial: index out of range");
    const ChannelDraw cd = channel_for(*cfg.master_seed, channel, L.J, cfg.gamma2);
    TrialErrors out;
    out.solver_failed =
        !paired_trial(L, *cfg.master_seed, cd, channel, block, L.points[grid_point], out.errors);
    return out;
}

std::vector<ProbRow> run_prob_sweep(const ExperimentConfig& cfg, int threads) {
    validate_config(cfg);
    const bool optimal = cfg.experiment == Experiment::ProbOptimalVsJ;
    if (!optimal && cfg.experiment != Experiment::ProbLmagVsJ)
        throw InvalidArgument("run_prob_sweep: not a probability experiment");
    const std::uint64_t seed = *cfg.master_seed;
    const int N = cfg.N.front();
    const std::size_t S = cfg.snr_db.size();
    std::vector<double> sigma2(S);
    for (std::size_t s = 0; s < S; ++s) sigma2[s] = snr_to_sigma2(cfg.snr_db[s]);

    std::vector<ProbRow> rows;
    for (int J : cfg.J) {
        const std::size_t draws = static_cast<std::size_t>(cfg.channels);
        const std::size_t chunks = (draws + kDrawChunk - 1) / kDrawChunk;
        std::vector<std::vector<long>> wins(chunks, std::vector<long>(S, 0));
        parallel_for(chunks, threads, [&](std::size_t k) {
            const std::size_t end = std::min(draws, (k + 1) * kDrawChunk);
            for (std::size_t d = k * kDrawChunk; d < end; ++d) {
                // Keyed by (draw, J) only, so every SNR sees the same channels.
                Stream st = substream(seed, d, static_cast<std::uint64_t>(J), StreamPurpose::Channel);
                const ChannelRealization ch = draw_channel(J, cfg.gamma2, st);
                const double hl2 = std::norm(ch.h()(ch.largest()));
                for (std::size_t s = 0; s < S; ++s) {
                    const double delta =
                        optimal ? delta_mse_optimal(J, N, sigma2[s], ch.g_norm2())
                                : delta_mse_lmag_simplified(J, N, sigma2[s], ch.g_norm2(), hl2);
                    if (delta > 0.0) ++wins[k][s];
                }
            }
        });
        for (std::size_t s = 0; s < S; ++s) {
            long total = 0;
            for (const auto& w : wins) total += w[s];
            ProbRow row;
            row.J = J;
            row.snr_db = cfg.snr_db[s];
            row.trials = cfg.channels;
            row.p_empirical = static_cast<double>(total) / cfg.channels;
            row.p_theory = kNaN;
            row.bound_lower = row.bound_upper = row.bound_loose = kNaN;
            if (optimal) {
                row.p_theory = prob_wl_wins_optimal(J, sigma2[s], cfg.gamma2);
            } else {
                const LmagBounds b = lmag_bounds(J, sigma2[s], cfg.gamma2);
                row.bound_lower = b.primary.lower;
                if (b.primary.upper) row.bound_upper = *b.primary.upper;
                if (b.primary.looser_lower) row.bound_loose = *b.primary.looser_lower;
            }
            rows.push_back(row);
        }
    }
    return rows;
}

std::string mse_csv(const std::vector<SummaryRow>& rows) {
    std::ostringstream os;
    os << kMseCsvHeader << '\n';
    for (const auto& r : rows) {
        os << csv_field(r.x) << ',' << to_string(r.estimator) << ',' << to_string(r.scenario) << ','
           << r.K << ',' << csv_field(r.empirical_mse) << ',' << csv_field(r.theory_exact) << ','
           << csv_field(r.theory_approx) << ',' << csv_field(r.std_error) << ',' << r.trials
           << '\n';
    }
    return os.str();
}

std::string prob_csv(const std::vector<ProbRow>& rows) {
    std::ostringstream os;
    os << kProbCsvHeader << '\n';
    for (const auto& r : rows) {
        os << r.J << ',' << csv_field(r.snr_db) << ',' << csv_field(r.p_empirical) << ','
           << csv_field(r.p_theory) << ',' << csv_field(r.bound_lower) << ','
           << csv_field(r.bound_upper) << ',' << csv_field(r.bound_loose) << ',' << r.trials
           << '\n';
    }
    return os.str();
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << text;
    if (!out) throw IoError("write failed for '" + path + "'");
}

void emit_csv(const std::vector<SummaryRow>& rows, const std::string& path) {
    write_text(path, mse_csv(rows));
}

void emit_csv(const std::vector<ProbRow>& rows, const std::string& path) {
    write_text(path, prob_csv(rows));
}

std::string run_to_csv(const ExperimentConfig& cfg, int threads, long* solver_failures) {
    if (solver_failures) *solver_failures = 0;
    if (cfg.experiment == Experiment::ProbOptimalVsJ || cfg.experiment == Experiment::ProbLmagVsJ)
        return prob_csv(run_prob_sweep(cfg, threads));
    const MseSweep sweep = run_mse_sweep(cfg, threads);
    if (solver_failures) *solver_failures = sweep.solver_failures;
    return mse_csv(sweep.rows);
}

// ---------------------------------------------------------------------------
// Presets

namespace {

struct PresetEntry {
    std::string_view name;
    std::string_view text;
};

constexpr PresetEntry kPresets[] = {
    {"fig_mse_snr", R"(# Average MSE vs SNR, optimal / suboptimal / largest-magnitude correction
experiment = mse_vs_snr
J = 5
gamma2 = 1
channels = 1000
blocks_per_channel = 10
N = 100
snr_db = 0:2.5:20
scenarios = optimal,suboptimal,largest_magnitude
K = 1
master_seed = 20260101
max_solver_failures = 0
)"},
    {"fig_mse_n", R"(# Average MSE vs N at 10 dB, optimal / suboptimal / largest-magnitude correction
experiment = mse_vs_n
J = 5
gamma2 = 1
channels = 1000
blocks_per_channel = 10
N = 20,50,100,150,200,300,400,500
snr_db = 10
scenarios = optimal,suboptimal,largest_magnitude
K = 1
master_seed = 20260102
max_solver_failures = 0
)"},
    {"fig_training_snr", R"(# Average MSE vs SNR under pilot-based correction, K = 1 and 5
experiment = mse_vs_snr
J = 5
gamma2 = 1
channels = 1000
blocks_per_channel = 10
N = 100
snr_db = 0:2.5:20
scenarios = optimal,training
K = 1,5
master_seed = 20260103
max_solver_failures = 0
)"},
    {"fig_training_n", R"(# Average MSE vs N at 10 dB under pilot-based correction, K = 1 and 5
experiment = mse_vs_n
J = 5
gamma2 = 1
channels = 1000
blocks_per_channel = 10
N = 20,50,100,150,200,300,400,500
snr_db = 10
scenarios = optimal,training
K = 1,5
master_seed = 20260104
max_solver_failures = 0
)"},
    {"fig_prob_optimal", R"(# P{WL beats conventional} under optimal correction vs J
experiment = prob_optimal_vs_j
J = 2:1:8
gamma2 = 1
channels = 100000
N = 100
snr_db = 0,5,10
master_seed = 20260105
)"},
    {"fig_prob_lmag", R"(# P{WL beats conventional} under largest-magnitude correction vs J
experiment = prob_lmag_vs_j
J = 2:1:10
gamma2 = 1
channels = 1000000
N = 100
snr_db = 5,10,15
master_seed = 20260106
)"},
};

} // namespace

std::vector<std::string> preset_names() {
    std::vector<std::string> out;
    for (const auto& p : kPresets) out.emplace_back(p.name);
    return out;
}

std::string preset_text(std::string_view name) {
    for (const auto& p : kPresets)
        if (p.name == name) return std::string(p.text);
    throw ConfigError("unknown preset '" + std::string(name) + "'", "preset");
}

ExperimentConfig preset(std::string_view name) { return parse_config(preset_text(name)); }

// ---------------------------------------------------------------------------
// Adjudication

AdjudicationReport run_adjudication(std::uint64_t master_seed, long draws, int threads) {
    if (draws < 2) throw InvalidArgument("run_adjudication: draws must be >= 2");
    AdjudicationReport rep;
    rep.draws = draws;

    struct Setting {
        int J, K;
        double sigma2;
    };
    std::vector<Setting> settings;
    for (int J : {1, 2, 3})
        for (int K : {1, 2})
            for (double s2 : {0.25, 0.5}) settings.push_back({J, K, s2});
    const std::vector<double> bound_snr{0.0, 5.0, 10.0, 15.0};
    const double gamma2 = 1.0;

    const std::size_t n = static_cast<std::size_t>(draws);
    const std::size_t chunks = (n + kDrawChunk - 1) / kDrawChunk;
    const std::size_t M = settings.size();
    const std::size_t B = bound_snr.size();
    struct ChunkSums {
        std::vector<double> sum, sumsq;
        std::vector<long> wins;
    };
    std::vector<ChunkSums> parts(chunks);
    parallel_for(chunks, threads, [&](std::size_t k) {
        ChunkSums cs{std::vector<double>(M, 0.0), std::vector<double>(M, 0.0),
                     std::vector<long>(B, 0)};
        const std::size_t end = std::min(n, (k + 1) * kDrawChunk);
        for (std::size_t d = k * kDrawChunk; d < end; ++d) {
            double g2[4] = {0, 0, 0, 0};
            for (int J = 1; J <= 3; ++J) {
                Stream st = substream(master_seed, d, static_cast<std::uint64_t>(J),
                                      StreamPurpose::Channel);
                const ChannelRealization ch = draw_channel(J, gamma2, st);
                g2[J] = ch.g_norm2();
                if (J == 2) {
                    const double hl2 = std::norm(ch.h()(ch.largest()));
                    for (std::size_t b = 0; b < B; ++b)
                        if (delta_mse_lmag_simplified(2, 100, snr_to_sigma2(bound_snr[b]),
                                                      ch.g_norm2(), hl2) > 0.0)
                            ++cs.wins[b];
                }
            }
            for (std::size_t m = 0; m < M; ++m) {
                const auto& st = settings[m];
                const double v = prob_sign_error_training(g2[st.J], st.K, st.sigma2);
                cs.sum[m] += v;
                cs.sumsq[m] += v * v;
            }
        }
        parts[k] = std::move(cs);
    });

    std::vector<double> sum(M, 0.0), sumsq(M, 0.0);
    std::vector<long> wins(B, 0);
    for (const auto& p : parts) {
        for (std::size_t m = 0; m < M; ++m) {
            sum[m] += p.sum[m];
            sumsq[m] += p.sumsq[m];
        }
        for (std::size_t b = 0; b < B; ++b) wins[b] += p.wins[b];
    }

    bool all_flat = true, all_powered = true;
    for (std::size_t m = 0; m < M; ++m) {
        SeriesCase c;
        c.J = settings[m].J;
        c.K = settings[m].K;
        c.sigma2 = settings[m].sigma2;
        c.mc_mean = sum[m] / draws;
        const double var = std::max(0.0, (sumsq[m] - sum[m] * sum[m] / draws) / (draws - 1));
        c.mc_std_error = std::sqrt(var / draws);
        c.flat = prob_sign_error_unconditional(c.J, c.K, gamma2, c.sigma2, SeriesForm::Flat).value;
        c.powered =
            prob_sign_error_unconditional(c.J, c.K, gamma2, c.sigma2, SeriesForm::Powered).value;
        c.flat_matches = std::abs(c.flat - c.mc_mean) <= 3.0 * c.mc_std_error;
        c.powered_matches = std::abs(c.powered - c.mc_mean) <= 3.0 * c.mc_std_error;
        all_flat = all_flat && c.flat_matches;
        all_powered = all_powered && c.powered_matches;
        rep.series.push_back(c);
    }
    rep.series_verdict = all_flat && all_powered ? "both"
                         : all_flat              ? "flat"
                         : all_powered           ? "powered"
                                                 : "neither";

    bool all_half = true, all_one_two = true;
    for (std::size_t b = 0; b < B; ++b) {
        BoundCase bc;
        bc.snr_db = bound_snr[b];
        bc.p_empirical = static_cast<double>(wins[b]) / draws;
        bc.std_error = std::sqrt(bc.p_empirical * (1.0 - bc.p_empirical) / draws);
        const LmagBounds lb = lmag_bounds(2, snr_to_sigma2(bc.snr_db), gamma2);
        bc.half_to_one = lb.primary;
        bc.one_to_two = *lb.alternative;
        auto holds = [&](const BoundsRecord& r) {
            const double slack = 3.0 * bc.std_error;
            return bc.p_empirical >= r.lower - slack && bc.p_empirical <= *r.upper + slack;
        };
        bc.half_to_one_holds = holds(bc.half_to_one);
        bc.one_to_two_holds = holds(bc.one_to_two);
        all_half = all_half && bc.half_to_one_holds;
        all_one_two = all_one_two && bc.one_to_two_holds;
        rep.bounds.push_back(bc);
    }
    rep.bounds_verdict = all_half && all_one_two ? "both"
                         : all_half              ? "half_to_one"
                         : all_one_two           ? "one_to_two"
                                                 : "neither";
    return rep;
}

std::string format_report(const AdjudicationReport& r) {
    std::ostringstream os;
    os.precision(6);
    os << "Pilot sign-error series, " << r.draws << " channel draws, gamma2 = 1\n";
    os << "  J K sigma2   monte_carlo  std_error    flat        powered     flat_ok powered_ok\n";
    for (const auto& c : r.series) {
        os << "  " << c.J << ' ' << c.K << ' ' << format_double(c.sigma2) << "     "
           << std::scientific << c.mc_mean << ' ' << c.mc_std_error << ' ' << c.flat << ' '
           << c.powered << std::defaultfloat << ' ' << (c.flat_matches ? "yes" : "no") << "     "
           << (c.powered_matches ? "yes" : "no") << '\n';
    }
    os << "  verdict: " << r.series_verdict
       << " (series whose every case lies within 3 standard errors)\n\n";

    os << "Two-antenna largest-magnitude bound pairs, " << r.draws << " channel draws\n";
    os << "  snr_db p_empirical std_error  half_to_one             one_to_two\n";
    for (const auto& b : r.bounds) {
        os << "  " << format_double(b.snr_db) << "  " << b.p_empirical << "  " << b.std_error
           << "  (" << b.half_to_one.lower << ", " << *b.half_to_one.upper << ") "
           << (b.half_to_one_holds ? "holds" : "fails") << "  (" << b.one_to_two.lower << ", "
           << *b.one_to_two.upper << ") " << (b.one_to_two_holds ? "holds" : "fails") << '\n';
    }
    os << "  verdict: " << r.bounds_verdict << '\n';
    return os.str();
}

} // namespace wls
