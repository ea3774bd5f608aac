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
// Acceptance run: one PASS/FAIL line per criterion, details indented below.
// Exit status is the number of failed criteria.

#include "oracles.hpp"

#include "wlsubspace/analysis.hpp"
#include "wlsubspace/harness.hpp"
#include "wlsubspace/numerics.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

using namespace wls;

namespace {

constexpr std::uint64_t kSeed = 20260417;

int threads() { return std::max(1u, std::thread::hardware_concurrency()); }

struct Outcome {
    bool pass = true;
    std::vector<std::string> details;

    void check(bool ok, const std::string& what) {
        if (!ok) pass = false;
        details.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
    }
    void note(const std::string& what) { details.push_back("     " + what); }
};

template <class... Args>
std::string fmt(const char* f, Args... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

int failed = 0;

void run(int id, const std::string& title, double budget_s, const std::function<void(Outcome&)>& body) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.check(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (budget_s > 0) o.check(secs <= budget_s, fmt("runtime %.1f s (budget %.0f s)", secs, budget_s));
    else o.note(fmt("runtime %.1f s", secs));
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << title << '\n';
    for (const auto& d : o.details) std::cout << "    " << d << '\n';
    std::cout.flush();
}

ChannelRealization seeded_channel() {
    Stream s = substream(kSeed, 0, 0, StreamPurpose::Channel);
    return draw_channel(5, 1.0, s);
}

ReceivedBlock block_for(const ChannelRealization& ch, int N, double s2, int b) {
    Stream sy = substream(kSeed, 1, b, StreamPurpose::Symbols);
    Stream no = substream(kSeed, 1, b, StreamPurpose::Noise);
    return draw_block(ch, N, s2, sy, no);
}

// Criteria 1 and 2: optimal-correction MSE of one estimator on a fixed channel.
void optimal_agreement(Outcome& o, Estimator est) {
    const ChannelRealization ch = seeded_channel();
    const int J = 5, N = 100, blocks = 10000;
    const double s2 = snr_to_sigma2(10.0), g2 = ch.g_norm2();
    double sum = 0.0;
    for (int b = 0; b < blocks; ++b) {
        const ReceivedBlock blk = block_for(ch, N, s2, b);
        const RawEstimate raw =
            est == Estimator::Conventional ? conventional_estimate(blk) : wl_estimate(blk);
        sum += squared_error(apply(raw, Scenario::optimal(), ch), ch);
    }
    const double emp = sum / blocks;
    const double th = est == Estimator::Conventional
                          ? (J - 1) * (s2 * g2 + s2 * s2) / (N * g2 * g2)
                          : (2 * J - 1) * (s2 * g2 / 2 + s2 * s2 / 4) / (N * g2 * g2);
    const double rel = std::abs(emp - th) / th;
    o.check(rel <= 0.05, fmt("||g||^2 = %.4f, empirical %.6e vs closed form %.6e, rel. dev %.2f%% (<= 5%%)",
                             g2, emp, th, 100 * rel));
}

// Shared sweep for criteria 3 and 4.
struct ScenarioSweep {
    ExperimentConfig cfg;
    MseSweep sweep;
    std::vector<double> taylor; // per grid point, channel-averaged Taylor form
};

const ScenarioSweep& scenario_sweep() {
    static const ScenarioSweep s = [] {
        ScenarioSweep r;
        r.cfg = parse_config("experiment = mse_vs_snr\nJ = 5\ngamma2 = 1\nchannels = 200\n"
                             "blocks_per_channel = 1000\nN = 100\nsnr_db = 5, 10, 15\n"
                             "scenarios = optimal, suboptimal, largest_magnitude, training\n"
                             "K = 1, 5\nmaster_seed = " +
                             std::to_string(kSeed) + "\n");
        r.sweep = run_mse_sweep(r.cfg, threads());
        for (double snr : r.cfg.snr_db) {
            double t = 0.0;
            for (int c = 0; c < r.cfg.channels; ++c) {
                const SweepChannel sc = sweep_channel(r.cfg, c);
                t += theory_mse(TheoryQuery::for_channel(Estimator::Conventional,
                                                         Scenario::largest_magnitude(), sc.channel,
                                                         r.cfg.N.front(), snr_to_sigma2(snr)),
                                TheoryVariant::Taylor);
            }
            r.taylor.push_back(t / r.cfg.channels);
        }
        return r;
    }();
    return s;
}

const SummaryRow& row(const ScenarioSweep& s, double snr, Estimator e, ScenarioKind k, int K = 0) {
    for (const SummaryRow& r : s.sweep.rows)
        if (r.x == snr && r.estimator == e && r.scenario == k && r.K == K) return r;
    throw std::runtime_error("row not found");
}

std::string label(Estimator e, ScenarioKind k, int K) {
    std::string s = std::string(to_string(e)) + "/" + std::string(to_string(k));
    if (k == ScenarioKind::Training) s += " K=" + std::to_string(K);
    return s;
}

void scenario_forms(Outcome& o) {
    const ScenarioSweep& s = scenario_sweep();
    o.note(fmt("%d channels x %d blocks per SNR, solver failures %ld", s.cfg.channels,
               s.cfg.blocks_per_channel, s.sweep.solver_failures));
    auto compare = [&](double snr, const std::string& what, const SummaryRow& r, double th) {
        const double emp = r.empirical_mse;
        const double rel = std::abs(emp - th) / th;
        o.check(rel <= 0.10, fmt("%4.0f dB %-38s empirical %.5e (SE %.1e) theory %.5e dev %5.2f%% "
                                 "z %+.1f",
                                 snr, what.c_str(), emp, r.std_error, th, 100 * rel,
                                 (emp - th) / r.std_error));
    };
    for (std::size_t g = 0; g < s.cfg.snr_db.size(); ++g) {
        const double snr = s.cfg.snr_db[g];
        for (Estimator e : {Estimator::Conventional, Estimator::WidelyLinear}) {
            const SummaryRow& sub = row(s, snr, e, ScenarioKind::Suboptimal);
            compare(snr, label(e, ScenarioKind::Suboptimal, 0), sub, sub.theory_exact);
            const SummaryRow& lm = row(s, snr, e, ScenarioKind::LargestMagnitude);
            if (e == Estimator::Conventional) {
                compare(snr, label(e, ScenarioKind::LargestMagnitude, 0) + " (exponential)",
                        lm, lm.theory_approx);
                compare(snr, label(e, ScenarioKind::LargestMagnitude, 0) + " (Taylor)",
                        lm, s.taylor[g]);
            } else {
                compare(snr, label(e, ScenarioKind::LargestMagnitude, 0), lm, lm.theory_exact);
            }
            for (int K : {1, 5}) {
                const SummaryRow& tr = row(s, snr, e, ScenarioKind::Training, K);
                compare(snr, label(e, ScenarioKind::Training, K), tr, tr.theory_exact);
            }
        }
    }
}

void qualitative(Outcome& o) {
    const ScenarioSweep& s = scenario_sweep();
    const auto C = Estimator::Conventional, W = Estimator::WidelyLinear;
    {
        const double c = row(s, 10, C, ScenarioKind::Optimal).empirical_mse;
        const double w = row(s, 10, W, ScenarioKind::Optimal).empirical_mse;
        o.check(c <= w, fmt("(a) 10 dB optimal: conventional %.5e <= wl %.5e", c, w));
    }
    for (double snr : s.cfg.snr_db) {
        const double c = row(s, snr, C, ScenarioKind::Suboptimal).empirical_mse;
        const double w = row(s, snr, W, ScenarioKind::Suboptimal).empirical_mse;
        o.check(w < c, fmt("(b) %2.0f dB suboptimal: wl %.5e < conventional %.5e", snr, w, c));
    }
    for (double snr : {10.0, 15.0}) {
        const double wo = row(s, snr, W, ScenarioKind::Optimal).empirical_mse;
        const double wt = row(s, snr, W, ScenarioKind::Training, 1).empirical_mse;
        const double co = row(s, snr, C, ScenarioKind::Optimal).empirical_mse;
        const double ct = row(s, snr, C, ScenarioKind::Training, 1).empirical_mse;
        o.check(std::abs(wt - wo) / wo <= 0.05,
                fmt("(c) %2.0f dB wl training K=1 %.5e within 5%% of wl optimal %.5e (%.2f%%)", snr,
                    wt, wo, 100 * std::abs(wt - wo) / wo));
        o.check(ct > 1.25 * co, fmt("(c) %2.0f dB conventional training K=1 %.5e > 1.25 x optimal "
                                    "%.5e (ratio %.2f)",
                                    snr, ct, co, ct / co));
    }
    for (double snr : s.cfg.snr_db) {
        const SummaryRow& lm = row(s, snr, W, ScenarioKind::LargestMagnitude);
        const SummaryRow& op = row(s, snr, W, ScenarioKind::Optimal);
        o.check(std::abs(lm.empirical_mse - op.empirical_mse) <= 2 * lm.std_error,
                fmt("(d) %2.0f dB wl largest magnitude %.5e vs optimal %.5e, |diff| %.2e <= 2 SE %.2e",
                    snr, lm.empirical_mse, op.empirical_mse,
                    std::abs(lm.empirical_mse - op.empirical_mse), 2 * lm.std_error));
    }
}

// One adjudication run serves criteria 6 and 7.
const AdjudicationReport& adjudication() {
    static const AdjudicationReport a = run_adjudication(kSeed, 1000000, threads());
    return a;
}

void prob_optimal(Outcome& o) {
    const ExperimentConfig cfg = parse_config(
        "experiment = prob_optimal_vs_j\nJ = 2:1:8\ngamma2 = 1\nchannels = 100000\n"
        "snr_db = 0, 5, 10\nmaster_seed = " + std::to_string(kSeed) + "\n");
    double worst = 0.0;
    for (const ProbRow& r : run_prob_sweep(cfg, threads())) {
        const double d = std::abs(r.p_empirical - r.p_theory);
        worst = std::max(worst, d);
        o.check(d <= 0.01, fmt("J=%d %2.0f dB: empirical %.5f vs G %.5f", r.J, r.snr_db,
                               r.p_empirical, r.p_theory));
    }
    o.note(fmt("largest deviation %.5f (<= 0.01)", worst));
    double largest = 0.0;
    bool below = true;
    for (int J = 2; J <= 30; ++J) {
        const double g = reg_lower_gamma(J - 1.5, J);
        largest = std::max(largest, g);
        below = below && g < 0.5;
    }
    o.check(below, fmt("G(J - 3/2, J) < 1/2 for J = 2..30 (largest %.5f)", largest));
}

void prob_lmag(Outcome& o) {
    const ExperimentConfig cfg = parse_config(
        "experiment = prob_lmag_vs_j\nJ = 3:1:10\ngamma2 = 1\nchannels = 1000000\n"
        "snr_db = 5, 10, 15\nmaster_seed = " + std::to_string(kSeed) + "\n");
    for (const ProbRow& r : run_prob_sweep(cfg, threads())) {
        o.check(r.p_empirical >= r.bound_lower && r.p_empirical >= r.bound_loose,
                fmt("J=%2d %2.0f dB: empirical %.5f >= lower %.5f, >= looser %.5f", r.J, r.snr_db,
                    r.p_empirical, r.bound_lower, r.bound_loose));
    }
    const AdjudicationReport& a = adjudication();
    for (const BoundCase& b : a.bounds)
        o.note(fmt("J=2 %2.0f dB: p = %.5f (SE %.1e); half_to_one [%.5f, %.5f] %s; one_to_two "
                   "[%.5f, %.5f] %s",
                   b.snr_db, b.p_empirical, b.std_error, b.half_to_one.lower, *b.half_to_one.upper,
                   b.half_to_one_holds ? "holds" : "violated", b.one_to_two.lower,
                   *b.one_to_two.upper, b.one_to_two_holds ? "holds" : "violated"));
    o.check(a.bounds_verdict == "half_to_one" || a.bounds_verdict == "one_to_two",
            "J=2 adjudication identifies a single holding pair: " + a.bounds_verdict);
}

void series_adjudication(Outcome& o) {
    const AdjudicationReport& a = adjudication();
    for (const SeriesCase& s : a.series)
        o.note(fmt("J=%d K=%d s2=%.2f: MC %.6f (SE %.1e), flat %.6f %s, powered %.6f %s", s.J, s.K,
                   s.sigma2, s.mc_mean, s.mc_std_error, s.flat, s.flat_matches ? "match" : "no",
                   s.powered, s.powered_matches ? "match" : "no"));
    bool exactly_one = true;
    for (const SeriesCase& s : a.series) exactly_one = exactly_one && (s.flat_matches != s.powered_matches);
    o.check(exactly_one && (a.series_verdict == "flat" || a.series_verdict == "powered"),
            "each case matches exactly one variant; verdict: " + a.series_verdict);
}

void special_functions(Outcome& o) {
    double e_erf = 0, e_q = 0, e_i0 = 0, e_i1 = 0, e_g = 0, e_norm = 0, e_cos = 0, e_apx = 0;
    for (int i = -120; i <= 120; ++i) {
        const double x = i * 0.05;
        e_erf = std::max(e_erf, std::abs(wls::erf(x) - double(oracle::erf_series(x))));
    }
    for (int i = -80; i <= 80; ++i) {
        const double x = i * 0.1;
        e_q = std::max(e_q, std::abs(gaussian_q(x) - double(oracle::q_series(x))));
    }
    for (int i = 0; i <= 240; ++i) {
        const double x = i * 0.25;
        const double r0 = double(oracle::bessel_series(0, x)), r1 = double(oracle::bessel_series(1, x));
        e_i0 = std::max(e_i0, std::abs(bessel_i(0, x) - r0) / std::max(1.0, r0));
        e_i1 = std::max(e_i1, std::abs(bessel_i(1, x) - r1) / std::max(1.0, r1));
    }
    for (double s : {0.5, 1.0, 1.5, 2.0, 3.0, 5.0, 8.0, 13.0, 21.0, 30.0})
        for (double x : {0.01, 0.1, 0.5, 1.0, 2.0, 4.0, 7.5, 12.0, 20.0, 35.0})
            e_g = std::max(e_g, std::abs(reg_lower_gamma(x, s) - double(oracle::gamma_series(x, s))));
    for (double rho : {0.1, 1.0, 10.0, 100.0}) {
        auto f = [rho](oracle::ld t) {
            return static_cast<oracle::ld>(ricean_phase_pdf(double(t), RiceanParam(rho)));
        };
        e_norm = std::max(e_norm, std::abs(double(oracle::integrate(f, -oracle::kPi, oracle::kPi, 256,
                                                                    1e-14L)) - 1.0));
    }
    for (double rho : {0.1, 1.0, 5.0, 20.0}) {
        auto f = [rho](oracle::ld t) { return std::cos(t) * oracle::ricean_pdf_polar(t, rho); };
        e_cos = std::max(e_cos, std::abs(expected_cos(RiceanParam(rho), CosineMode::Exact) -
                                         double(oracle::periodic_trapezoid(f, 256))));
    }
    for (double rho = 10.0; rho <= 5000.0; rho *= 1.1) {
        const double ex = expected_cos(RiceanParam(rho), CosineMode::Exact);
        e_apx = std::max(e_apx, std::abs(expected_cos(RiceanParam(rho), CosineMode::Approx) - ex) / ex);
    }
    o.check(e_erf <= 1e-10, fmt("erf on [-6, 6] step 0.05: max |err| %.2e", e_erf));
    o.check(e_q <= 1e-10, fmt("Q on [-8, 8] step 0.1: max |err| %.2e", e_q));
    o.check(e_i0 <= 1e-10, fmt("I0 on [0, 60] step 0.25: max err (rel. above 1) %.2e", e_i0));
    o.check(e_i1 <= 1e-10, fmt("I1 on [0, 60] step 0.25: max err (rel. above 1) %.2e", e_i1));
    o.check(e_g <= 1e-10, fmt("G on s x x grid (10 x 10): max |err| %.2e", e_g));
    o.check(e_norm <= 1e-8, fmt("Ricean pdf normalization, rho in {0.1,1,10,100}: max |1 - int| %.2e", e_norm));
    o.check(e_cos <= 1e-8, fmt("E[cos] exact vs polar quadrature: max |err| %.2e", e_cos));
    o.check(e_apx <= 0.01, fmt("E[cos] approx vs exact for rho in [10, 5000]: max rel %.2e", e_apx));
}

void perturbation(Outcome& o) {
    const ChannelRealization ch = seeded_channel();
    const int J = 5, N = 100, trials = 10000;
    const double s2 = snr_to_sigma2(10.0), g2 = ch.g_norm2();
    CMatrix Q = CMatrix::Zero(J, J);
    RMatrix Qr = RMatrix::Zero(2 * J, 2 * J);
    CVector sq = CVector::Zero(J);
    Eigen::VectorXd re2 = Eigen::VectorXd::Zero(J), im2 = Eigen::VectorXd::Zero(J);
    double worst_identity = 0.0;
    for (int t = 0; t < trials; ++t) {
        const ReceivedBlock blk = block_for(ch, N, s2, 50000 + t);
        const CorrectedEstimate c = apply(conventional_estimate(blk), Scenario::optimal(), ch);
        const ComplexDecomposition d = decompose_error(c.complex(), ch.h());
        worst_identity = std::max({worst_identity, (ch.h() + d.q + d.alpha * ch.h() - c.complex()).norm(),
                                   std::abs(d.alpha - (-1 + std::sqrt(1 - d.q.squaredNorm()))),
                                   std::abs(ch.h().dot(d.q))});
        Q += d.q * d.q.adjoint();
        for (Index l = 0; l < J; ++l) {
            const cdouble v = d.q(l) * d.q(l);
            sq(l) += v;
            re2(l) += v.real() * v.real();
            im2(l) += v.imag() * v.imag();
        }
        const CorrectedEstimate w = apply(wl_estimate(blk), Scenario::optimal(), ch);
        const RealDecomposition r = decompose_error(w.real(), ch.h_bar());
        worst_identity = std::max({worst_identity, (ch.h_bar() + r.q + r.mu * ch.h_bar() - w.real()).norm(),
                                   std::abs(r.mu - (-1 + std::sqrt(1 - r.q.squaredNorm())))});
        Qr += r.q * r.q.transpose();
    }
    Q /= trials;
    Qr /= trials;
    o.check(worst_identity <= 1e-10,
            fmt("decomposition identities over %d trials: max residual %.2e", trials, worst_identity));
    const CMatrix Qp = predicted_error_covariance(ch, s2, N);
    const double dev = (Q - Qp).norm() / Qp.norm();
    o.check(dev <= 0.10, fmt("complex error covariance vs closed form: Frobenius dev %.2f%%", 100 * dev));
    for (Index l = 0; l < J; ++l) {
        const cdouble m = sq(l) / double(trials);
        const double se_re = std::sqrt((re2(l) / trials - m.real() * m.real()) / trials);
        const double se_im = std::sqrt((im2(l) / trials - m.imag() * m.imag()) / trials);
        o.check(std::abs(m.real()) <= 3 * se_re && std::abs(m.imag()) <= 3 * se_im,
                fmt("E[q_%d^2] = %.2e%+.2ej, 3 SE = (%.2e, %.2e)", int(l), m.real(), m.imag(),
                    3 * se_re, 3 * se_im));
    }
    const RMatrix Qrp = predicted_real_error_covariance(ch, s2, N);
    const double dev_r = (Qr - Qrp).norm() / Qrp.norm();
    o.check(dev_r <= 0.10, fmt("real error covariance vs closed form: Frobenius dev %.2f%%", 100 * dev_r));
    (void)g2;
}

void determinism(Outcome& o) {
    for (const std::string& name : preset_names()) {
        const ExperimentConfig cfg = preset(name);
        const std::string a = run_to_csv(cfg, 1);
        const std::string b = run_to_csv(cfg, 4);
        const std::string c = run_to_csv(cfg, 4);
        o.check(a == b && b == c, fmt("%-18s threads 1 vs 4 vs 4: %s (%zu bytes)", name.c_str(),
                                      a == b && b == c ? "identical" : "DIFFER", a.size()));
    }
}

} // namespace

int main() {
    std::cout << "acceptance run, master seed " << kSeed << ", " << threads() << " thread(s)\n";
    run(1, "conventional estimator, optimal correction vs closed form", 60,
        [](Outcome& o) { optimal_agreement(o, Estimator::Conventional); });
    run(2, "WL estimator, optimal correction vs closed form", 60,
        [](Outcome& o) { optimal_agreement(o, Estimator::WidelyLinear); });
    run(3, "scenario closed forms vs paired Monte Carlo", 600, scenario_forms);
    run(4, "qualitative ordering of the MSE curves", 0, qualitative);
    run(5, "P{WL wins} under optimal correction vs regularized gamma", 0, prob_optimal);
    run(6, "largest-magnitude win probability bounds", 0, prob_lmag);
    run(7, "pilot sign-error series adjudication", 0, series_adjudication);
    run(8, "special functions against independent oracles", 0, special_functions);
    run(9, "perturbation invariants", 0, perturbation);
    run(10, "determinism of every preset across thread counts", 0, determinism);
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed")
              << '\n';
    return failed;
}
