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
#include "wlsubspace/config.hpp"

#include "wlsubspace/error.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace wls {

namespace {

constexpr std::string_view kKeys[] = {
    "experiment", "J", "gamma2",  "channels",       "blocks_per_channel", "N",
    "snr_db",     "scenarios", "K", "master_seed", "output_path",        "max_solver_failures",
};

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.push_back(trim(s.substr(start, pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

struct Entry {
    std::string value;
    std::size_t line;
};

class Reader {
public:
    Reader(std::string key, const Entry& e) : key_(std::move(key)), e_(e) {}

    [[noreturn]] void fail(const std::string& what) const {
        throw ConfigError(key_ + ": " + what, key_, e_.line);
    }

    template <class T>
    T number(std::string_view tok) const {
        T v{};
        const char* end = tok.data() + tok.size();
        if constexpr (std::is_floating_point_v<T>) {
            // from_chars rejects a leading '+', accept it for convenience.
            if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
        }
        auto [ptr, ec] = std::from_chars(tok.data(), end, v);
        if (tok.empty() || ec != std::errc() || ptr != end)
            fail("cannot parse '" + std::string(tok) + "' as a number");
        return v;
    }

    template <class T>
    T scalar() const {
        return number<T>(e_.value);
    }

    // Comma list; each item is a value or start:step:stop (inclusive).
    template <class T>
    std::vector<T> list() const {
        std::vector<T> out;
        for (auto item : split(e_.value, ',')) {
            const auto parts = split(item, ':');
            if (parts.size() == 1) {
                out.push_back(number<T>(parts[0]));
                continue;
            }
            if (parts.size() != 3) fail("range must be start:step:stop");
            const double a = number<double>(parts[0]);
            const double step = number<double>(parts[1]);
            const double b = number<double>(parts[2]);
            if (!(step > 0.0) || b < a) fail("range needs step > 0 and stop >= start");
            const auto n = static_cast<long>(std::floor((b - a) / step + 1e-9)) + 1;
            if (n > 100000) fail("range has too many points");
            for (long i = 0; i < n; ++i) {
                const double x = a + static_cast<double>(i) * step;
                if constexpr (std::is_integral_v<T>) {
                    if (x != std::floor(x)) fail("range produces a non-integer value");
                    out.push_back(static_cast<T>(x));
                } else {
                    out.push_back(x);
                }
            }
        }
        if (out.empty()) fail("list is empty");
        return out;
    }

    const std::string& raw() const { return e_.value; }

private:
    std::string key_;
    const Entry& e_;
};

template <class T>
void join(std::ostringstream& os, const std::vector<T>& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        if constexpr (std::is_floating_point_v<T>) os << format_double(v[i]);
        else os << v[i];
    }
}

void require_positive(const std::vector<int>& v, const char* key) {
    for (int x : v)
        if (x < 1) throw ConfigError(std::string(key) + ": values must be >= 1", key);
}

bool is_mse(Experiment e) {
    return e == Experiment::MseVsSnr || e == Experiment::MseVsN || e == Experiment::TheoryTable;
}

} // namespace

std::string_view to_string(Experiment e) {
    switch (e) {
    case Experiment::MseVsSnr: return "mse_vs_snr";
    case Experiment::MseVsN: return "mse_vs_n";
    case Experiment::ProbOptimalVsJ: return "prob_optimal_vs_j";
    case Experiment::ProbLmagVsJ: return "prob_lmag_vs_j";
    case Experiment::TheoryTable: return "theory_table";
    }
    return "unknown";
}

Experiment parse_experiment(std::string_view name) {
    for (auto e : {Experiment::MseVsSnr, Experiment::MseVsN, Experiment::ProbOptimalVsJ,
                   Experiment::ProbLmagVsJ, Experiment::TheoryTable})
        if (to_string(e) == name) return e;
    throw ConfigError("experiment: unknown experiment '" + std::string(name) + "'", "experiment");
}

std::string format_double(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, ptr);
}

double snr_to_sigma2(double snr_db) {
    if (std::isnan(snr_db)) throw InvalidArgument("snr_to_sigma2: SNR is NaN");
    if (std::isinf(snr_db)) {
        if (snr_db < 0) throw InvalidArgument("snr_to_sigma2: SNR of -inf dB");
        return 0.0;
    }
    return std::pow(10.0, -snr_db / 10.0);
}

void validate_config(const ExperimentConfig& cfg) {
    if (!cfg.master_seed) throw ConfigError("missing required key 'master_seed'", "master_seed");
    if (cfg.J.empty()) throw ConfigError("J: list is empty", "J");
    if (cfg.N.empty()) throw ConfigError("N: list is empty", "N");
    if (cfg.snr_db.empty()) throw ConfigError("snr_db: list is empty", "snr_db");
    if (cfg.K.empty()) throw ConfigError("K: list is empty", "K");
    require_positive(cfg.J, "J");
    require_positive(cfg.N, "N");
    require_positive(cfg.K, "K");
    if (!(cfg.gamma2 > 0.0) || !std::isfinite(cfg.gamma2))
        throw ConfigError("gamma2: must be positive and finite", "gamma2");
    if (cfg.channels < 1) throw ConfigError("channels: must be >= 1", "channels");
    if (cfg.blocks_per_channel < 1)
        throw ConfigError("blocks_per_channel: must be >= 1", "blocks_per_channel");
    if (cfg.max_solver_failures < 0)
        throw ConfigError("max_solver_failures: must be >= 0", "max_solver_failures");
    for (double s : cfg.snr_db)
        if (std::isnan(s) || s == -INFINITY)
            throw ConfigError("snr_db: values must be real or +inf", "snr_db");

    if (is_mse(cfg.experiment)) {
        if (cfg.J.size() != 1) throw ConfigError("J: MSE sweeps take a single J", "J");
        if (cfg.scenarios.empty()) throw ConfigError("scenarios: list is empty", "scenarios");
        if (cfg.experiment == Experiment::MseVsN && cfg.snr_db.size() != 1)
            throw ConfigError("snr_db: mse_vs_n takes a single SNR", "snr_db");
        if (cfg.experiment != Experiment::MseVsN && cfg.N.size() != 1)
            throw ConfigError("N: this experiment takes a single N", "N");
        std::set<ScenarioKind> seen(cfg.scenarios.begin(), cfg.scenarios.end());
        if (seen.size() != cfg.scenarios.size())
            throw ConfigError("scenarios: duplicate entry", "scenarios");
    } else {
        for (int j : cfg.J)
            if (j < 2) throw ConfigError("J: probability sweeps need J >= 2", "J");
        for (double s : cfg.snr_db)
            if (!std::isfinite(s)) throw ConfigError("snr_db: probability sweeps need finite SNR", "snr_db");
    }
}

ExperimentConfig parse_config(std::string_view text, std::optional<std::uint64_t> seed_override) {
    std::map<std::string, Entry> entries;
    std::size_t line_no = 0;
    for (auto line : split(text, '\n')) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = trim(line.substr(0, hash));
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError("expected key = value", std::string(line), line_no);
        const std::string key(trim(line.substr(0, eq)));
        const std::string value(trim(line.substr(eq + 1)));
        bool known = false;
        for (auto k : kKeys) known = known || k == key;
        if (!known) throw ConfigError("unknown key '" + key + "'", key, line_no);
        if (value.empty()) throw ConfigError(key + ": empty value", key, line_no);
        if (entries.count(key)) throw ConfigError("duplicate key '" + key + "'", key, line_no);
        entries.emplace(key, Entry{value, line_no});
    }

    ExperimentConfig cfg;
    for (const auto& [key, entry] : entries) {
        const Reader r(key, entry);
        if (key == "experiment") {
            try {
                cfg.experiment = parse_experiment(entry.value);
            } catch (const ConfigError& e) {
                throw ConfigError(e.what(), key, entry.line);
            }
        } else if (key == "J") cfg.J = r.list<int>();
        else if (key == "gamma2") cfg.gamma2 = r.scalar<double>();
        else if (key == "channels") cfg.channels = r.scalar<int>();
        else if (key == "blocks_per_channel") cfg.blocks_per_channel = r.scalar<int>();
        else if (key == "N") cfg.N = r.list<int>();
        else if (key == "snr_db") cfg.snr_db = r.list<double>();
        else if (key == "K") cfg.K = r.list<int>();
        else if (key == "master_seed") cfg.master_seed = r.scalar<std::uint64_t>();
        else if (key == "output_path") cfg.output_path = entry.value;
        else if (key == "max_solver_failures") cfg.max_solver_failures = r.scalar<int>();
        else if (key == "scenarios") {
            cfg.scenarios.clear();
            for (auto name : split(entry.value, ',')) {
                try {
                    cfg.scenarios.push_back(parse_scenario_kind(name));
                } catch (const InvalidArgument& e) {
                    r.fail(e.what());
                }
            }
        }
    }
    if (seed_override) cfg.master_seed = seed_override;

    try {
        validate_config(cfg);
    } catch (const ConfigError& e) {
        const auto it = entries.find(e.key());
        if (it != entries.end()) throw ConfigError(e.what(), e.key(), it->second.line);
        throw;
    }
    return cfg;
}

ExperimentConfig load_config(const std::string& path, std::optional<std::uint64_t> seed_override) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str(), seed_override);
}

std::string format_config(const ExperimentConfig& cfg) {
    std::ostringstream os;
    os << "experiment = " << to_string(cfg.experiment) << '\n';
    os << "J = ";
    join(os, cfg.J);
    os << "\ngamma2 = " << format_double(cfg.gamma2) << '\n';
    os << "channels = " << cfg.channels << '\n';
    os << "blocks_per_channel = " << cfg.blocks_per_channel << '\n';
    os << "N = ";
    join(os, cfg.N);
    os << "\nsnr_db = ";
    join(os, cfg.snr_db);
    os << '\n';
    if (!cfg.scenarios.empty()) {
        os << "scenarios = ";
        for (std::size_t i = 0; i < cfg.scenarios.size(); ++i)
            os << (i ? "," : "") << to_string(cfg.scenarios[i]);
        os << '\n';
    }
    os << "K = ";
    join(os, cfg.K);
    os << '\n';
    if (cfg.master_seed) os << "master_seed = " << *cfg.master_seed << '\n';
    if (!cfg.output_path.empty()) os << "output_path = " << cfg.output_path << '\n';
    os << "max_solver_failures = " << cfg.max_solver_failures << '\n';
    return os.str();
}

void write_config(const ExperimentConfig& cfg, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write config file '" + path + "'");
    out << format_config(cfg);
    if (!out) throw IoError("write failed for '" + path + "'");
}

} // namespace wls
