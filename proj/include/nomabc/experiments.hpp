// nomabc: multi-cell NOMA backscatter spectral-efficiency optimizer
// Copyright (C) 2026 The nomabc authors
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

// Monte Carlo scenario sweeps with common random numbers: trial k draws one
// realization per cell count and every sweep point and scheme reuses it.

#include "config_json.hpp"
#include "core_model.hpp"
#include "optimizer.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

namespace nomabc {

enum class ScenarioId
{
    convergence,
    alpha_sweep,
    power_sweep
};

inline std::string scenario_name(ScenarioId id)
{
    switch (id)
    {
    case ScenarioId::convergence:
        return "convergence";
    case ScenarioId::alpha_sweep:
        return "alpha";
    case ScenarioId::power_sweep:
        return "power";
    }
    return "unknown";
}

inline ScenarioId parse_scenario(const std::string &name)
{
    if (name == "convergence")
        return ScenarioId::convergence;
    if (name == "alpha" || name == "alpha_sweep")
        return ScenarioId::alpha_sweep;
    if (name == "power" || name == "power_sweep")
        return ScenarioId::power_sweep;
    throw std::invalid_argument("unknown scenario '" + name + "' (expected convergence, alpha or power)");
}

struct ScenarioSpec
{
    ScenarioId id = ScenarioId::convergence;
    std::vector<double> sweep;        // alpha values or P_tot in dBm; unused for convergence
    std::vector<int> cell_counts;     // J values
    std::vector<double> rate_targets; // R_req values
    int trials = 500;
    std::uint64_t seed = 1;
    SystemConfig base;
    int workers = 0; // 0: hardware concurrency

    void validate() const
    {
        if (trials < 1)
            throw std::invalid_argument("trials must be >= 1");
        if (cell_counts.empty() || rate_targets.empty())
            throw std::invalid_argument("scenario needs at least one J and one R_req");
        for (int j : cell_counts)
            if (j < 1)
                throw std::invalid_argument("J must be >= 1");
        for (double r : rate_targets)
            if (!(r > 0.0))
                throw std::invalid_argument("R_req must be > 0");
        if (id == ScenarioId::alpha_sweep)
            for (double a : sweep)
                if (!(a >= 0.0 && a <= 1.0))
                    throw std::invalid_argument("alpha sweep values must lie in [0,1]");
        if (id == ScenarioId::power_sweep)
            for (double p : sweep)
                if (!std::isfinite(p))
                    throw std::invalid_argument("P_tot sweep values must be finite");
        if (id != ScenarioId::convergence && sweep.empty())
            throw std::invalid_argument("sweep values required");
        base.validate();
    }
};

/// Figure defaults on top of a base configuration.
inline ScenarioSpec default_spec(ScenarioId id, const SystemConfig &base = {})
{
    ScenarioSpec s;
    s.id = id;
    s.base = base;
    s.seed = base.rng_seed;
    switch (id)
    {
    case ScenarioId::convergence:
        s.cell_counts = {base.num_cells};
        s.rate_targets = {base.r_req};
        break;
    case ScenarioId::alpha_sweep:
        for (int k = 1; k <= 10; ++k)
            s.sweep.push_back(k / 10.0);
        s.cell_counts = {2, 5};
        s.rate_targets = {0.5};
        break;
    case ScenarioId::power_sweep:
        for (int dbm = 10; dbm <= 40; dbm += 5)
            s.sweep.push_back(dbm);
        s.cell_counts = {2};
        s.rate_targets = {0.5, 1.0};
        s.base.sic_error = 0.5;
        break;
    }
    return s;
}

struct ResultRow
{
    std::string scenario;
    int trial = 0;
    std::uint64_t seed = 0;
    int num_cells = 0;
    double alpha = 0.0;
    double p_tot_dbm = 0.0;
    double r_req = 0.0;
    int iteration = 0; // outer sweep index for convergence traces, 0 otherwise
    std::string scheme;
    double network_se = 0.0;
    bool converged = false;
    int outer_iterations = 0;
    int outage_count = 0;
};

struct SummaryRow
{
    std::string scenario;
    int num_cells = 0;
    double alpha = 0.0;
    double p_tot_dbm = 0.0;
    double r_req = 0.0;
    int iteration = 0;
    std::string scheme;
    double mean_se = 0.0;
    int trials = 0;
    double converged_fraction = 0.0;
    double mean_outage = 0.0;
};

struct ScenarioOutput
{
    ScenarioSpec spec;
    std::vector<ResultRow> rows;
    std::vector<SummaryRow> summary;
};

/// Independent, well-mixed seed for trial k.
inline std::uint64_t trial_seed(std::uint64_t base, int trial)
{
    std::uint64_t z = base + 0x9E3779B97F4A7C15ull * static_cast<std::uint64_t>(trial + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

namespace detail {

inline std::vector<ResultRow> run_trial(const ScenarioSpec &spec, int trial)
{
    const std::string name = scenario_name(spec.id);
    const std::uint64_t seed = trial_seed(spec.seed, trial);
    std::vector<ResultRow> rows;
    for (int J : spec.cell_counts)
    {
        SystemConfig cfg = spec.base;
        cfg.num_cells = J;
        const ChannelRealization real = draw_realization(cfg, seed);
        const std::vector<double> points = spec.id == ScenarioId::convergence ? std::vector<double>{0.0} : spec.sweep;
        for (double r : spec.rate_targets)
        {
            cfg.r_req = r;
            for (double v : points)
            {
                if (spec.id == ScenarioId::alpha_sweep)
                    cfg.sic_error = v;
                else if (spec.id == ScenarioId::power_sweep)
                    cfg.p_tot_dbm = v;
                for (Scheme scheme : {Scheme::noma_bc, Scheme::noma_nb})
                {
                    const SolveResult res = solve_network(real, cfg, scheme);
                    ResultRow row{name,
                                  trial,
                                  seed,
                                  J,
                                  cfg.sic_error,
                                  cfg.p_tot_dbm,
                                  cfg.r_req,
                                  0,
                                  std::string(scheme_name(scheme)),
                                  res.network_se,
                                  res.converged,
                                  res.outer_iterations,
                                  res.outage_count};
                    if (spec.id == ScenarioId::convergence)
                    {
                        for (std::size_t k = 0; k < res.se_trace.size(); ++k)
                        {
                            row.iteration = static_cast<int>(k) + 1;
                            row.network_se = res.se_trace[k];
                            rows.push_back(row);
                        }
                    }
                    else
                        rows.push_back(row);
                }
            }
        }
    }
    return rows;
}

inline auto row_key(const ResultRow &r)
{
    return std::make_tuple(r.trial, r.num_cells, r.r_req, r.alpha, r.p_tot_dbm, r.iteration, r.scheme);
}

inline std::vector<SummaryRow> summarize(const ScenarioSpec &spec, const std::vector<ResultRow> &rows)
{
    using Key = std::tuple<int, double, double, double, int, std::string>;
    struct Acc
    {
        double se = 0.0, outage = 0.0;
        int n = 0, conv = 0;
    };
    std::map<Key, Acc> acc;
    if (spec.id == ScenarioId::convergence)
    {
        // traces end at different sweeps; carry each trial's last value forward
        std::map<std::tuple<int, int, double, std::string>, std::vector<const ResultRow *>> traces;
        int longest = 0;
        for (const auto &r : rows)
        {
            traces[{r.trial, r.num_cells, r.r_req, r.scheme}].push_back(&r);
            longest = std::max(longest, r.iteration);
        }
        for (const auto &[k, trace] : traces)
        {
            for (int it = 1; it <= longest; ++it)
            {
                const ResultRow &r = *trace[std::min<std::size_t>(static_cast<std::size_t>(it), trace.size()) - 1];
                auto &a = acc[{r.num_cells, r.alpha, r.p_tot_dbm, r.r_req, it, r.scheme}];
                a.se += r.network_se;
                a.outage += r.outage_count;
                a.conv += r.converged;
                ++a.n;
            }
        }
    }
    else
    {
        for (const auto &r : rows)
        {
            auto &a = acc[{r.num_cells, r.alpha, r.p_tot_dbm, r.r_req, r.iteration, r.scheme}];
            a.se += r.network_se;
            a.outage += r.outage_count;
            a.conv += r.converged;
            ++a.n;
        }
    }
    std::vector<SummaryRow> out;
    for (const auto &[k, a] : acc)
    {
        const auto &[J, alpha, p, r, it, scheme] = k;
        out.push_back({scenario_name(spec.id), J, alpha, p, r, it, scheme, a.se / a.n, a.n,
                       static_cast<double>(a.conv) / a.n, a.outage / a.n});
    }
    return out;
}

} // namespace detail

/// Runs every trial (in parallel when workers != 1) and gathers rows in a fixed order.
inline ScenarioOutput run_scenario(const ScenarioSpec &spec)
{
    spec.validate();
    std::vector<std::vector<ResultRow>> per_trial(static_cast<std::size_t>(spec.trials));
    int workers = spec.workers > 0 ? spec.workers : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    workers = std::min(workers, spec.trials);
    std::atomic<int> next{0};
    auto work = [&]() {
        for (int k = next++; k < spec.trials; k = next++)
            per_trial[k] = detail::run_trial(spec, k);
    };
    if (workers <= 1)
        work();
    else
    {
        std::vector<std::jthread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back(work);
    }
    ScenarioOutput out;
    out.spec = spec;
    for (auto &v : per_trial)
        out.rows.insert(out.rows.end(), std::make_move_iterator(v.begin()), std::make_move_iterator(v.end()));
    std::stable_sort(out.rows.begin(), out.rows.end(),
                     [](const ResultRow &a, const ResultRow &b) { return detail::row_key(a) < detail::row_key(b); });
    out.summary = detail::summarize(spec, out.rows);
    return out;
}

inline ScenarioOutput run_convergence(ScenarioSpec spec)
{
    spec.id = ScenarioId::convergence;
    return run_scenario(spec);
}

inline ScenarioOutput run_alpha_sweep(ScenarioSpec spec)
{
    spec.id = ScenarioId::alpha_sweep;
    return run_scenario(spec);
}

inline ScenarioOutput run_power_sweep(ScenarioSpec spec)
{
    spec.id = ScenarioId::power_sweep;
    return run_scenario(spec);
}

// ---------------------------------------------------------------------------
// CSV

inline constexpr const char *kResultHeader =
    "scenario,trial,seed,num_cells,alpha,p_tot_dbm,r_req,iteration,scheme,network_se,converged,outer_iterations,"
    "outage_count";
inline constexpr const char *kSummaryHeader =
    "scenario,num_cells,alpha,p_tot_dbm,r_req,iteration,scheme,mean_se,trials,converged_fraction,mean_outage";

namespace detail {

inline std::string num(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

} // namespace detail

inline std::string results_csv(const std::vector<ResultRow> &rows)
{
    std::ostringstream os;
    os << kResultHeader << '\n';
    for (const auto &r : rows)
        os << r.scenario << ',' << r.trial << ',' << r.seed << ',' << r.num_cells << ',' << detail::num(r.alpha) << ','
           << detail::num(r.p_tot_dbm) << ',' << detail::num(r.r_req) << ',' << r.iteration << ',' << r.scheme << ','
           << detail::num(r.network_se) << ',' << (r.converged ? 1 : 0) << ',' << r.outer_iterations << ','
           << r.outage_count << '\n';
    return os.str();
}

inline std::string summary_csv(const std::vector<SummaryRow> &rows)
{
    std::ostringstream os;
    os << kSummaryHeader << '\n';
    for (const auto &r : rows)
        os << r.scenario << ',' << r.num_cells << ',' << detail::num(r.alpha) << ',' << detail::num(r.p_tot_dbm) << ','
           << detail::num(r.r_req) << ',' << r.iteration << ',' << r.scheme << ',' << detail::num(r.mean_se) << ','
           << r.trials << ',' << detail::num(r.converged_fraction) << ',' << detail::num(r.mean_outage) << '\n';
    return os.str();
}

inline nlohmann::json config_echo(const ScenarioSpec &spec)
{
    nlohmann::json j;
    j["scenario"] = scenario_name(spec.id);
    j["seed"] = spec.seed;
    j["trials"] = spec.trials;
    j["sweep"] = spec.sweep;
    j["num_cells"] = spec.cell_counts;
    j["r_req"] = spec.rate_targets;
    j["config"] = spec.base;
    j["p_tot_linear_mw"] = spec.base.p_tot_linear();
    return j;
}

namespace detail {

inline void write_file(const std::filesystem::path &path, const std::string &text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write '" + path.string() + "'");
    out << text;
    if (!out)
        throw std::runtime_error("write failed for '" + path.string() + "'");
}

} // namespace detail

/// Writes <scenario>.csv, <scenario>_summary.csv and config_echo.json into dir.
inline std::vector<std::filesystem::path> write_outputs(const ScenarioOutput &out, const std::filesystem::path &dir)
{
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec)
        throw std::runtime_error("cannot create output directory '" + dir.string() + "': " + ec.message());
    const std::string name = scenario_name(out.spec.id);
    const std::vector<std::filesystem::path> files{dir / (name + ".csv"), dir / (name + "_summary.csv"),
                                                   dir / "config_echo.json"};
    detail::write_file(files[0], results_csv(out.rows));
    detail::write_file(files[1], summary_csv(out.summary));
    detail::write_file(files[2], config_echo(out.spec).dump(2) + "\n");
    return files;
}

} // namespace nomabc
