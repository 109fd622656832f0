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

#include "beta_solver.hpp"
#include "core_model.hpp"
#include "power_dual.hpp"
#include "sinr.hpp"

#include <cmath>
#include <string_view>
#include <vector>

namespace nomabc {

enum class Scheme
{
    noma_bc, // power + reflection coefficient
    noma_nb  // beta pinned to 0
};

inline std::string_view scheme_name(Scheme s)
{
    return s == Scheme::noma_bc ? "NOMA-BC" : "NOMA-NB";
}

struct CellOutcome
{
    PowerAlloc alloc;
    double sinr_n = 0.0;
    double sinr_m = 0.0;
    double rate_n = 0.0;
    double rate_m = 0.0;
    bool feasible = false;
};

struct SolveResult
{
    std::vector<CellOutcome> cells;
    double network_se = 0.0;        // sum over feasible cells
    std::vector<double> se_trace;   // network SE after each outer sweep
    int outer_iterations = 0;
    bool converged = false;
    int outage_count = 0;
    int max_dual_iterations = 0;    // worst single subproblem call
    int dual_unconverged_calls = 0;

    bool all_feasible() const { return outage_count == 0; }
};

namespace detail {

inline std::vector<double> cell_powers(const std::vector<PowerAlloc> &allocs)
{
    std::vector<double> p;
    p.reserve(allocs.size());
    for (const auto &a : allocs)
        p.push_back(a.p);
    return p;
}

} // namespace detail

/// Alternating outer loop. Each sweep visits cells in index order: refresh the
/// cell's interference, solve the power subproblem at the current beta, then
/// (NOMA-BC only) the beta subproblem at the new power split.
inline SolveResult solve_network(const ChannelRealization &real, const SystemConfig &cfg, Scheme scheme = Scheme::noma_bc)
{
    cfg.validate();
    const int J = real.num_cells();
    if (J != cfg.num_cells)
        throw ConfigError("invalid config: realization has " + std::to_string(J) + " cells, config expects " +
                          std::to_string(cfg.num_cells));
    const double p_tot = cfg.p_tot_linear();
    const double beta0 = scheme == Scheme::noma_bc ? 0.5 : 0.0;
    std::vector<PowerAlloc> allocs(static_cast<std::size_t>(J), PowerAlloc{p_tot, 0.25, 0.75, beta0});

    SolveResult res;
    res.cells.resize(static_cast<std::size_t>(J));
    for (int sweep = 1; sweep <= cfg.solver.max_outer; ++sweep)
    {
        const std::vector<double> snapshot = detail::cell_powers(allocs);
        for (int j = 0; j < J; ++j)
        {
            const std::vector<double> powers =
                cfg.coupling == Coupling::gauss_seidel ? detail::cell_powers(allocs) : snapshot;
            const CellChannel ch = cell_channel(real, powers, j, cfg.interference_model);
            PowerSolveOptions opt;
            opt.warm = &allocs[j];
            const PowerSolution ps = solve_power_subproblem(ch, allocs[j].beta, cfg, opt);
            res.max_dual_iterations = std::max(res.max_dual_iterations, ps.iterations);
            if (!ps.converged)
                ++res.dual_unconverged_calls;
            allocs[j] = ps.alloc;
            if (scheme == Scheme::noma_bc)
                allocs[j].beta = solve_beta(beta_coeffs(ch, allocs[j], cfg), cfg.r_req, cfg).beta;
        }

        const std::vector<double> powers = detail::cell_powers(allocs);
        double se = 0.0;
        int outage = 0;
        for (int j = 0; j < J; ++j)
        {
            const CellChannel ch = cell_channel(real, powers, j, cfg.interference_model);
            const RateCoeffs c = rate_coeffs(ch, allocs[j], cfg);
            CellOutcome &out = res.cells[j];
            out.alloc = allocs[j];
            out.sinr_n = sinr_n(c, allocs[j]);
            out.sinr_m = sinr_m(c, allocs[j]);
            out.rate_n = rate_from_sinr(out.sinr_n);
            out.rate_m = rate_from_sinr(out.sinr_m);
            out.feasible = qos_satisfied(c, allocs[j], cfg).all();
            if (out.feasible)
                se += out.rate_n + out.rate_m;
            else
                ++outage;
        }
        res.network_se = se;
        res.outage_count = outage;
        res.outer_iterations = sweep;
        const bool settled = !res.se_trace.empty() && std::abs(se - res.se_trace.back()) < cfg.solver.tol_outer;
        res.se_trace.push_back(se);
        if (settled)
        {
            res.converged = true;
            break;
        }
    }
    return res;
}

/// Pure NOMA benchmark: same pipeline with beta pinned to 0.
inline SolveResult noma_nb_baseline(const ChannelRealization &real, const SystemConfig &cfg)
{
    return solve_network(real, cfg, Scheme::noma_nb);
}

} // namespace nomabc
