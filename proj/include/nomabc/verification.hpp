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

// Acceptance checks shared by the acceptance test binary and `nomabc verify`.

#include "beta_solver.hpp"
#include "experiments.hpp"
#include "optimizer.hpp"
#include "oracle.hpp"
#include "polyroots.hpp"
#include "power_dual.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

namespace nomabc::verify {

struct CriterionResult
{
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

struct Budget
{
    int oracle_instances = 200;
    int calculus_points = 10000;
    int root_solver_calls = 10000;
    int root_polys = 10000;
    int trials = 500;
    int determinism_trials = 10;
    int workers = 0;
};

namespace detail {

class Stopwatch
{
public:
    double seconds() const
    {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

template <typename... Args>
std::string format(const char *fmt, Args... args)
{
    char buf[512];
    std::snprintf(buf, sizeof buf, fmt, args...);
    return buf;
}

/// Mixed absolute/relative closeness: |a - b| <= tol * max(|b|, floor).
inline bool close(double a, double b, double tol, double floor)
{
    return std::abs(a - b) <= tol * std::max(std::abs(b), floor);
}

/// Random point for the calculus checks: channels from a seeded multi-cell draw
/// with every interferer at full power, then a random (P, phi_n, beta) in the box.
struct CalculusPoint
{
    CellChannel ch;
    double p, phi_n, beta;
};

inline CalculusPoint calculus_point(Rng &rng, const SystemConfig &base)
{
    std::uniform_int_distribution<int> cells(1, 5);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    SystemConfig cfg = base;
    cfg.num_cells = cells(rng);
    const auto real = draw_realization(cfg, rng());
    const std::vector<double> powers(static_cast<std::size_t>(cfg.num_cells), cfg.p_tot_linear());
    const int j = std::uniform_int_distribution<int>(0, cfg.num_cells - 1)(rng);
    CalculusPoint pt;
    pt.ch = cell_channel(real, powers, j, cfg.interference_model);
    pt.p = cfg.p_tot_linear() * std::max(1e-3, unit(rng));
    pt.phi_n = std::max(1e-3, 0.5 * unit(rng));
    pt.beta = unit(rng);
    return pt;
}

/// Like calculus_point, redrawn until the point meets Z1-Z6.
inline CalculusPoint feasible_calculus_point(Rng &rng, const SystemConfig &base)
{
    while (true)
    {
        auto pt = calculus_point(rng, base);
        const PowerAlloc a{pt.p, pt.phi_n, 1.0 - pt.phi_n, pt.beta};
        if (qos_satisfied(rate_coeffs(pt.ch, pt.beta, base), a, base, 0.0).all())
            return pt;
    }
}

// Long-double reference evaluators, written from the SINR definitions.
using Real = long double;

inline Real sum_rate_ld(const RateCoeffs &c, Real p, Real x, Real y)
{
    const Real gn = p * x * c.f_n / (p * y * c.h_n + c.q_n);
    const Real gm = p * y * c.f_m / (p * x * c.h_m + c.q_m);
    return (std::log1p(gn) + std::log1p(gm)) / std::log(Real(2));
}

inline Real beta_rate_ld(const BetaCoeffs &b, Real beta)
{
    const Real gn = (b.e_n + beta * b.t_n) / b.v_n;
    const Real gm = (b.e_m + beta * b.t_m) / (b.v_m + beta * b.eta_m);
    return (std::log1p(gn) + std::log1p(gm)) / std::log(Real(2));
}

/// Smallest D / |D'| over the linear denominators: the length scale on which
/// the rate function curves. Steps may leave the box; the
/// log-linear form stays valid while every denominator is positive.
inline Real phi_length_scale(const RateCoeffs &c, Real p, Real x, Real y)
{
    const Real fn = p * c.f_n, hn = p * c.h_n, fm = p * c.f_m, hm = p * c.h_m;
    Real s = std::numeric_limits<Real>::infinity();
    auto upd = [&](Real d, Real slope) {
        if (slope != 0)
            s = std::min(s, d / std::abs(slope));
    };
    upd(fn * x + hn * y + c.q_n, std::max(fn, hn));
    upd(hn * y + c.q_n, hn);
    upd(fm * y + hm * x + c.q_m, std::max(fm, hm));
    upd(hm * x + c.q_m, hm);
    return std::isfinite(s) ? s : Real(1);
}

inline Real beta_length_scale(const BetaCoeffs &b, Real beta)
{
    Real s = std::numeric_limits<Real>::infinity();
    auto upd = [&](Real d, Real slope) {
        if (slope != 0)
            s = std::min(s, d / std::abs(slope));
    };
    upd(b.e_n + b.v_n + beta * b.t_n, b.t_n);
    upd(b.v_m + beta * b.eta_m, b.eta_m);
    upd(b.v_m + b.e_m + beta * (b.eta_m + b.t_m), b.eta_m + b.t_m);
    return std::isfinite(s) ? s : Real(1);
}

/// Richardson-extrapolated central differences (fourth order) of a 1-D function.
template <typename F>
Real richardson_d1(F f, Real x, Real h)
{
    auto d = [&](Real k) { return (f(x + k) - f(x - k)) / (2 * k); };
    return (4 * d(h / 2) - d(h)) / 3;
}

template <typename F>
Real richardson_d2(F f, Real x, Real h)
{
    auto d = [&](Real k) { return (f(x + k) - 2 * f(x) + f(x - k)) / (k * k); };
    return (4 * d(h / 2) - d(h)) / 3;
}

template <typename F>
Real richardson_mixed(F f, Real x, Real y, Real h)
{
    auto d = [&](Real k) { return (f(x + k, y + k) - f(x + k, y - k) - f(x - k, y + k) + f(x - k, y - k)) / (4 * k * k); };
    return (4 * d(h / 2) - d(h)) / 3;
}

} // namespace detail

// ---------------------------------------------------------------------------

/// Single-cell solver against the exhaustive grid at step 1e-3.
inline CriterionResult oracle_equivalence(const Budget &budget = {})
{
    detail::Stopwatch sw;
    CriterionResult r{1, "oracle equivalence (single cell vs 1e-3 grid)", false, {}, 0.0};
    constexpr double step = 1e-3;
    const double alphas[3] = {0.0, 0.5, 1.0};
    int used = 0, violations = 0, skipped = 0;
    double worst_gap = -1e300;
    Rng bound_rng(20260101);
    for (std::uint64_t seed = 1; used < budget.oracle_instances && seed < 100000; ++seed)
    {
        SystemConfig cfg;
        cfg.num_cells = 1;
        cfg.sic_error = alphas[seed % 3];
        const auto real = draw_realization(cfg, seed);
        oracle::GridResult grid;
        try
        {
            grid = oracle::grid_search(real, cfg, step, oracle::GridMode::power_monotone);
        }
        catch (const oracle::OracleError &)
        {
            ++skipped; // nothing feasible on the grid
            continue;
        }
        ++used;
        const auto res = solve_network(real, cfg);
        const std::vector<double> powers{res.cells[0].alloc.p};
        const double bound = oracle::grid_granularity_bound(cell_channel(real, powers, 0), cfg, step, bound_rng);
        const double gap = grid.se - res.network_se;
        worst_gap = std::max(worst_gap, gap);
        if (!res.cells[0].feasible || res.network_se < grid.se - bound)
            ++violations;
    }
    r.seconds = sw.seconds();
    r.passed = used == budget.oracle_instances && violations == 0 && r.seconds < 60.0;
    r.detail = detail::format("%d instances (%d grid-infeasible skipped), %d violations, max(grid - solver) = %.3g, %.1f s",
                              used, skipped, violations, worst_gap, r.seconds);
    return r;
}

/// Closed-form Hessian and beta derivatives against finite differences.
inline CriterionResult calculus_fidelity(const Budget &budget = {})
{
    using detail::Real;
    detail::Stopwatch sw;
    CriterionResult r{2, "calculus fidelity (Hessian, beta derivatives)", false, {}, 0.0};
    const SystemConfig base;
    Rng rng(424242);
    int hess_bad = 0, d1_bad = 0, d2_bad = 0, d2_positive = 0, alt_bad = 0;
    double worst_h = 0, worst_d1 = 0, worst_d2 = 0;
    for (int i = 0; i < budget.calculus_points; ++i)
    {
        const auto pt = detail::feasible_calculus_point(rng, base);
        const RateCoeffs c = rate_coeffs(pt.ch, pt.beta, base);
        const double x = pt.phi_n, y = 1.0 - pt.phi_n;

        // Hessian in (phi_n, phi_m)
        const Real h = Real(1e-3) * detail::phi_length_scale(c, pt.p, x, y);
        auto f2 = [&](Real a, Real b) { return detail::sum_rate_ld(c, pt.p, a, b); };
        const double fd11 = static_cast<double>(detail::richardson_d2([&](Real a) { return f2(a, y); }, x, h));
        const double fd22 = static_cast<double>(detail::richardson_d2([&](Real b) { return f2(x, b); }, y, h));
        const double fd12 = static_cast<double>(detail::richardson_mixed(f2, x, y, h));
        const auto e = oracle::hessian_entries(c, pt.p, x, y);
        const double floor = 1e-8 * std::max({std::abs(fd11), std::abs(fd22), std::abs(fd12)});
        bool ok = true;
        for (auto [a, b] : {std::pair{e.phi11, fd11}, {e.phi22, fd22}, {e.phi12, fd12}, {e.phi21, fd12}})
        {
            ok = ok && detail::close(a, b, 1e-5, floor);
            worst_h = std::max(worst_h, std::abs(a - b) / std::max(std::abs(b), floor));
        }
        hess_bad += !ok;
        const auto alt = oracle::hessian_entries_alt_sign(c, pt.p, x, y);
        alt_bad += !detail::close(alt.phi12, fd12, 1e-5, floor);

        // beta derivatives at the point's power split
        const BetaCoeffs bc = beta_coeffs(pt.ch, PowerAlloc{pt.p, x, y, pt.beta}, base);
        const Real hb = Real(1e-3) * detail::beta_length_scale(bc, pt.beta);
        auto fb = [&](Real b) { return detail::beta_rate_ld(bc, b); };
        const double fd1 = static_cast<double>(detail::richardson_d1(fb, pt.beta, hb));
        const double fd2 = static_cast<double>(detail::richardson_d2(fb, pt.beta, hb));
        const double d1 = oracle::beta_first_derivative(bc, pt.beta);
        const double d2 = oracle::beta_second_derivative(bc, pt.beta);
        d1_bad += !detail::close(d1, fd1, 1e-6, 1e-300);
        d2_bad += !detail::close(d2, fd2, 1e-5, 1e-300);
        d2_positive += !(d2 <= 0.0);
        worst_d1 = std::max(worst_d1, std::abs(d1 - fd1) / std::abs(fd1));
        worst_d2 = std::max(worst_d2, std::abs(d2 - fd2) / std::abs(fd2));
    }
    r.seconds = sw.seconds();
    r.passed = hess_bad == 0 && d1_bad == 0 && d2_bad == 0 && d2_positive == 0;
    r.detail = detail::format("%d feasible points: Hessian mismatches %d (worst rel %.2g), dSE/dbeta mismatches %d (worst %.2g), "
                              "d2SE/dbeta2 mismatches %d (worst %.2g), d2 > 0 at %d; opposite-sign mixed term off at %d",
                              budget.calculus_points, hess_bad, worst_h, d1_bad, worst_d1, d2_bad, worst_d2,
                              d2_positive, alt_bad);
    return r;
}

/// Residuals of every root the power solver extracts, plus polyroots vs bisection.
inline CriterionResult root_quality(const Budget &budget = {})
{
    detail::Stopwatch sw;
    CriterionResult r{3, "root quality (solver roots, polyroots vs bisection)", false, {}, 0.0};
    long long roots_seen = 0, bad_residual = 0;
    double worst_res = 0.0;
    RootObserver obs = [&](const Poly4 &p, double root) {
        ++roots_seen;
        const double res = p.scaled_residual(root);
        worst_res = std::max(worst_res, res);
        bad_residual += res > 1e-8;
    };
    Rng rng(777);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const SystemConfig base;
    for (int call = 0; call < budget.root_solver_calls; ++call)
    {
        SystemConfig cfg = base;
        cfg.sic_error = unit(rng);
        cfg.r_req = 0.1 + 1.4 * unit(rng);
        auto pt = detail::calculus_point(rng, cfg);
        DualState dual{unit(rng), unit(rng), 0.01 * unit(rng), unit(rng), 0.0, 0};
        const RateCoeffs c = rate_coeffs(pt.ch, pt.beta, cfg);
        // one full subproblem solve plus a direct candidate pass at random multipliers
        PowerSolveOptions opt;
        opt.observer = &obs;
        (void)solve_power_subproblem(pt.ch, pt.beta, cfg, opt);
        for (double x : phi_candidates(c, pt.p, dual, cfg, pt.phi_n, &obs))
            (void)power_candidates(c, x, dual, cfg, &obs);
    }

    int mismatches = 0;
    double worst_diff = 0.0;
    std::uniform_real_distribution<double> coef(-1e3, 1e3);
    for (int i = 0; i < budget.root_polys; ++i)
    {
        Poly4 p{{coef(rng), coef(rng), coef(rng), coef(rng), coef(rng)}};
        const auto got = real_roots(p);
        const auto want = oracle::bisection_real_roots(p);
        bool same = got.size() == want.size();
        for (std::size_t k = 0; same && k < got.size(); ++k)
        {
            worst_diff = std::max(worst_diff, std::abs(got[k] - want[k]));
            same = std::abs(got[k] - want[k]) <= 1e-7;
        }
        for (double root : got)
            bad_residual += p.scaled_residual(root) > 1e-8;
        mismatches += !same;
    }
    r.seconds = sw.seconds();
    r.passed = bad_residual == 0 && mismatches == 0 && roots_seen > 0;
    r.detail = detail::format("%d solver calls, %lld roots, %lld residual violations (worst %.2g); %d random polys, "
                              "%d mismatches vs bisection (worst |diff| %.2g)",
                              budget.root_solver_calls, roots_seen, bad_residual, worst_res, budget.root_polys,
                              mismatches, worst_diff);
    return r;
}

namespace detail {

/// Z1-Z6 recomputed from the raw gains of the realization.
inline bool raw_constraints_hold(const ChannelRealization &real, const SystemConfig &cfg,
                                 const std::vector<CellOutcome> &cells, int j, double rel)
{
    const auto &g = real.cells[j];
    const auto &a = cells[j].alloc;
    double in = 0.0, im = 0.0;
    for (int jp = 0; jp < real.num_cells(); ++jp)
        if (jp != j)
        {
            const double pj = cells[jp].alloc.p;
            if (cfg.interference_model == InterferenceModel::per_interferer)
            {
                in += pj * real.cross_gain(j, jp, User::n);
                im += pj * real.cross_gain(j, jp, User::m);
            }
        }
    if (cfg.interference_model == InterferenceModel::factored)
    {
        std::vector<double> powers;
        for (const auto &c : cells)
            powers.push_back(c.alloc.p);
        in = intercell_interference(real, powers, j, User::n, cfg.interference_model);
        im = intercell_interference(real, powers, j, User::m, cfg.interference_model);
    }
    const double t = std::exp2(cfg.r_req) - 1.0;
    const double th_n = a.beta * g.bs_to_bd * g.bd_to_n, th_m = a.beta * g.bs_to_bd * g.bd_to_m;
    const double sig_n = a.p * a.phi_n * (g.gain_n + th_n);
    const double den_n = a.p * a.phi_m * g.gain_n * cfg.sic_error + in + cfg.noise_var;
    const double sig_m = a.p * a.phi_m * (g.gain_m + th_m);
    const double den_m = a.p * a.phi_n * (g.gain_m + th_m) + im + cfg.noise_var;
    const double p_tot = cfg.p_tot_linear();
    return nomabc::detail::at_least(sig_n, t * den_n, rel) && nomabc::detail::at_least(sig_m, t * den_m, rel) &&
           nomabc::detail::at_least(a.phi_m, a.phi_n, rel) && a.p >= 0.0 && nomabc::detail::at_least(p_tot, a.p, rel) &&
           nomabc::detail::at_least(1.0, a.phi_n + a.phi_m, rel) && a.beta >= 0.0 && a.beta <= 1.0;
}

} // namespace detail

/// Every feasible-flagged cell of 500 five-cell trials meets Z1-Z6 within 1e-6.
inline CriterionResult constraint_satisfaction(const Budget &budget = {})
{
    detail::Stopwatch sw;
    CriterionResult r{4, "constraint satisfaction (J=5 trials, 1e-6 relative)", false, {}, 0.0};
    SystemConfig cfg;
    cfg.num_cells = 5;
    long long checked = 0, bad = 0;
    for (int k = 0; k < budget.trials; ++k)
    {
        const auto real = draw_realization(cfg, trial_seed(cfg.rng_seed, k));
        for (Scheme s : {Scheme::noma_bc, Scheme::noma_nb})
        {
            const auto res = solve_network(real, cfg, s);
            for (int j = 0; j < cfg.num_cells; ++j)
            {
                if (!res.cells[j].feasible)
                    continue;
                ++checked;
                bad += !detail::raw_constraints_hold(real, cfg, res.cells, j, 1e-6);
            }
        }
    }
    r.seconds = sw.seconds();
    r.passed = bad == 0 && checked > 0;
    r.detail = detail::format("%lld feasible cells checked, %lld violations, %.1f s", checked, bad, r.seconds);
    return r;
}

struct TrendSweeps
{
    ScenarioOutput alpha;
    ScenarioOutput power;
    double seconds = 0.0;
};

inline TrendSweeps run_trend_sweeps(const Budget &budget = {})
{
    detail::Stopwatch sw;
    TrendSweeps t;
    auto a = default_spec(ScenarioId::alpha_sweep);
    a.trials = budget.trials;
    a.workers = budget.workers;
    auto p = default_spec(ScenarioId::power_sweep);
    p.trials = budget.trials;
    p.workers = budget.workers;
    t.alpha = run_scenario(a);
    t.power = run_scenario(p);
    t.seconds = sw.seconds();
    return t;
}

namespace detail {

/// Pairs NOMA-BC and NOMA-NB rows sharing trial and sweep point.
inline void paired_dominance(const std::vector<ResultRow> &rows, long long &pairs, long long &violations, double &worst)
{
    std::map<std::tuple<int, int, double, double, double, int>, std::pair<const ResultRow *, const ResultRow *>> m;
    for (const auto &r : rows)
    {
        auto &slot = m[{r.trial, r.num_cells, r.alpha, r.p_tot_dbm, r.r_req, r.iteration}];
        (r.scheme == "NOMA-BC" ? slot.first : slot.second) = &r;
    }
    for (const auto &[k, pr] : m)
    {
        if (!pr.first || !pr.second)
            continue;
        ++pairs;
        const double gap = pr.second->network_se - pr.first->network_se;
        worst = std::max(worst, gap);
        violations += gap > 1e-9;
    }
}

} // namespace detail

inline CriterionResult paired_dominance(const TrendSweeps &t)
{
    CriterionResult r{5, "paired dominance NOMA-BC >= NOMA-NB - 1e-9", false, {}, 0.0};
    long long pairs = 0, bad = 0;
    double worst = -1e300;
    detail::paired_dominance(t.alpha.rows, pairs, bad, worst);
    detail::paired_dominance(t.power.rows, pairs, bad, worst);
    r.passed = bad == 0 && pairs > 0;
    r.seconds = t.seconds;
    r.detail = detail::format("%lld paired realizations over all sweep points, %lld violations, max(NB - BC) = %.3g",
                              pairs, bad, worst);
    return r;
}

inline CriterionResult trends(const TrendSweeps &t)
{
    CriterionResult r{6, "trends (alpha strictly down, P_tot non-decreasing, R_req down)", false, {}, 0.0};
    int alpha_bad = 0, power_bad = 0, rate_bad = 0, alpha_pairs = 0, power_pairs = 0, rate_pairs = 0;
    // summaries are ordered by (J, alpha, P, R, iteration, scheme)
    std::map<std::pair<int, std::string>, std::vector<std::pair<double, double>>> by_alpha;
    for (const auto &s : t.alpha.summary)
        by_alpha[{s.num_cells, s.scheme}].push_back({s.alpha, s.mean_se});
    for (auto &[k, v] : by_alpha)
    {
        std::sort(v.begin(), v.end());
        for (std::size_t i = 1; i < v.size(); ++i, ++alpha_pairs)
            alpha_bad += !(v[i].second < v[i - 1].second);
    }
    std::map<std::pair<double, std::string>, std::vector<std::pair<double, double>>> by_power;
    std::map<std::pair<double, std::string>, std::map<double, double>> by_rate;
    for (const auto &s : t.power.summary)
    {
        by_power[{s.r_req, s.scheme}].push_back({s.p_tot_dbm, s.mean_se});
        by_rate[{s.p_tot_dbm, s.scheme}][s.r_req] = s.mean_se;
    }
    for (auto &[k, v] : by_power)
    {
        std::sort(v.begin(), v.end());
        for (std::size_t i = 1; i < v.size(); ++i, ++power_pairs)
            power_bad += !(v[i].second >= v[i - 1].second);
    }
    for (const auto &[k, m] : by_rate)
    {
        if (m.count(0.5) && m.count(1.0))
        {
            ++rate_pairs;
            rate_bad += !(m.at(1.0) <= m.at(0.5));
        }
    }
    r.seconds = t.seconds;
    r.passed = alpha_bad == 0 && power_bad == 0 && rate_bad == 0 && alpha_pairs > 0 && power_pairs > 0 &&
               rate_pairs > 0 && t.seconds < 300.0;
    r.detail = detail::format("alpha: %d/%d consecutive pairs strictly decreasing; P_tot: %d/%d non-decreasing; "
                              "R_req: %d/%d ordered; sweeps took %.1f s",
                              alpha_pairs - alpha_bad, alpha_pairs, power_pairs - power_bad, power_pairs,
                              rate_pairs - rate_bad, rate_pairs, t.seconds);
    return r;
}

/// >= 95% of all-feasible five-cell trials settle within the sweep and dual caps.
inline CriterionResult convergence(const Budget &budget = {})
{
    detail::Stopwatch sw;
    CriterionResult r{7, "convergence (J=5, tol_outer 1e-4, <= 50 sweeps, <= 500 dual iterations)", false, {}, 0.0};
    SystemConfig cfg;
    cfg.num_cells = 5;
    int feasible = 0, converged = 0, dual_over = 0;
    for (int k = 0; k < budget.trials; ++k)
    {
        const auto real = draw_realization(cfg, trial_seed(cfg.rng_seed, k));
        for (Scheme s : {Scheme::noma_bc, Scheme::noma_nb})
        {
            const auto res = solve_network(real, cfg, s);
            dual_over += res.max_dual_iterations > 500;
            if (!res.all_feasible())
                continue;
            ++feasible;
            converged += res.converged && res.outer_iterations <= 50 && res.max_dual_iterations <= 500;
        }
    }
    r.seconds = sw.seconds();
    const double frac = feasible ? static_cast<double>(converged) / feasible : 0.0;
    r.passed = feasible > 0 && frac >= 0.95 && dual_over == 0;
    r.detail = detail::format("%d/%d all-feasible (trial, scheme) runs converged (%.1f%%)", converged, feasible,
                              100.0 * frac);
    return r;
}

/// Same spec and seed, serial vs threaded, written twice: byte-identical files.
inline CriterionResult determinism(const Budget &budget = {})
{
    detail::Stopwatch sw;
    CriterionResult r{8, "determinism (byte-identical CSVs)", false, {}, 0.0};
    namespace fs = std::filesystem;
    const fs::path root = fs::temp_directory_path() / ("nomabc_determinism_" + std::to_string(std::chrono::steady_clock::now().time_since_epoch().count()));
    int identical = 0, total = 0;
    auto slurp = [](const fs::path &p) {
        std::ifstream in(p, std::ios::binary);
        return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    };
    for (ScenarioId id : {ScenarioId::convergence, ScenarioId::alpha_sweep, ScenarioId::power_sweep})
    {
        auto spec = default_spec(id);
        spec.trials = budget.determinism_trials;
        spec.seed = 99;
        spec.workers = 1;
        const auto a = run_scenario(spec);
        spec.workers = 4;
        const auto b = run_scenario(spec);
        const auto fa = write_outputs(a, root / "a");
        const auto fb = write_outputs(b, root / "b");
        for (std::size_t i = 0; i < fa.size(); ++i, ++total)
            identical += slurp(fa[i]) == slurp(fb[i]) && !slurp(fa[i]).empty();
    }
    std::error_code ec;
    fs::remove_all(root, ec);
    r.seconds = sw.seconds();
    r.passed = identical == total;
    r.detail = detail::format("%d/%d output files byte-identical across runs", identical, total);
    return r;
}

inline std::vector<CriterionResult> run_suite(const std::string &suite, const Budget &budget = {})
{
    std::vector<CriterionResult> out;
    if (suite == "oracle" || suite == "all")
    {
        out.push_back(oracle_equivalence(budget));
        out.push_back(root_quality(budget));
    }
    if (suite == "calculus" || suite == "all")
        out.push_back(calculus_fidelity(budget));
    if (suite == "trends" || suite == "all")
    {
        out.push_back(constraint_satisfaction(budget));
        const auto sweeps = run_trend_sweeps(budget);
        out.push_back(paired_dominance(sweeps));
        out.push_back(trends(sweeps));
        out.push_back(convergence(budget));
        out.push_back(determinism(budget));
    }
    if (out.empty())
        throw std::invalid_argument("unknown suite '" + suite + "' (expected oracle, calculus, trends or all)");
    std::sort(out.begin(), out.end(), [](const auto &a, const auto &b) { return a.id < b.id; });
    return out;
}

inline std::string format_line(const CriterionResult &r)
{
    return detail::format("[%s] criterion %d: %s -- %s", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(),
                          r.detail.c_str());
}

} // namespace nomabc::verify
