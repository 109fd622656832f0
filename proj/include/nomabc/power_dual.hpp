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

// Power subproblem: for a fixed reflection coefficient, choose the BS power P
// and the split (phi_n, phi_m = 1 - phi_n) of one cell by maximizing the
// Lagrangian over closed-form stationary candidates, then moving the four
// multipliers by a projected subgradient step.

#include "core_model.hpp"
#include "polyroots.hpp"
#include "sinr.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <optional>
#include <span>
#include <vector>

namespace nomabc {

/// Multipliers of Z1 (lambda_n), Z2 (lambda_m), the power budget (pi_1) and
/// the split budget (pi_2).
struct DualState
{
    double lambda_n = 0.0;
    double lambda_m = 0.0;
    double pi_1 = 0.0;
    double pi_2 = 0.0;
    double step = 0.0;
    int iteration = 0;

    static DualState uniform(double v) { return {v, v, v, v, 0.0, 0}; }
    static DualState zero() { return uniform(0.0); }

    double max_abs_diff(const DualState &o) const
    {
        return std::max({std::abs(lambda_n - o.lambda_n), std::abs(lambda_m - o.lambda_m), std::abs(pi_1 - o.pi_1),
                         std::abs(pi_2 - o.pi_2)});
    }
};

/// Slacks paired with the multipliers: Z1, Z2, P_tot - P, 1 - phi_n - phi_m.
struct DualSlacks
{
    double z1 = 0.0;
    double z2 = 0.0;
    double power = 0.0;
    double split = 0.0;
};

/// quadratic * x^2 + linear * x + constant = 0 in phi_n.
struct PhiQuadratic
{
    double quadratic = 0.0;
    double linear = 0.0;
    double constant = 0.0;
    double upsilon = 0.0; // frozen weak-user term minus the multiplier gradient

    Poly4 as_poly() const { return Poly4{{constant, linear, quadratic, 0.0, 0.0}}; }
};

/// Stationarity polynomial of the Lagrangian in P, expressed in u = P / scale.
struct PowerQuartic
{
    Poly4 poly;
    double scale = 1.0;
};

using RootObserver = std::function<void(const Poly4 &, double)>;

inline double step_size(double step0, int t)
{
    return step0 / std::sqrt(static_cast<double>(std::max(t, 1)));
}

inline DualSlacks dual_slacks(const RateCoeffs &c, double p, double phi_n, double phi_m, const SystemConfig &cfg)
{
    const auto q = qos_slacks(c, p, phi_n, phi_m, cfg.sinr_target());
    return {q.z1, q.z2, cfg.p_tot_linear() - p, 1.0 - phi_n - phi_m};
}

/// v <- max(0, v - step * slack) for every multiplier: a violated constraint
/// (negative slack) raises its multiplier.
inline DualState dual_update(const DualState &dual, const DualSlacks &s, double step)
{
    DualState next = dual;
    next.lambda_n = std::max(0.0, dual.lambda_n - step * s.z1);
    next.lambda_m = std::max(0.0, dual.lambda_m - step * s.z2);
    next.pi_1 = std::max(0.0, dual.pi_1 - step * s.power);
    next.pi_2 = std::max(0.0, dual.pi_2 - step * s.split);
    next.step = step;
    next.iteration = dual.iteration + 1;
    return next;
}

inline double lagrangian_value(const RateCoeffs &c, const PowerAlloc &a, const DualState &dual, const SystemConfig &cfg)
{
    const auto s = dual_slacks(c, a.p, a.phi_n, a.phi_m, cfg);
    return cell_se(c, a) + dual.lambda_n * s.z1 + dual.lambda_m * s.z2 + dual.pi_1 * s.power + dual.pi_2 * s.split;
}

inline double lagrangian_value(const RateCoeffs &c, double p, double phi_n, const DualState &dual, const SystemConfig &cfg)
{
    return lagrangian_value(c, PowerAlloc{p, phi_n, 1.0 - phi_n, 0.0}, dual, cfg);
}

/// Multiplier part of dL/dphi_n along phi_m = 1 - phi_n (natural-log units).
inline double phi_multiplier_gradient(const RateCoeffs &c, double p, const DualState &dual, const SystemConfig &cfg)
{
    const double t = cfg.sinr_target();
    return p * (dual.lambda_n * (c.f_n + t * c.h_n) - dual.lambda_m * (c.f_m + t * c.h_m));
}

/// Multiplier part of dL/dP at fixed phi_n.
inline double power_multiplier_gradient(const RateCoeffs &c, double phi_n, const DualState &dual, const SystemConfig &cfg)
{
    const double t = cfg.sinr_target();
    const double phi_m = 1.0 - phi_n;
    return dual.lambda_n * (phi_n * c.f_n - t * phi_m * c.h_n) + dual.lambda_m * (phi_m * c.f_m - t * phi_n * c.h_m) -
           dual.pi_1;
}

/// dL/dphi_n along phi_m = 1 - phi_n.
inline double lagrangian_dphi(const RateCoeffs &c, double p, double x, const DualState &dual, const SystemConfig &cfg)
{
    const double y = 1.0 - x;
    double d = p * (c.f_n - c.h_n) / (p * x * c.f_n + p * y * c.h_n + c.q_n) + p * c.h_n / (p * y * c.h_n + c.q_n) +
               p * (c.h_m - c.f_m) / (p * y * c.f_m + p * x * c.h_m + c.q_m) - p * c.h_m / (p * x * c.h_m + c.q_m);
    return d / std::numbers::ln2 + phi_multiplier_gradient(c, p, dual, cfg);
}

/// dL/dP at fixed phi_n.
inline double lagrangian_dpower(const RateCoeffs &c, double p, double x, const DualState &dual, const SystemConfig &cfg)
{
    const double y = 1.0 - x;
    const double an = x * c.f_n + y * c.h_n, cn = y * c.h_n;
    const double am = y * c.f_m + x * c.h_m, cm = x * c.h_m;
    const double d = an / (an * p + c.q_n) - cn / (cn * p + c.q_n) + am / (am * p + c.q_m) - cm / (cm * p + c.q_m);
    return d / std::numbers::ln2 + power_multiplier_gradient(c, x, dual, cfg);
}

namespace detail {

struct Linear
{
    double c0 = 0.0;
    double c1 = 0.0;
};

inline Poly4 poly_mul(const Poly4 &a, Linear l)
{
    Poly4 r;
    for (int k = 0; k < 5; ++k)
    {
        r.c[k] += a.c[k] * l.c0;
        if (k + 1 < 5)
            r.c[k + 1] += a.c[k] * l.c1;
    }
    return r;
}

/// Numerator of sum_i num_i / den_i + constant over the common denominator.
/// Terms with a zero numerator are dropped together with their denominator.
inline Poly4 clear_denominators(std::span<const double> nums, std::span<const Linear> dens, double constant)
{
    std::vector<std::size_t> live;
    for (std::size_t i = 0; i < nums.size(); ++i)
        if (nums[i] != 0.0)
            live.push_back(i);
    Poly4 total;
    for (std::size_t i : live)
    {
        Poly4 term{{nums[i], 0, 0, 0, 0}};
        for (std::size_t k : live)
            if (k != i)
                term = poly_mul(term, dens[k]);
        for (int d = 0; d < 5; ++d)
            total.c[d] += term.c[d];
    }
    if (constant != 0.0)
    {
        Poly4 term{{constant, 0, 0, 0, 0}};
        for (std::size_t k : live)
            term = poly_mul(term, dens[k]);
        for (int d = 0; d < 5; ++d)
            total.c[d] += term.c[d];
    }
    return total;
}

inline bool in_phi_range(double x) { return x > 0.0 && x <= 0.5; }

inline void push_unique(std::vector<double> &v, double x)
{
    for (double e : v)
        if (std::abs(e - x) <= 1e-12 * std::max(1.0, std::abs(x)))
            return;
    v.push_back(x);
}

inline std::vector<double> observed_roots(const Poly4 &p, const RootObserver *obs)
{
    if (p.max_abs_coeff() == 0.0)
        return {};
    auto roots = real_roots(p);
    if (obs)
        for (double r : roots)
            (*obs)(p, r);
    return roots;
}

} // namespace detail

/// Quadratic in phi_n obtained by freezing the weak-user term P H_m / (P phi_n H_m + Q_m)
/// at phi_prev. With b = P H_n + Q_n, a1 = P (F_n - H_n), a2 = P H_n:
///   a1 / (a1 x + b) + a2 / (b - a2 x) - upsilon = 0.
inline PhiQuadratic phi_quadratic(const RateCoeffs &c, double p, const DualState &dual, const SystemConfig &cfg,
                                  double phi_prev)
{
    const double frozen = p * c.h_m / (p * phi_prev * c.h_m + c.q_m) -
                          p * (c.h_m - c.f_m) / (p * (1.0 - phi_prev) * c.f_m + p * phi_prev * c.h_m + c.q_m);
    PhiQuadratic q;
    q.upsilon = frozen - std::numbers::ln2 * phi_multiplier_gradient(c, p, dual, cfg);
    const double a1 = p * (c.f_n - c.h_n);
    const double a2 = p * c.h_n;
    const double b = p * c.h_n + c.q_n;
    q.quadratic = q.upsilon * a1 * a2;
    q.linear = -q.upsilon * b * (a1 - a2);
    q.constant = b * (a1 + a2) - q.upsilon * b * b;
    return q;
}

/// Literal coefficient expressions (B x^2 + A x + S), kept for comparison runs.
inline PhiQuadratic phi_quadratic_printed(const RateCoeffs &c, double p, const DualState &dual)
{
    const double fn = c.f_n, fm = c.f_m, hn = c.h_n, hm = c.h_m, qn = c.q_n, qm = c.q_m;
    const double ln = dual.lambda_n, lm = dual.lambda_m;
    const double wn = qn + hn * p, wm = qm + hm * p;
    PhiQuadratic q;
    q.linear = p * p *
               (-fn * fm * hm * (1 + ln) * wn + fn * hm * hm * (1 + ln) * wn + fn * fm * hn * (1 + lm) * wm -
                fm * hn * hn * (1 + lm) * wm);
    q.quadratic = p * wn *
                  (-fn * qm * (-2 * hm * (1 + ln) + fm * (2 + lm)) + fn * fm * hm * (ln - lm) * p +
                   2 * fm * hn * (1 + lm) * wm);
    q.constant = wn * (fn * qm * qm * (1 + ln) +
                       fm * (-qn * (1 + lm) * wm + p * (fn * qm * (1 + ln) - hn * (1 + ln) * wm)));
    return q;
}

/// Exact stationarity polynomial of L in phi_n (degree <= 4, cubic when F_m = H_m).
inline Poly4 phi_stationarity_poly(const RateCoeffs &c, double p, const DualState &dual, const SystemConfig &cfg)
{
    using detail::Linear;
    const double nums[4] = {p * (c.f_n - c.h_n), p * c.h_n, p * (c.h_m - c.f_m), -p * c.h_m};
    const Linear dens[4] = {{p * c.h_n + c.q_n, p * (c.f_n - c.h_n)},
                            {p * c.h_n + c.q_n, -p * c.h_n},
                            {p * c.f_m + c.q_m, p * (c.h_m - c.f_m)},
                            {c.q_m, p * c.h_m}};
    return detail::clear_denominators(nums, dens, std::numbers::ln2 * phi_multiplier_gradient(c, p, dual, cfg));
}

/// phi_n at which Z1 holds with equality (lower end of the Z1-feasible range).
inline double z1_active_phi(const RateCoeffs &c, double p, const SystemConfig &cfg)
{
    const double t = cfg.sinr_target();
    return t * (p * c.h_n + c.q_n) / (p * (c.f_n + t * c.h_n));
}

/// phi_n at which Z2 holds with equality (upper end of the Z2-feasible range).
inline double z2_active_phi(const RateCoeffs &c, double p, const SystemConfig &cfg)
{
    const double t = cfg.sinr_target();
    return (p * c.f_m - t * c.q_m) / (p * (c.f_m + t * c.h_m));
}

/// Candidate phi_n in (0, 0.5]: roots of the successive-approximation quadratic
/// (iterated to its fixed point from phi_prev), roots of the exact stationarity
/// polynomial, the Z1/Z2-active values and the boundary 0.5.
inline std::vector<double> phi_candidates(const RateCoeffs &c, double p, const DualState &dual, const SystemConfig &cfg,
                                          double phi_prev = 0.25, const RootObserver *obs = nullptr)
{
    std::vector<double> out;
    if (!(p > 0.0))
        return {0.5};
    auto quad_roots = [&](const PhiQuadratic &q) {
        const Poly4 poly = q.as_poly();
        return detail::observed_roots(poly, obs);
    };
    if (cfg.phi_form == PhiQuadraticForm::printed)
    {
        for (double r : quad_roots(phi_quadratic_printed(c, p, dual)))
            if (detail::in_phi_range(r))
                detail::push_unique(out, r);
    }
    else
    {
        double x = std::clamp(phi_prev, 1e-6, 0.5);
        std::vector<double> last;
        for (int it = 0; it < 40; ++it)
        {
            last.clear();
            for (double r : quad_roots(phi_quadratic(c, p, dual, cfg, x)))
                if (detail::in_phi_range(r))
                    last.push_back(r);
            if (last.empty())
                break;
            const double next = *std::min_element(last.begin(), last.end(), [x](double a, double b) {
                return std::abs(a - x) < std::abs(b - x);
            });
            const bool done = std::abs(next - x) <= 1e-14;
            x = next;
            if (done)
                break;
        }
        for (double r : last)
            detail::push_unique(out, r);
    }
    for (double r : detail::observed_roots(phi_stationarity_poly(c, p, dual, cfg), obs))
        if (detail::in_phi_range(r))
            detail::push_unique(out, r);
    for (double r : {z1_active_phi(c, p, cfg), z2_active_phi(c, p, cfg)})
        if (detail::in_phi_range(r))
            detail::push_unique(out, r);
    detail::push_unique(out, 0.5);
    std::sort(out.begin(), out.end());
    return out;
}

/// Stationarity polynomial of L in P at fixed phi_n, in the variable u = P / P_tot.
inline PowerQuartic power_quartic(const RateCoeffs &c, double phi_n, const DualState &dual, const SystemConfig &cfg)
{
    using detail::Linear;
    const double s = cfg.p_tot_linear();
    const double y = 1.0 - phi_n;
    const double an = s * (phi_n * c.f_n + y * c.h_n), cn = s * y * c.h_n;
    const double am = s * (y * c.f_m + phi_n * c.h_m), cm = s * phi_n * c.h_m;
    const double nums[4] = {an, -cn, am, -cm};
    const Linear dens[4] = {{c.q_n, an}, {c.q_n, cn}, {c.q_m, am}, {c.q_m, cm}};
    const double k = std::numbers::ln2 * s * power_multiplier_gradient(c, phi_n, dual, cfg);
    return {detail::clear_denominators(nums, dens, k), s};
}

/// Real roots of the quartic mapped back to P and kept in (0, p_tot], plus p_tot.
inline std::vector<double> power_candidates(const PowerQuartic &q, double p_tot, const RootObserver *obs = nullptr)
{
    std::vector<double> out;
    for (double u : detail::observed_roots(q.poly, obs))
    {
        const double p = u * q.scale;
        if (p > 0.0 && p <= p_tot)
            detail::push_unique(out, p);
    }
    detail::push_unique(out, p_tot);
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<double> power_candidates(const RateCoeffs &c, double phi_n, const DualState &dual,
                                            const SystemConfig &cfg, const RootObserver *obs = nullptr)
{
    return power_candidates(power_quartic(c, phi_n, dual, cfg), cfg.p_tot_linear(), obs);
}

namespace detail {

/// Maximizer of L(., p) on (0, 0.5] by bisection of dL/dphi_n on every sign change
/// found on a uniform scan.
inline double bisect_phi(const RateCoeffs &c, double p, const DualState &dual, const SystemConfig &cfg)
{
    constexpr int kScan = 64;
    constexpr double lo = 1e-9, hi = 0.5;
    auto d = [&](double x) { return lagrangian_dphi(c, p, x, dual, cfg); };
    auto l = [&](double x) { return lagrangian_value(c, p, x, dual, cfg); };
    double best = hi, best_l = l(hi);
    if (l(lo) > best_l)
    {
        best = lo;
        best_l = l(lo);
    }
    double a = lo, da = d(lo);
    for (int i = 1; i <= kScan; ++i)
    {
        const double b = lo + (hi - lo) * i / kScan;
        const double db = d(b);
        if (da > 0.0 && db <= 0.0)
        {
            double x0 = a, x1 = b;
            for (int it = 0; it < 200 && x1 - x0 > 1e-15; ++it)
            {
                const double mid = 0.5 * (x0 + x1);
                (d(mid) > 0.0 ? x0 : x1) = mid;
            }
            const double x = 0.5 * (x0 + x1);
            if (l(x) > best_l)
            {
                best = x;
                best_l = l(x);
            }
        }
        a = b;
        da = db;
    }
    return best;
}

/// Golden-section maximizer of L(phi_n, .) on (0, p_tot].
inline double golden_power(const RateCoeffs &c, double phi_n, const DualState &dual, const SystemConfig &cfg)
{
    const double p_tot = cfg.p_tot_linear();
    auto l = [&](double p) { return lagrangian_value(c, p, phi_n, dual, cfg); };
    const double g = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = p_tot * 1e-9, b = p_tot;
    double x1 = b - g * (b - a), x2 = a + g * (b - a);
    double f1 = l(x1), f2 = l(x2);
    for (int it = 0; it < 200 && b - a > 1e-13 * p_tot; ++it)
    {
        if (f1 < f2)
        {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + g * (b - a);
            f2 = l(x2);
        }
        else
        {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - g * (b - a);
            f1 = l(x1);
        }
    }
    const double mid = 0.5 * (a + b);
    return l(p_tot) >= l(mid) ? p_tot : mid;
}

} // namespace detail

struct PowerSolveOptions
{
    const PowerAlloc *warm = nullptr;
    bool record_trace = false;
    const RootObserver *observer = nullptr;
};

struct PowerSolution
{
    PowerAlloc alloc;      // best QoS-feasible pair, or best-effort pair when infeasible
    bool feasible = false; // false: no (phi_n, P) in the box meets Z1 and Z2
    bool converged = false;
    int iterations = 0;
    int fallbacks = 0;
    int max_candidates = 0; // largest (phi_n, P) pair count of one iteration
    double se = 0.0;
    DualState dual;
    std::vector<DualState> trace;
};

/// Dual-decomposition solve of one cell at fixed beta and fixed interference.
inline PowerSolution solve_power_subproblem(const CellChannel &ch, double beta, const SystemConfig &cfg,
                                            const PowerSolveOptions &opt = {})
{
    const auto &st = cfg.solver;
    const double p_tot = cfg.p_tot_linear();
    const RateCoeffs c = rate_coeffs(ch, beta, cfg);

    struct Scored
    {
        double p, x, se, lag;
        bool ok;
    };
    auto score = [&](double p, double x, const DualState &dual) {
        const PowerAlloc a{p, x, 1.0 - x, beta};
        const bool ok = qos_satisfied(c, a, cfg).qos();
        return Scored{p, x, cell_se(c, a), lagrangian_value(c, a, dual, cfg), ok};
    };

    std::optional<Scored> best_ok, best_any;
    auto keep = [](std::optional<Scored> &slot, const Scored &s) {
        if (!slot || s.se > slot->se || (s.se == slot->se && (s.p < slot->p || (s.p == slot->p && s.x < slot->x))))
            slot = s;
    };

    PowerSolution sol;
    DualState dual = DualState::uniform(st.dual_init);
    double p_cur = p_tot;
    double x_cur = 0.25;
    if (opt.warm && opt.warm->p > 0.0 && detail::in_phi_range(opt.warm->phi_n))
    {
        p_cur = std::min(opt.warm->p, p_tot);
        x_cur = opt.warm->phi_n;
    }

    auto enumerate = [&](const DualState &d, std::vector<Scored> &pool) {
        std::vector<double> phis = phi_candidates(c, p_cur, d, cfg, x_cur, opt.observer);
        if (p_cur != p_tot)
            for (double x : phi_candidates(c, p_tot, d, cfg, x_cur, opt.observer))
                detail::push_unique(phis, x);
        for (double x : phis)
        {
            auto ps = power_candidates(c, x, d, cfg, opt.observer);
            detail::push_unique(ps, p_cur);
            for (double p : ps)
                pool.push_back(score(p, x, d));
        }
    };

    std::vector<Scored> pool;
    // Z1 tightens and Z2 relaxes as phi_n shrinks, and both relax with P, so the
    // box is QoS-infeasible exactly when the Z1-active split fails Z2 at P_tot.
    const double probe = std::min(z1_active_phi(c, p_tot, cfg), 0.5);
    const bool box_feasible = qos_satisfied(c, PowerAlloc{p_tot, probe, 1.0 - probe, beta}, cfg).qos();
    for (int t = 1; box_feasible && t <= st.max_dual_iters; ++t)
    {
        pool.clear();
        enumerate(dual, pool);

        auto select = [&]() {
            const bool any_ok = std::any_of(pool.begin(), pool.end(), [](const Scored &s) { return s.ok; });
            const Scored *sel = nullptr;
            for (const auto &s : pool)
            {
                if (any_ok && !s.ok)
                    continue;
                if (!sel || s.lag > sel->lag ||
                    (s.lag == sel->lag && (s.se > sel->se || (s.se == sel->se && s.p < sel->p))))
                    sel = &s;
            }
            return *sel;
        };
        Scored sel = select();

        // numeric fallback when the accepted interior point is not stationary
        const bool x_interior = sel.x > 1e-9 && sel.x < 0.5 - 1e-9 &&
                                std::abs(sel.x - z1_active_phi(c, sel.p, cfg)) > 1e-12 &&
                                std::abs(sel.x - z2_active_phi(c, sel.p, cfg)) > 1e-12;
        const bool p_interior = sel.p < p_tot * (1.0 - 1e-12);
        const double kkt_scale = st.kkt_tol * std::max(1.0, std::abs(sel.lag));
        const bool bad_x = x_interior && std::abs(lagrangian_dphi(c, sel.p, sel.x, dual, cfg)) > kkt_scale;
        const bool bad_p = p_interior && std::abs(p_tot * lagrangian_dpower(c, sel.p, sel.x, dual, cfg)) > kkt_scale;
        if (bad_x || bad_p)
        {
            ++sol.fallbacks;
            const double xb = detail::bisect_phi(c, sel.p, dual, cfg);
            const double pg = detail::golden_power(c, sel.x, dual, cfg);
            pool.push_back(score(sel.p, xb, dual));
            pool.push_back(score(pg, sel.x, dual));
            pool.push_back(score(pg, xb, dual));
            sel = select();
        }

        sol.max_candidates = std::max(sol.max_candidates, static_cast<int>(pool.size()));
        for (const auto &s : pool)
        {
            keep(best_any, s);
            if (s.ok)
                keep(best_ok, s);
        }

        const DualState next = dual_update(dual, dual_slacks(c, sel.p, sel.x, 1.0 - sel.x, cfg), step_size(st.step0, t));
        if (opt.record_trace)
            sol.trace.push_back(next);
        const double change = next.max_abs_diff(dual);
        dual = next;
        p_cur = sel.p;
        x_cur = sel.x;
        sol.iterations = t;
        if (change < st.tol_dual)
        {
            sol.converged = true;
            break;
        }
    }

    // primal recovery: stationary points of the plain SE at the budget
    pool.clear();
    {
        const DualState none = DualState::zero();
        for (double x : phi_candidates(c, p_tot, none, cfg, x_cur, opt.observer))
            pool.push_back(score(p_tot, x, dual));
        for (const auto &s : pool)
        {
            keep(best_any, s);
            if (s.ok)
                keep(best_ok, s);
        }
    }

    if (!box_feasible)
        sol.converged = true;
    sol.dual = dual;
    sol.feasible = best_ok.has_value();
    const Scored &chosen = sol.feasible ? *best_ok : *best_any;
    sol.alloc = PowerAlloc{chosen.p, chosen.x, 1.0 - chosen.x, beta};
    sol.se = chosen.se;
    return sol;
}

} // namespace nomabc
