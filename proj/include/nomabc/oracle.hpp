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

// Independent verifiers: exhaustive grid search, closed-form curvature
// expressions checked against finite differences, stationarity residuals,
// and a bisection root finder used to cross-check polyroots.

#include "core_model.hpp"
#include "polyroots.hpp"
#include "power_dual.hpp"
#include "sinr.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace nomabc::oracle {

class OracleError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// grid search

enum class GridMode
{
    exhaustive,
    /// Single cell only. At fixed interference both SINRs grow with P, so for
    /// every (phi_n, beta) the best grid P is the largest feasible one and the
    /// P axis can be scanned downward until the first feasible point.
    power_monotone
};

struct GridResult
{
    std::vector<PowerAlloc> allocs;
    double se = 0.0;
    long long evaluated = 0;
};

namespace detail {

inline int steps_in(double span, double step)
{
    return std::max(1, static_cast<int>(std::floor(span / step + 1e-9)));
}

struct CellGrid
{
    std::vector<double> phi, power, beta;
};

inline CellGrid make_grid(double step, double p_tot)
{
    CellGrid g;
    const int nphi = steps_in(0.5, step);
    for (int k = 1; k <= nphi; ++k)
        g.phi.push_back(std::min(0.5, k * step));
    const int np = steps_in(1.0, step);
    for (int k = 1; k <= np; ++k)
        g.power.push_back(std::min(1.0, k * step) * p_tot);
    const int nb = steps_in(1.0, step);
    for (int k = 0; k <= nb; ++k)
        g.beta.push_back(std::min(1.0, k * step));
    return g;
}

} // namespace detail

/// Maximum network SE over the Z1-Z6 feasible points of a uniform grid
/// (phi_n in {step..0.5}, P in {step..1} * P_tot, beta in {0..1}).
inline GridResult grid_search(const ChannelRealization &real, const SystemConfig &cfg, double grid_step,
                              GridMode mode = GridMode::exhaustive)
{
    const int J = real.num_cells();
    if (J > 3)
        throw OracleError("grid_search: at most 3 cells");
    if (!(grid_step > 0.0 && grid_step <= 1.0))
        throw OracleError("grid_search: grid_step must lie in (0, 1]");
    if (mode == GridMode::power_monotone && J != 1)
        throw OracleError("grid_search: power_monotone mode needs a single cell");
    const double p_tot = cfg.p_tot_linear();
    const double t = cfg.sinr_target();
    const double tol = cfg.solver.qos_rel_tol;
    const auto grid = detail::make_grid(grid_step, p_tot);

    GridResult best;
    best.se = -std::numeric_limits<double>::infinity();
    bool found = false;

    if (J == 1)
    {
        const auto &g = real.cells[0];
        const double q = cfg.noise_var;
        const double un = g.bs_to_bd * g.bd_to_n, um = g.bs_to_bd * g.bd_to_m;
        for (double x : grid.phi)
        {
            const double y = 1.0 - x;
            for (double beta : grid.beta)
            {
                const double fn = g.gain_n + beta * un, hn = g.gain_n * cfg.sic_error;
                const double fm = g.gain_m + beta * um;
                for (auto it = grid.power.rbegin(); it != grid.power.rend(); ++it)
                {
                    const double p = *it;
                    ++best.evaluated;
                    const double sn = p * x * fn, dn = p * y * hn + q;
                    const double sm = p * y * fm, dm = p * x * fm + q;
                    const bool ok = nomabc::detail::at_least(sn, t * dn, tol) &&
                                    nomabc::detail::at_least(sm, t * dm, tol) &&
                                    nomabc::detail::at_least(p * y, p * x, tol);
                    if (ok)
                    {
                        const double se = std::log2(1.0 + sn / dn) + std::log2(1.0 + sm / dm);
                        if (se > best.se)
                        {
                            best.se = se;
                            best.allocs = {PowerAlloc{p, x, y, beta}};
                            found = true;
                        }
                    }
                    if (mode == GridMode::power_monotone)
                        break; // the first P scanned is the largest; smaller ones are no better
                }
            }
        }
    }
    else
    {
        // joint product grid over every cell's (phi_n, P, beta)
        std::vector<PowerAlloc> points;
        for (double x : grid.phi)
            for (double p : grid.power)
                for (double beta : grid.beta)
                    points.push_back({p, x, 1.0 - x, beta});
        const std::size_t n = points.size();
        std::vector<std::size_t> idx(static_cast<std::size_t>(J), 0);
        std::vector<PowerAlloc> current(static_cast<std::size_t>(J));
        std::vector<double> powers(static_cast<std::size_t>(J));
        while (true)
        {
            for (int j = 0; j < J; ++j)
            {
                current[j] = points[idx[j]];
                powers[j] = current[j].p;
            }
            ++best.evaluated;
            double se = 0.0;
            bool ok = true;
            for (int j = 0; j < J && ok; ++j)
            {
                const auto ch = cell_channel(real, powers, j, cfg.interference_model);
                const auto c = rate_coeffs(ch, current[j], cfg);
                ok = qos_satisfied(c, current[j], cfg).all();
                se += cell_se(c, current[j]);
            }
            if (ok && se > best.se)
            {
                best.se = se;
                best.allocs = current;
                found = true;
            }
            int j = 0;
            while (j < J && ++idx[j] == n)
                idx[j++] = 0;
            if (j == J)
                break;
        }
    }
    if (!found)
        throw OracleError("grid_search: no feasible point");
    return best;
}

/// Single-cell SE as a function of (phi_n, u = P / P_tot, beta), fixed interference.
inline double cell_se_at(const CellChannel &ch, const SystemConfig &cfg, double phi_n, double u, double beta)
{
    const auto c = rate_coeffs(ch, beta, cfg);
    return cell_se(c, u * cfg.p_tot_linear(), phi_n, 1.0 - phi_n);
}

/// Grid-granularity SE bound: step times the sum of the largest sampled partial
/// derivatives of SE along the three normalized grid axes.
inline double grid_granularity_bound(const CellChannel &ch, const SystemConfig &cfg, double grid_step, Rng &rng,
                                     int samples = 256)
{
    std::uniform_real_distribution<double> phi_d(grid_step, 0.5), u_d(grid_step, 1.0), b_d(0.0, 1.0);
    const double h = 1e-6;
    double gx = 0.0, gu = 0.0, gb = 0.0;
    for (int s = 0; s < samples; ++s)
    {
        const double x = phi_d(rng), u = u_d(rng), b = std::clamp(b_d(rng), h, 1.0 - h);
        gx = std::max(gx, std::abs(cell_se_at(ch, cfg, x + h, u, b) - cell_se_at(ch, cfg, x - h, u, b)) / (2 * h));
        gu = std::max(gu, std::abs(cell_se_at(ch, cfg, x, u + h, b) - cell_se_at(ch, cfg, x, u - h, b)) / (2 * h));
        gb = std::max(gb, std::abs(cell_se_at(ch, cfg, x, u, b + h) - cell_se_at(ch, cfg, x, u, b - h)) / (2 * h));
    }
    return grid_step * (gx + gu + gb);
}

// ---------------------------------------------------------------------------
// curvature of the sum rate in (phi_n, phi_m)

struct HessianEntries
{
    double phi11 = 0.0; // d2/dphi_n2
    double phi12 = 0.0; // d2/dphi_n dphi_m
    double phi21 = 0.0;
    double phi22 = 0.0; // d2/dphi_m2
    double psi_n = 0.0, psi_m = 0.0, xi_n = 0.0, xi_m = 0.0;

    double det() const { return phi11 * phi22 - phi12 * phi21; }
};

namespace detail {

struct Folded
{
    double fn, hn, qn, fm, hm, qm;
};

inline Folded fold(const RateCoeffs &c, double p)
{
    return {p * c.f_n, p * c.h_n, c.q_n, p * c.f_m, p * c.h_m, c.q_m};
}

inline double mixed_partial(const Folded &k, double psi_n, double psi_m, double sign_m)
{
    return -(k.fn * k.hn * psi_m * psi_m + sign_m * k.fm * k.hm * psi_n * psi_n) /
           (std::numbers::ln2 * psi_n * psi_n * psi_m * psi_m);
}

} // namespace detail

/// Closed-form second partials of log2(1+gamma_n) + log2(1+gamma_m) treating
/// phi_n and phi_m as independent, with
///   Xi_n = H_n phi_m + Q_n, Psi_n = F_n phi_n + Xi_n,
///   Xi_m = H_m phi_n + Q_m, Psi_m = F_m phi_m + Xi_m  (F, H scaled by P).
inline HessianEntries hessian_entries(const RateCoeffs &c, double p, double phi_n, double phi_m)
{
    const auto k = detail::fold(c, p);
    HessianEntries e;
    e.xi_n = k.hn * phi_m + k.qn;
    e.xi_m = k.hm * phi_n + k.qm;
    e.psi_n = k.fn * phi_n + e.xi_n;
    e.psi_m = k.fm * phi_m + e.xi_m;
    const double ln2 = std::numbers::ln2;
    const double pn2 = e.psi_n * e.psi_n, pm2 = e.psi_m * e.psi_m;
    const double xn2 = e.xi_n * e.xi_n, xm2 = e.xi_m * e.xi_m;
    e.phi11 = -(k.fn * k.fn * xm2 * pm2 - k.fm * k.hm * k.hm * pn2 * (2 * e.xi_m + k.fm * phi_m) * phi_m) /
              (ln2 * pn2 * pm2 * xm2);
    e.phi22 = -(k.fm * k.fm * xn2 * pn2 - k.fn * k.hn * k.hn * pm2 * (2 * e.xi_n + k.fn * phi_n) * phi_n) /
              (ln2 * pm2 * pn2 * xn2);
    e.phi12 = detail::mixed_partial(k, e.psi_n, e.psi_m, +1.0);
    e.phi21 = e.phi12;
    return e;
}

/// Same, but with the mixed partial's second term carrying the opposite sign
/// as in the commonly quoted form. Used only to report how far that form is off.
inline HessianEntries hessian_entries_alt_sign(const RateCoeffs &c, double p, double phi_n, double phi_m)
{
    auto e = hessian_entries(c, p, phi_n, phi_m);
    e.phi12 = detail::mixed_partial(detail::fold(c, p), e.psi_n, e.psi_m, -1.0);
    e.phi21 = e.phi12;
    return e;
}

/// Sum rate with phi_n and phi_m as independent variables.
inline double sum_rate_2d(const RateCoeffs &c, double p, double phi_n, double phi_m)
{
    return cell_se(c, p, phi_n, phi_m);
}

/// Central finite-difference Hessian of sum_rate_2d.
inline HessianEntries hessian_fd(const RateCoeffs &c, double p, double x, double y, double h = 1e-4)
{
    auto f = [&](double a, double b) { return sum_rate_2d(c, p, a, b); };
    HessianEntries e;
    const double f0 = f(x, y);
    e.phi11 = (f(x + h, y) - 2 * f0 + f(x - h, y)) / (h * h);
    e.phi22 = (f(x, y + h) - 2 * f0 + f(x, y - h)) / (h * h);
    e.phi12 = (f(x + h, y + h) - f(x + h, y - h) - f(x - h, y + h) + f(x - h, y - h)) / (4 * h * h);
    e.phi21 = e.phi12;
    return e;
}

struct ConcavityPoint
{
    RateCoeffs coeffs;
    double p = 0.0;
    double phi_n = 0.0;
    double phi_m = 0.0;
};

struct ConcavityReport
{
    std::size_t samples = 0;
    std::size_t concave = 0;
    std::vector<ConcavityPoint> counterexamples;

    double fraction() const { return samples ? static_cast<double>(concave) / static_cast<double>(samples) : 0.0; }
};

/// Fraction of points with phi11 < 0 and det > 0. Counterexamples are logged one
/// per line as key=value pairs when a log stream is given.
inline ConcavityReport concavity_report(const std::vector<ConcavityPoint> &points, std::ostream *log = nullptr)
{
    if (points.empty())
        throw OracleError("empty sample");
    ConcavityReport r;
    for (const auto &pt : points)
    {
        const auto e = hessian_entries(pt.coeffs, pt.p, pt.phi_n, pt.phi_m);
        ++r.samples;
        if (e.phi11 < 0.0 && e.det() > 0.0)
        {
            ++r.concave;
            continue;
        }
        r.counterexamples.push_back(pt);
        if (log)
            *log << "counterexample p=" << pt.p << " phi_n=" << pt.phi_n << " phi_m=" << pt.phi_m
                 << " F_n=" << pt.coeffs.f_n << " H_n=" << pt.coeffs.h_n << " Q_n=" << pt.coeffs.q_n
                 << " F_m=" << pt.coeffs.f_m << " H_m=" << pt.coeffs.h_m << " Q_m=" << pt.coeffs.q_m
                 << " phi11=" << e.phi11 << " det=" << e.det() << '\n';
    }
    return r;
}

// ---------------------------------------------------------------------------
// curvature of the sum rate in beta

/// First derivative of SE in beta. F_n = E_n + beta T_n, F_m = E_m + beta T_m,
/// H_m = V_m + beta eta_m, Q_m = T_m V_m - E_m eta_m.
inline double beta_first_derivative(const BetaCoeffs &b, double beta)
{
    const double fn = b.e_n + beta * b.t_n, fm = b.e_m + beta * b.t_m, hm = b.v_m + beta * b.eta_m;
    const double qm = b.t_m * b.v_m - b.e_m * b.eta_m;
    return b.t_n / (std::numbers::ln2 * (fn + b.v_n)) + qm / (std::numbers::ln2 * (hm * hm + hm * fm));
}

/// Second derivative, with Omega_m = H_m + beta T_m and X_m = T_m V_m + E_m eta_m:
///   -(T_n^2 / (ln2 (F_n + V_n)^2) + Q_m (2 eta_m Omega_m + X_m) / (ln2 H_m^2 (H_m + F_m)^2))
inline double beta_second_derivative(const BetaCoeffs &b, double beta)
{
    const double fn = b.e_n + beta * b.t_n, fm = b.e_m + beta * b.t_m, hm = b.v_m + beta * b.eta_m;
    const double qm = b.t_m * b.v_m - b.e_m * b.eta_m;
    const double omega = hm + b.t_m * beta;
    const double xm = b.t_m * b.v_m + b.e_m * b.eta_m;
    const double ln2 = std::numbers::ln2;
    return -(b.t_n * b.t_n / (ln2 * (fn + b.v_n) * (fn + b.v_n)) +
             qm * (2 * b.eta_m * omega + xm) / (ln2 * hm * hm * (hm + fm) * (hm + fm)));
}

// ---------------------------------------------------------------------------
// stationarity

/// Largest |central difference| of f over the coordinates flagged active.
inline double stationarity_residual(const std::function<double(double, double)> &f, double x, double u,
                                    bool x_active, bool u_active, double h = 1e-6)
{
    double r = 0.0;
    if (x_active)
        r = std::max(r, std::abs(f(x + h, u) - f(x - h, u)) / (2 * h));
    if (u_active)
        r = std::max(r, std::abs(f(x, u + h) - f(x, u - h)) / (2 * h));
    return r;
}

/// Stationarity residual of the Lagrangian in (phi_n, u = P / P_tot) along
/// phi_m = 1 - phi_n. A coordinate counts only when strictly inside its box.
inline double kkt_residual(const RateCoeffs &c, const PowerAlloc &a, const DualState &dual, const SystemConfig &cfg)
{
    const double p_tot = cfg.p_tot_linear();
    const double h = 1e-6;
    const bool x_active = a.phi_n > h && a.phi_n < 0.5 - h;
    const bool u_active = a.p > h * p_tot && a.p < p_tot * (1.0 - h);
    auto f = [&](double x, double u) { return lagrangian_value(c, u * p_tot, x, dual, cfg); };
    return stationarity_residual(f, a.phi_n, a.p / p_tot, x_active, u_active, h);
}

// ---------------------------------------------------------------------------
// bisection root finder

namespace detail {

inline std::vector<double> bisection_roots_impl(const std::vector<double> &c)
{
    // c has nonzero leading coefficient, degree = c.size() - 1
    const int deg = static_cast<int>(c.size()) - 1;
    auto eval = [&](double x) {
        double acc = 0.0;
        for (int k = deg; k >= 0; --k)
            acc = acc * x + c[k];
        return acc;
    };
    if (deg == 0)
        return {};
    if (deg == 1)
        return {-c[0] / c[1]};
    std::vector<double> dc;
    for (int k = 1; k <= deg; ++k)
        dc.push_back(k * c[k]);
    std::vector<double> crit = bisection_roots_impl(dc);
    double bound = 0.0;
    for (int k = 0; k < deg; ++k)
        bound = std::max(bound, std::abs(c[k] / c[deg]));
    bound += 1.0;
    std::vector<double> knots{-bound};
    for (double x : crit)
        knots.push_back(x);
    knots.push_back(bound);

    std::vector<double> roots;
    for (std::size_t i = 0; i + 1 < knots.size(); ++i)
    {
        double a = knots[i], b = knots[i + 1];
        double fa = eval(a), fb = eval(b);
        if (fa == 0.0)
        {
            roots.push_back(a);
            continue;
        }
        if ((fa < 0.0) == (fb < 0.0))
            continue;
        for (int it = 0; it < 300; ++it)
        {
            const double m = 0.5 * (a + b);
            if (m <= a || m >= b)
                break;
            const double fm = eval(m);
            if ((fm < 0.0) == (fa < 0.0))
            {
                a = m;
                fa = fm;
            }
            else
                b = m;
        }
        roots.push_back(0.5 * (a + b));
    }
    // tangential roots sit on critical points
    for (double x : crit)
    {
        double s = 1.0, xp = 1.0;
        for (int k = 0; k <= deg; ++k, xp *= std::abs(x))
            s = std::max(s, std::abs(c[k]) * xp);
        if (std::abs(eval(x)) <= 1e-13 * s)
            roots.push_back(x);
    }
    std::sort(roots.begin(), roots.end());
    std::vector<double> out;
    for (double r : roots)
        if (out.empty() || std::abs(r - out.back()) > 1e-9 * std::max(1.0, std::abs(r)))
            out.push_back(r);
    return out;
}

} // namespace detail

/// Real roots by derivative subdivision: roots of p' split the line into
/// monotone pieces, each bisected on a sign change.
inline std::vector<double> bisection_real_roots(const Poly4 &p)
{
    const int deg = p.effective_degree(kLeadingRelTol);
    if (deg < 0)
        throw DegeneratePolynomial();
    const double m = p.max_abs_coeff();
    std::vector<double> c;
    for (int k = 0; k <= deg; ++k)
        c.push_back(p.c[k] / m);
    return detail::bisection_roots_impl(c);
}

} // namespace nomabc::oracle
