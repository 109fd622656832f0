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

#include "core_model.hpp"

#include <algorithm>
#include <cmath>

namespace nomabc {

/// One cell's decision variables.
struct PowerAlloc
{
    double p = 0.0;
    double phi_n = 0.0;
    double phi_m = 0.0;
    double beta = 0.0;
};

/// Aggregated gains of both SINR expressions.
///   gamma_n = P phi_n F_n / (P phi_m H_n + Q_n)
///   gamma_m = P phi_m F_m / (P phi_n H_m + Q_m)
struct RateCoeffs
{
    double theta_n = 0.0; // beta |h_i|^2 |g_n|^2
    double theta_m = 0.0;
    double f_n = 0.0;
    double h_n = 0.0;
    double q_n = 0.0;
    double f_m = 0.0;
    double h_m = 0.0;
    double q_m = 0.0;
};

/// Coefficients of the reflection-coefficient subproblem:
///   gamma_n = (E_n + beta T_n) / V_n,  gamma_m = (E_m + beta T_m) / (V_m + beta eta_m)
struct BetaCoeffs
{
    double unit_n = 0.0; // |h_i|^2 |g_n|^2
    double unit_m = 0.0;
    double e_n = 0.0;
    double t_n = 0.0;
    double v_n = 0.0;
    double e_m = 0.0;
    double t_m = 0.0;
    double v_m = 0.0;
    double eta_m = 0.0;
};

inline RateCoeffs rate_coeffs(const CellChannel &ch, double beta, const SystemConfig &cfg)
{
    const auto &g = ch.gains;
    RateCoeffs c;
    c.theta_n = beta * g.bs_to_bd * g.bd_to_n;
    c.theta_m = beta * g.bs_to_bd * g.bd_to_m;
    c.f_n = g.gain_n + c.theta_n;
    c.h_n = g.gain_n * cfg.sic_error;
    c.q_n = ch.interference_n + cfg.noise_var;
    c.f_m = g.gain_m + c.theta_m;
    c.h_m = g.gain_m + c.theta_m;
    c.q_m = ch.interference_m + cfg.noise_var;
    return c;
}

inline RateCoeffs rate_coeffs(const CellChannel &ch, const PowerAlloc &alloc, const SystemConfig &cfg)
{
    return rate_coeffs(ch, alloc.beta, cfg);
}

inline BetaCoeffs beta_coeffs(const CellChannel &ch, const PowerAlloc &alloc, const SystemConfig &cfg)
{
    const auto &g = ch.gains;
    const double pn = alloc.p * alloc.phi_n;
    const double pm = alloc.p * alloc.phi_m;
    BetaCoeffs b;
    b.unit_n = g.bs_to_bd * g.bd_to_n;
    b.unit_m = g.bs_to_bd * g.bd_to_m;
    b.e_n = pn * g.gain_n;
    b.t_n = pn * b.unit_n;
    b.v_n = pm * g.gain_n * cfg.sic_error + ch.interference_n + cfg.noise_var;
    b.e_m = pm * g.gain_m;
    b.t_m = pm * b.unit_m;
    b.v_m = pn * g.gain_m + ch.interference_m + cfg.noise_var;
    b.eta_m = pn * b.unit_m;
    return b;
}

inline double sinr_n(const RateCoeffs &c, double p, double phi_n, double phi_m)
{
    return p * phi_n * c.f_n / (p * phi_m * c.h_n + c.q_n);
}

inline double sinr_m(const RateCoeffs &c, double p, double phi_n, double phi_m)
{
    return p * phi_m * c.f_m / (p * phi_n * c.h_m + c.q_m);
}

inline double sinr_n(const RateCoeffs &c, const PowerAlloc &a) { return sinr_n(c, a.p, a.phi_n, a.phi_m); }
inline double sinr_m(const RateCoeffs &c, const PowerAlloc &a) { return sinr_m(c, a.p, a.phi_n, a.phi_m); }

inline double rate_from_sinr(double gamma) { return std::log2(1.0 + gamma); }

inline double cell_se(const RateCoeffs &c, double p, double phi_n, double phi_m)
{
    return rate_from_sinr(sinr_n(c, p, phi_n, phi_m)) + rate_from_sinr(sinr_m(c, p, phi_n, phi_m));
}

inline double cell_se(const RateCoeffs &c, const PowerAlloc &a) { return cell_se(c, a.p, a.phi_n, a.phi_m); }

inline double beta_sinr_n(const BetaCoeffs &b, double beta) { return (b.e_n + beta * b.t_n) / b.v_n; }
inline double beta_sinr_m(const BetaCoeffs &b, double beta) { return (b.e_m + beta * b.t_m) / (b.v_m + beta * b.eta_m); }

inline double beta_se(const BetaCoeffs &b, double beta)
{
    return rate_from_sinr(beta_sinr_n(b, beta)) + rate_from_sinr(beta_sinr_m(b, beta));
}

/// Slacks of the two QoS constraints in their linear (multiplier) form:
///   Z1: P phi_n F_n - (2^R - 1)(P phi_m H_n + Q_n)
///   Z2: P phi_m F_m - (2^R - 1)(P phi_n H_m + Q_m)
struct QosSlacks
{
    double z1 = 0.0;
    double z2 = 0.0;
};

inline QosSlacks qos_slacks(const RateCoeffs &c, double p, double phi_n, double phi_m, double sinr_target)
{
    return {p * phi_n * c.f_n - sinr_target * (p * phi_m * c.h_n + c.q_n),
            p * phi_m * c.f_m - sinr_target * (p * phi_n * c.h_m + c.q_m)};
}

struct QosReport
{
    bool z1 = false;
    bool z2 = false;
    bool z3 = false;
    bool z4 = false;
    bool z5 = false;
    bool z6 = false;

    bool qos() const { return z1 && z2; }
    bool all() const { return z1 && z2 && z3 && z4 && z5 && z6; }
};

namespace detail {

/// lhs >= rhs up to a relative tolerance.
inline bool at_least(double lhs, double rhs, double rel_tol)
{
    return lhs >= rhs - rel_tol * std::max({std::abs(lhs), std::abs(rhs), 1e-300});
}

} // namespace detail

/// Per-constraint check, boundary inclusive, with relative tolerance rel_tol.
inline QosReport qos_satisfied(const RateCoeffs &c, const PowerAlloc &a, const SystemConfig &cfg, double rel_tol)
{
    const double t = cfg.sinr_target();
    const double p_tot = cfg.p_tot_linear();
    QosReport r;
    r.z1 = detail::at_least(a.p * a.phi_n * c.f_n, t * (a.p * a.phi_m * c.h_n + c.q_n), rel_tol);
    r.z2 = detail::at_least(a.p * a.phi_m * c.f_m, t * (a.p * a.phi_n * c.h_m + c.q_m), rel_tol);
    r.z3 = detail::at_least(a.p * a.phi_m, a.p * a.phi_n, rel_tol);
    r.z4 = a.p >= 0.0 && detail::at_least(p_tot, a.p, rel_tol);
    r.z5 = a.phi_n >= 0.0 && a.phi_m >= 0.0 && detail::at_least(1.0, a.phi_n + a.phi_m, rel_tol);
    r.z6 = a.beta >= 0.0 && a.beta <= 1.0;
    return r;
}

inline QosReport qos_satisfied(const RateCoeffs &c, const PowerAlloc &a, const SystemConfig &cfg)
{
    return qos_satisfied(c, a, cfg, cfg.solver.qos_rel_tol);
}

} // namespace nomabc
