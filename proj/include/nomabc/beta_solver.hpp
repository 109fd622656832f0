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
#include "sinr.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <vector>

namespace nomabc {

/// d SE / d beta. The weak-user term is (T_m V_m - E_m eta_m) / (H (H + F)) with
/// H = V_m + beta eta_m and F = E_m + beta T_m.
inline double se_beta_derivative(const BetaCoeffs &b, double beta)
{
    const double f_n = b.e_n + beta * b.t_n;
    const double f_m = b.e_m + beta * b.t_m;
    const double h_m = b.v_m + beta * b.eta_m;
    return (b.t_n / (f_n + b.v_n) + (b.t_m * b.v_m - b.e_m * b.eta_m) / (h_m * (h_m + f_m))) / std::numbers::ln2;
}

/// beta at which Z1 holds with equality, if T_n > 0.
inline std::optional<double> z1_active_beta(const BetaCoeffs &b, double r_req)
{
    if (!(b.t_n > 0.0))
        return std::nullopt;
    return ((std::exp2(r_req) - 1.0) * b.v_n - b.e_n) / b.t_n;
}

/// beta at which Z2 holds with equality, if T_m - (2^R - 1) eta_m != 0.
inline std::optional<double> z2_active_beta(const BetaCoeffs &b, double r_req)
{
    const double t = std::exp2(r_req) - 1.0;
    const double den = b.t_m - t * b.eta_m;
    if (den == 0.0)
        return std::nullopt;
    return (t * b.v_m - b.e_m) / den;
}

/// {0, 1} plus the constraint-active roots that fall inside [0, 1].
inline std::vector<double> beta_candidates(const BetaCoeffs &b, double r_req)
{
    std::vector<double> out{0.0, 1.0};
    for (auto r : {z1_active_beta(b, r_req), z2_active_beta(b, r_req)})
        if (r && *r >= 0.0 && *r <= 1.0)
            out.push_back(*r);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline bool beta_qos(const BetaCoeffs &b, double beta, double r_req, double rel_tol)
{
    const double t = std::exp2(r_req) - 1.0;
    return detail::at_least(b.e_n + beta * b.t_n, t * b.v_n, rel_tol) &&
           detail::at_least(b.e_m + beta * b.t_m, t * (b.v_m + beta * b.eta_m), rel_tol);
}

/// Interior maximizer of SE on [0, 1] when the derivative changes sign there.
inline std::optional<double> beta_stationary_point(const BetaCoeffs &b)
{
    double lo = 0.0, hi = 1.0;
    if (!(se_beta_derivative(b, lo) > 0.0 && se_beta_derivative(b, hi) < 0.0))
        return std::nullopt;
    for (int it = 0; it < 200 && hi - lo > 1e-15; ++it)
    {
        const double mid = 0.5 * (lo + hi);
        (se_beta_derivative(b, mid) > 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

struct BetaSolution
{
    double beta = 0.0;
    bool feasible = false; // false: no beta in [0,1] meets Z1 and Z2; beta is then the SE maximizer
    double se = 0.0;
};

inline BetaSolution solve_beta(const BetaCoeffs &b, double r_req, const SystemConfig &cfg)
{
    std::vector<double> cands = beta_candidates(b, r_req);
    if (auto s = beta_stationary_point(b))
        cands.push_back(*s);
    std::sort(cands.begin(), cands.end());

    const double tol = cfg.solver.qos_rel_tol;
    std::optional<BetaSolution> best_ok, best_any;
    for (double beta : cands)
    {
        const BetaSolution s{beta, beta_qos(b, beta, r_req, tol), beta_se(b, beta)};
        // ascending order: strict '>' keeps the smaller beta on ties
        if (!best_any || s.se > best_any->se)
            best_any = s;
        if (s.feasible && (!best_ok || s.se > best_ok->se))
            best_ok = s;
    }
    if (cfg.beta_rule == BetaRule::z1_active)
    {
        if (auto r = z1_active_beta(b, r_req); r && *r >= 0.0 && *r <= 1.0 && beta_qos(b, *r, r_req, tol))
            return {*r, true, beta_se(b, *r)};
    }
    return best_ok ? *best_ok : *best_any;
}

} // namespace nomabc
