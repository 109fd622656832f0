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

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace nomabc {

/// Raised for invalid scenario parameters.
class ConfigError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

enum class InterferenceModel
{
    per_interferer, // sum_j' P_j' |h_j'|^2
    factored        // mean cross gain times sum_j' P_j'
};

enum class BetaRule
{
    max_se,
    z1_active
};

enum class PhiQuadraticForm
{
    derived, // successive-approximation quadratic with exact derivative terms
    printed  // literal A, B, S coefficient expressions, kept for comparison
};

enum class Coupling
{
    gauss_seidel,
    jacobi
};

struct SolverSettings
{
    double dual_init = 0.01;
    double step0 = 0.1;
    double tol_dual = 1e-4;
    int max_dual_iters = 500;
    double kkt_tol = 1e-4;
    double tol_outer = 1e-4;
    int max_outer = 50;
    double qos_rel_tol = 1e-9;
};

/// All scenario parameters. Powers are linear mW except p_tot_dbm.
struct SystemConfig
{
    int num_cells = 5;
    double p_tot_dbm = 30.0;
    double sic_error = 0.5;  // alpha
    double r_req = 0.5;      // bps/Hz
    double noise_var = 0.1;  // mW
    double pathloss_exp = 3.0;
    double cell_radius = 5.0;
    double inter_site_distance = 10.0;
    double min_user_distance = 1.0;
    std::uint64_t rng_seed = 1;
    InterferenceModel interference_model = InterferenceModel::per_interferer;
    BetaRule beta_rule = BetaRule::max_se;
    PhiQuadraticForm phi_form = PhiQuadraticForm::derived;
    Coupling coupling = Coupling::gauss_seidel;
    SolverSettings solver{};

    double p_tot_linear() const;
    /// 2^r_req - 1, the SINR floor implied by the rate requirement.
    double sinr_target() const { return std::exp2(r_req) - 1.0; }
    void validate() const;
};

inline double dbm_to_linear(double p_dbm)
{
    return std::pow(10.0, p_dbm / 10.0);
}

inline double SystemConfig::p_tot_linear() const
{
    return dbm_to_linear(p_tot_dbm);
}

inline void SystemConfig::validate() const
{
    auto fail = [](const std::string &what) { throw ConfigError("invalid config: " + what); };
    if (num_cells < 1)
        fail("num_cells must be >= 1");
    if (!(sic_error >= 0.0 && sic_error <= 1.0))
        fail("sic_error must lie in [0,1]");
    if (!(noise_var > 0.0))
        fail("noise_var must be > 0");
    if (!(pathloss_exp > 0.0))
        fail("pathloss_exp must be > 0");
    if (!(r_req > 0.0) || !std::isfinite(r_req))
        fail("r_req must be > 0");
    if (!std::isfinite(p_tot_dbm))
        fail("p_tot_dbm must be finite");
    if (!(min_user_distance > 0.0 && min_user_distance < cell_radius))
        fail("min_user_distance must lie in (0, cell_radius)");
    if (!(inter_site_distance > 0.0))
        fail("inter_site_distance must be > 0");
    if (solver.max_dual_iters < 1 || solver.max_outer < 1)
        fail("iteration caps must be >= 1");
    if (!(solver.step0 > 0.0) || !(solver.tol_dual > 0.0) || !(solver.tol_outer > 0.0))
        fail("solver step and tolerances must be > 0");
    if (solver.dual_init < 0.0)
        fail("dual_init must be >= 0");
}

struct Point2
{
    double x = 0.0;
    double y = 0.0;
};

inline double distance(Point2 a, Point2 b)
{
    return std::hypot(a.x - b.x, a.y - b.y);
}

struct CellLayout
{
    Point2 bs;
    Point2 user_n;
    Point2 user_m;
    Point2 bd;
};

struct Topology
{
    std::vector<CellLayout> cells;
    int num_cells() const { return static_cast<int>(cells.size()); }
};

/// Squared channel gains of one cell. Index 0 of the user arrays is U_n, 1 is U_m.
struct CellGains
{
    double gain_n = 0.0;   // |h_n|^2
    double gain_m = 0.0;   // |h_m|^2
    double bs_to_bd = 0.0; // |h_i|^2
    double bd_to_n = 0.0;  // |g_n|^2
    double bd_to_m = 0.0;  // |g_m|^2
};

enum class User : int
{
    n = 0,
    m = 1
};

struct ChannelRealization
{
    std::vector<CellGains> cells;
    /// cross[j][jp][k]: gain from BS jp to user k of cell j (zero on the diagonal).
    std::vector<std::vector<std::array<double, 2>>> cross;

    int num_cells() const { return static_cast<int>(cells.size()); }
    double cross_gain(int cell, int interferer, User user) const
    {
        return cross[cell][interferer][static_cast<int>(user)];
    }
};

/// One cell's channel with interference already folded in, the input of both subproblems.
struct CellChannel
{
    CellGains gains;
    double interference_n = 0.0;
    double interference_m = 0.0;
};

using Rng = std::mt19937_64;

namespace detail {

inline Point2 sample_annulus(Point2 centre, double r_min, double r_max, Rng &rng)
{
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double r = std::sqrt(r_min * r_min + unit(rng) * (r_max * r_max - r_min * r_min));
    const double theta = 2.0 * std::numbers::pi * unit(rng);
    return {centre.x + r * std::cos(theta), centre.y + r * std::sin(theta)};
}

} // namespace detail

/// BSs on a line at multiples of inter_site_distance; users in the annulus
/// [min_user_distance, cell_radius], the BD in [min_user_distance, cell_radius / 2].
inline Topology generate_topology(const SystemConfig &cfg, Rng &rng)
{
    cfg.validate();
    Topology topo;
    topo.cells.reserve(static_cast<std::size_t>(cfg.num_cells));
    const double bd_radius = std::max(cfg.cell_radius / 2.0, cfg.min_user_distance);
    for (int j = 0; j < cfg.num_cells; ++j)
    {
        CellLayout cell;
        cell.bs = {j * cfg.inter_site_distance, 0.0};
        cell.user_n = detail::sample_annulus(cell.bs, cfg.min_user_distance, cfg.cell_radius, rng);
        cell.user_m = detail::sample_annulus(cell.bs, cfg.min_user_distance, cfg.cell_radius, rng);
        cell.bd = detail::sample_annulus(cell.bs, cfg.min_user_distance, bd_radius, rng);
        topo.cells.push_back(cell);
    }
    return topo;
}

/// |h|^2 for a Rayleigh link: exponential with mean d^-delta.
inline double sample_gain(double d, double pathloss_exp, Rng &rng)
{
    std::exponential_distribution<double> unit_exp(1.0);
    return unit_exp(rng) * std::pow(d, -pathloss_exp);
}

/// Draws every link of the topology, then relabels users so that gain_n >= gain_m.
/// Relabelling swaps the layout in place so the topology stays consistent.
inline ChannelRealization sample_channels(Topology &topo, const SystemConfig &cfg, Rng &rng)
{
    const int J = topo.num_cells();
    ChannelRealization real;
    real.cells.resize(static_cast<std::size_t>(J));
    real.cross.assign(static_cast<std::size_t>(J), std::vector<std::array<double, 2>>(static_cast<std::size_t>(J), {0.0, 0.0}));
    const double delta = cfg.pathloss_exp;
    for (int j = 0; j < J; ++j)
    {
        auto &layout = topo.cells[j];
        CellGains g;
        g.gain_n = sample_gain(distance(layout.bs, layout.user_n), delta, rng);
        g.gain_m = sample_gain(distance(layout.bs, layout.user_m), delta, rng);
        g.bs_to_bd = sample_gain(distance(layout.bs, layout.bd), delta, rng);
        g.bd_to_n = sample_gain(std::max(distance(layout.bd, layout.user_n), cfg.min_user_distance), delta, rng);
        g.bd_to_m = sample_gain(std::max(distance(layout.bd, layout.user_m), cfg.min_user_distance), delta, rng);
        for (int jp = 0; jp < J; ++jp)
        {
            if (jp == j)
                continue;
            const double to_n = sample_gain(distance(topo.cells[jp].bs, layout.user_n), delta, rng);
            const double to_m = sample_gain(distance(topo.cells[jp].bs, layout.user_m), delta, rng);
            real.cross[j][jp] = {to_n, to_m};
        }
        if (g.gain_n < g.gain_m)
        {
            std::swap(g.gain_n, g.gain_m);
            std::swap(g.bd_to_n, g.bd_to_m);
            std::swap(layout.user_n, layout.user_m);
            for (int jp = 0; jp < J; ++jp)
                std::swap(real.cross[j][jp][0], real.cross[j][jp][1]);
        }
        real.cells[j] = g;
    }
    return real;
}

/// Convenience: topology and channels from one seeded stream.
inline ChannelRealization draw_realization(const SystemConfig &cfg, std::uint64_t seed, Topology *topo_out = nullptr)
{
    Rng rng(seed);
    Topology topo = generate_topology(cfg, rng);
    ChannelRealization real = sample_channels(topo, cfg, rng);
    if (topo_out)
        *topo_out = std::move(topo);
    return real;
}

/// I^j_k: interference at user k of cell j given the transmit power of every cell.
inline double intercell_interference(const ChannelRealization &real, std::span<const double> powers, int cell, User user,
                                     InterferenceModel model = InterferenceModel::per_interferer)
{
    const int J = real.num_cells();
    if (static_cast<int>(powers.size()) != J)
        throw std::invalid_argument("intercell_interference: one power per cell required");
    if (J == 1)
        return 0.0;
    if (model == InterferenceModel::per_interferer)
    {
        double sum = 0.0;
        for (int jp = 0; jp < J; ++jp)
            if (jp != cell)
                sum += powers[jp] * real.cross_gain(cell, jp, user);
        return sum;
    }
    double gain_sum = 0.0;
    double power_sum = 0.0;
    for (int jp = 0; jp < J; ++jp)
    {
        if (jp == cell)
            continue;
        gain_sum += real.cross_gain(cell, jp, user);
        power_sum += powers[jp];
    }
    return gain_sum / (J - 1) * power_sum;
}

inline CellChannel cell_channel(const ChannelRealization &real, std::span<const double> powers, int cell,
                                InterferenceModel model = InterferenceModel::per_interferer)
{
    CellChannel ch;
    ch.gains = real.cells[cell];
    ch.interference_n = intercell_interference(real, powers, cell, User::n, model);
    ch.interference_m = intercell_interference(real, powers, cell, User::m, model);
    return ch;
}

} // namespace nomabc
