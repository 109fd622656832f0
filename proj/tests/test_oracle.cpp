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

#include "nomabc/optimizer.hpp"
#include "nomabc/oracle.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <random>
#include <sstream>

using namespace nomabc;
using nomabc::fixtures::channel;

TEST(GridSearch, CoarseGridIsExhaustive)
{
    auto cfg = fixtures::single_cell_config();
    cfg.r_req = 0.1;
    const auto real = fixtures::single_cell(1.0, 0.3, 0.5, 0.5, 0.5);
    const auto g = oracle::grid_search(real, cfg, 0.5);
    EXPECT_LE(g.evaluated, 6);
    // phi_n = 0.5, P in {0.5, 1} P_tot, beta in {0, 0.5, 1}
    const std::vector<double> powers{cfg.p_tot_linear()};
    const auto ch = cell_channel(real, powers, 0);
    double best = -1.0;
    for (double u : {0.5, 1.0})
        for (double b : {0.0, 0.5, 1.0})
        {
            const PowerAlloc a{u * cfg.p_tot_linear(), 0.5, 0.5, b};
            if (qos_satisfied(rate_coeffs(ch, b, cfg), a, cfg).all())
                best = std::max(best, oracle::cell_se_at(ch, cfg, 0.5, u, b));
        }
    EXPECT_DOUBLE_EQ(g.se, best);
}

TEST(GridSearch, MonotoneInstanceHitsCorner)
{
    // eta_m = 0 needs |g_m| = 0; SE then grows in P and beta
    auto cfg = fixtures::single_cell_config();
    cfg.r_req = 0.1;
    const auto real = fixtures::single_cell(1.0, 0.2, 1.0, 1.0, 0.0);
    for (auto mode : {oracle::GridMode::exhaustive, oracle::GridMode::power_monotone})
    {
        const auto g = oracle::grid_search(real, cfg, 0.05, mode);
        ASSERT_EQ(g.allocs.size(), 1u);
        EXPECT_DOUBLE_EQ(g.allocs[0].p, cfg.p_tot_linear());
        EXPECT_DOUBLE_EQ(g.allocs[0].beta, 1.0);
    }
}

TEST(GridSearch, RefinementNeverLosesSe)
{
    SystemConfig cfg;
    cfg.num_cells = 1;
    int checked = 0;
    for (std::uint64_t seed = 0; seed < 20; ++seed)
    {
        const auto real = draw_realization(cfg, seed);
        try
        {
            // step 1e-3 is a refinement of step 1e-2
            const auto coarse = oracle::grid_search(real, cfg, 1e-2, oracle::GridMode::power_monotone);
            const auto fine = oracle::grid_search(real, cfg, 1e-3, oracle::GridMode::power_monotone);
            EXPECT_GE(fine.se, coarse.se - 1e-12);
            ++checked;
        }
        catch (const oracle::OracleError &)
        {
        }
    }
    EXPECT_GT(checked, 0);
}

TEST(GridSearch, MonotoneModeAgreesWithExhaustive)
{
    SystemConfig cfg;
    cfg.num_cells = 1;
    for (std::uint64_t seed = 0; seed < 20; ++seed)
    {
        const auto real = draw_realization(cfg, seed);
        double a = -1.0, b = -1.0;
        try
        {
            a = oracle::grid_search(real, cfg, 0.02, oracle::GridMode::exhaustive).se;
        }
        catch (const oracle::OracleError &)
        {
        }
        try
        {
            b = oracle::grid_search(real, cfg, 0.02, oracle::GridMode::power_monotone).se;
        }
        catch (const oracle::OracleError &)
        {
        }
        EXPECT_EQ(a, b);
    }
}

TEST(GridSearch, TwoCellJointGrid)
{
    SystemConfig cfg;
    cfg.num_cells = 2;
    cfg.r_req = 0.1;
    const auto real = draw_realization(cfg, 2);
    try
    {
        const auto g = oracle::grid_search(real, cfg, 0.25);
        EXPECT_EQ(g.allocs.size(), 2u);
        EXPECT_EQ(g.evaluated, 40 * 40);
        const auto res = solve_network(real, cfg);
        if (res.all_feasible())
        {
            EXPECT_GE(res.network_se, g.se - 0.5);
        }
    }
    catch (const oracle::OracleError &)
    {
    }
}

TEST(GridSearch, Guards)
{
    SystemConfig cfg;
    cfg.num_cells = 4;
    const auto real = draw_realization(cfg, 1);
    EXPECT_THROW(oracle::grid_search(real, cfg, 0.5), oracle::OracleError);
    auto one = fixtures::single_cell_config();
    const auto r1 = fixtures::single_cell(1.0, 0.5);
    EXPECT_THROW(oracle::grid_search(r1, one, 0.0), oracle::OracleError);
    one.r_req = 30.0;
    try
    {
        oracle::grid_search(r1, one, 0.1);
        FAIL();
    }
    catch (const oracle::OracleError &e)
    {
        EXPECT_STREQ(e.what(), "grid_search: no feasible point");
    }
}

TEST(Hessian, MixedEntriesShareFormula)
{
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(0.01, 1.0);
    SystemConfig cfg;
    for (int i = 0; i < 100; ++i)
    {
        const auto c = rate_coeffs(channel(1 + u(rng), u(rng), u(rng), u(rng), u(rng), u(rng), u(rng)), u(rng), cfg);
        const auto e = oracle::hessian_entries(c, 100 * u(rng), 0.5 * u(rng), 0.5 + 0.5 * u(rng));
        EXPECT_EQ(e.phi12, e.phi21);
    }
}

TEST(Hessian, MatchesFiniteDifferences)
{
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> u(0.05, 1.0);
    SystemConfig cfg;
    cfg.sic_error = 0.5;
    for (int i = 0; i < 500; ++i)
    {
        const auto c = rate_coeffs(channel(1 + u(rng), u(rng), u(rng), u(rng), u(rng), 1 + u(rng), 1 + u(rng)), u(rng), cfg);
        const double p = 2 * u(rng), x = 0.1 + 0.3 * u(rng), y = 1 - x;
        const auto e = oracle::hessian_entries(c, p, x, y);
        const auto fd = oracle::hessian_fd(c, p, x, y);
        const double scale = std::max({std::abs(e.phi11), std::abs(e.phi22), std::abs(e.phi12)});
        EXPECT_NEAR(e.phi11, fd.phi11, 1e-4 * scale);
        EXPECT_NEAR(e.phi22, fd.phi22, 1e-4 * scale);
        EXPECT_NEAR(e.phi12, fd.phi12, 1e-4 * scale);
    }
}

TEST(Hessian, StrongWeakUserSignMatches)
{
    SystemConfig cfg;
    cfg.sic_error = 0.1;
    // F_m H_m dominant
    const auto c = rate_coeffs(channel(1.0, 0.9, 0.0, 0.0, 0.0, 0.01, 0.01), 0.0, cfg);
    const auto e = oracle::hessian_entries(c, 10.0, 0.2, 0.8);
    const auto fd = oracle::hessian_fd(c, 10.0, 0.2, 0.8);
    EXPECT_EQ(std::signbit(e.phi11), std::signbit(fd.phi11));
}

TEST(Concavity, SinglePointFractionIsBinary)
{
    SystemConfig cfg;
    const auto c = rate_coeffs(channel(1.0, 0.4, 0.0, 0.0, 0.0, 0.1, 0.1), 0.0, cfg);
    const auto r = oracle::concavity_report({oracle::ConcavityPoint{c, 10.0, 0.3, 0.7}});
    EXPECT_EQ(r.samples, 1u);
    EXPECT_TRUE(r.fraction() == 0.0 || r.fraction() == 1.0);
    EXPECT_EQ(r.concave + r.counterexamples.size(), 1u);
}

TEST(Concavity, EmptySampleThrows)
{
    try
    {
        oracle::concavity_report({});
        FAIL();
    }
    catch (const std::exception &e)
    {
        EXPECT_STREQ(e.what(), "empty sample");
    }
}

TEST(Concavity, ReportsSolverInteriorOptima)
{
    SystemConfig cfg;
    std::vector<oracle::ConcavityPoint> pts;
    for (std::uint64_t seed = 0; seed < 60; ++seed)
    {
        const auto real = draw_realization(cfg, seed);
        const auto res = solve_network(real, cfg);
        std::vector<double> powers;
        for (const auto &c : res.cells)
            powers.push_back(c.alloc.p);
        for (int j = 0; j < cfg.num_cells; ++j)
        {
            const auto &a = res.cells[j].alloc;
            if (res.cells[j].feasible && a.phi_n > 0.0 && a.phi_n < 0.5)
                pts.push_back(oracle::ConcavityPoint{rate_coeffs(cell_channel(real, powers, j), a, cfg), a.p, a.phi_n, a.phi_m});
        }
    }
    ASSERT_FALSE(pts.empty());
    std::ostringstream log;
    const auto r = oracle::concavity_report(pts, &log);
    EXPECT_EQ(r.samples, pts.size());
    EXPECT_GE(r.fraction(), 0.0);
    EXPECT_LE(r.fraction(), 1.0);
    // one structured line per counterexample
    std::size_t lines = 0;
    for (char ch : log.str())
        lines += ch == '\n';
    EXPECT_EQ(lines, r.counterexamples.size());
}

TEST(Kkt, QuadraticSurrogateStationaryPoint)
{
    // concave quadratic with interior maximum at (0.2, 0.6)
    auto f = [](double x, double u) { return -(x - 0.2) * (x - 0.2) - 2 * (u - 0.6) * (u - 0.6) + 0.5 * (x - 0.2) * (u - 0.6); };
    EXPECT_LT(oracle::stationarity_residual(f, 0.2, 0.6, true, true), 1e-8);
    EXPECT_GT(oracle::stationarity_residual(f, 0.3, 0.6, true, true), 1e-3);
}

TEST(Kkt, OnlyInteriorCoordinatesCount)
{
    auto f = [](double x, double u) { return x + u; };
    EXPECT_EQ(oracle::stationarity_residual(f, 0.5, 1.0, false, false), 0.0);
    EXPECT_NEAR(oracle::stationarity_residual(f, 0.2, 1.0, true, false), 1.0, 1e-9);

    SystemConfig cfg;
    const auto c = rate_coeffs(channel(1.0, 0.3, 0.0, 0.0, 0.0, 0.1, 0.1), 0.0, cfg);
    // phi_n = 0.5 and P = P_tot both sit on the box boundary
    EXPECT_EQ(oracle::kkt_residual(c, PowerAlloc{cfg.p_tot_linear(), 0.5, 0.5, 0.0}, DualState{}, cfg), 0.0);
}

TEST(Kkt, AcceptedPointBeatsRandomPoints)
{
    // phi_n = 0.5 sits on its box boundary, so only the P coordinate is scored
    SystemConfig cfg;
    cfg.num_cells = 1;
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double p_tot = cfg.p_tot_linear();
    int checked = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed)
    {
        const auto real = draw_realization(cfg, seed);
        const std::vector<double> powers{p_tot};
        const auto c = rate_coeffs(cell_channel(real, powers, 0), 0.0, cfg);
        DualState dual;
        dual.pi_1 = 1e-2 * u(rng);
        double best = 0.0, best_l = -1e300;
        for (double p : power_candidates(c, 0.5, dual, cfg))
            if (lagrangian_value(c, p, 0.5, dual, cfg) > best_l)
                best_l = lagrangian_value(c, p, 0.5, dual, cfg), best = p;
        if (best >= p_tot * (1 - 1e-6))
            continue;
        const double other = p_tot * (0.01 + 0.98 * u(rng));
        if (std::abs(other - best) < 1e-2 * p_tot)
            continue;
        ++checked;
        EXPECT_LT(oracle::kkt_residual(c, PowerAlloc{best, 0.5, 0.5, 0.0}, dual, cfg),
                  oracle::kkt_residual(c, PowerAlloc{other, 0.5, 0.5, 0.0}, dual, cfg));
    }
    EXPECT_GT(checked, 10);
}

TEST(BisectionOracle, KnownRoots)
{
    const auto r = oracle::bisection_real_roots(Poly4{{24, -50, 35, -10, 1}});
    ASSERT_EQ(r.size(), 4u);
    for (int k = 0; k < 4; ++k)
        EXPECT_NEAR(r[k], k + 1.0, 1e-9);
}
