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

#include "nomabc/core_model.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace nomabc;

TEST(DbmToLinear, KnownValues)
{
    EXPECT_DOUBLE_EQ(dbm_to_linear(30.0), 1000.0);
    EXPECT_DOUBLE_EQ(dbm_to_linear(0.0), 1.0);
    EXPECT_NEAR(dbm_to_linear(20.0), 100.0, 1e-12);
}

TEST(Topology, SingleCellInsideRadius)
{
    SystemConfig cfg;
    cfg.num_cells = 1;
    Rng rng(3);
    const auto topo = generate_topology(cfg, rng);
    ASSERT_EQ(topo.num_cells(), 1);
    const auto &c = topo.cells[0];
    EXPECT_EQ(c.bs.x, 0.0);
    EXPECT_EQ(c.bs.y, 0.0);
    for (Point2 p : {c.user_n, c.user_m, c.bd})
    {
        EXPECT_LE(distance(c.bs, p), cfg.cell_radius);
        EXPECT_GE(distance(c.bs, p), cfg.min_user_distance);
    }
}

TEST(Topology, SeededRunsAreIdentical)
{
    SystemConfig cfg;
    cfg.num_cells = 5;
    Topology a, b;
    const auto ra = draw_realization(cfg, 7, &a);
    const auto rb = draw_realization(cfg, 7, &b);
    for (int j = 0; j < 5; ++j)
    {
        EXPECT_EQ(a.cells[j].user_n.x, b.cells[j].user_n.x);
        EXPECT_EQ(a.cells[j].bd.y, b.cells[j].bd.y);
        EXPECT_EQ(ra.cells[j].gain_n, rb.cells[j].gain_n);
        EXPECT_EQ(ra.cells[j].bd_to_m, rb.cells[j].bd_to_m);
        for (int jp = 0; jp < 5; ++jp)
            EXPECT_EQ(ra.cross[j][jp], rb.cross[j][jp]);
    }
}

TEST(Topology, BaseStationsOnALine)
{
    SystemConfig cfg;
    cfg.num_cells = 2;
    cfg.inter_site_distance = 500.0;
    cfg.cell_radius = 250.0;
    cfg.min_user_distance = 10.0;
    Rng rng(1);
    const auto topo = generate_topology(cfg, rng);
    EXPECT_EQ(topo.cells[0].bs.x, 0.0);
    EXPECT_EQ(topo.cells[0].bs.y, 0.0);
    EXPECT_EQ(topo.cells[1].bs.x, 500.0);
    EXPECT_EQ(topo.cells[1].bs.y, 0.0);
}

class GainMean : public ::testing::TestWithParam<double>
{
};

TEST_P(GainMean, MatchesPathLoss)
{
    const double d = GetParam();
    Rng rng(11);
    double sum = 0.0;
    const int n = 100000;
    for (int i = 0; i < n; ++i)
        sum += sample_gain(d, 3.0, rng);
    const double expected = std::pow(d, -3.0);
    EXPECT_NEAR(sum / n, expected, 0.02 * expected);
}

INSTANTIATE_TEST_SUITE_P(Distances, GainMean, ::testing::Values(1.0, 10.0));

TEST(SampleChannels, StrongUserFirst)
{
    SystemConfig cfg;
    cfg.num_cells = 5;
    for (std::uint64_t seed = 0; seed < 200; ++seed)
    {
        const auto r = draw_realization(cfg, seed);
        for (const auto &c : r.cells)
            EXPECT_GE(c.gain_n, c.gain_m);
    }
}

TEST(SampleChannels, RelabelingKeepsGeometryConsistent)
{
    SystemConfig cfg;
    cfg.num_cells = 1;
    // distance of the relabeled strong user never exceeds what the gain law allows on average
    int nearer = 0;
    for (std::uint64_t seed = 0; seed < 500; ++seed)
    {
        Topology topo;
        draw_realization(cfg, seed, &topo);
        const auto &c = topo.cells[0];
        nearer += distance(c.bs, c.user_n) <= distance(c.bs, c.user_m);
    }
    EXPECT_GT(nearer, 250);
}

TEST(Interference, SingleCellIsZero)
{
    const auto r = fixtures::single_cell(1.0, 0.5);
    const std::vector<double> p{1000.0};
    EXPECT_EQ(intercell_interference(r, p, 0, User::n), 0.0);
    EXPECT_EQ(intercell_interference(r, p, 0, User::m), 0.0);
}

TEST(Interference, SingleTerm)
{
    ChannelRealization r;
    r.cells.resize(2);
    r.cross = {{{0.0, 0.0}, {0.5, 0.25}}, {{0.1, 0.2}, {0.0, 0.0}}};
    const std::vector<double> p{3.0, 1.0};
    EXPECT_DOUBLE_EQ(intercell_interference(r, p, 0, User::n), 0.5);
    EXPECT_DOUBLE_EQ(intercell_interference(r, p, 0, User::m), 0.25);
    EXPECT_DOUBLE_EQ(intercell_interference(r, p, 1, User::m), 0.6);
}

TEST(Interference, FiveCellsSumFourProducts)
{
    SystemConfig cfg;
    cfg.num_cells = 5;
    const auto r = draw_realization(cfg, 5);
    const std::vector<double> p(5, dbm_to_linear(30.0));
    for (int j = 0; j < 5; ++j)
    {
        double expected = 0.0;
        for (int jp = 0; jp < 5; ++jp)
            if (jp != j)
                expected += 1000.0 * r.cross[j][jp][0];
        EXPECT_NEAR(intercell_interference(r, p, j, User::n), expected, 1e-12 * expected);
        EXPECT_EQ(r.cross[j][j][0], 0.0);
    }
}

TEST(Interference, LinearInEachInterferer)
{
    SystemConfig cfg;
    cfg.num_cells = 3;
    const auto r = draw_realization(cfg, 9);
    std::vector<double> p{1.0, 2.0, 3.0};
    const double base = intercell_interference(r, p, 0, User::m);
    const double own = 2.0 * r.cross_gain(0, 1, User::m);
    p[1] *= 2.0;
    EXPECT_NEAR(intercell_interference(r, p, 0, User::m), base + own, 1e-15 * base);
}

TEST(Interference, FactoredUsesMeanCrossGain)
{
    ChannelRealization r;
    r.cells.resize(3);
    r.cross = {{{0.0, 0.0}, {0.2, 0.0}, {0.4, 0.0}}, {{0, 0}, {0, 0}, {0, 0}}, {{0, 0}, {0, 0}, {0, 0}}};
    const std::vector<double> p{9.0, 1.0, 3.0};
    EXPECT_NEAR(intercell_interference(r, p, 0, User::n, InterferenceModel::factored), 0.3 * 4.0, 1e-15);
    EXPECT_NEAR(intercell_interference(r, p, 0, User::n, InterferenceModel::per_interferer), 0.2 + 1.2, 1e-15);
}

TEST(Interference, RejectsWrongPowerCount)
{
    const auto r = fixtures::single_cell(1.0, 0.5);
    const std::vector<double> p{1.0, 2.0};
    EXPECT_THROW(intercell_interference(r, p, 0, User::n), std::invalid_argument);
}

TEST(SystemConfig, ValidateRejectsBadValues)
{
    SystemConfig cfg;
    EXPECT_NO_THROW(cfg.validate());
    cfg.num_cells = 0;
    EXPECT_THROW(cfg.validate(), ConfigError);
    cfg = {};
    cfg.sic_error = 1.5;
    EXPECT_THROW(cfg.validate(), ConfigError);
    cfg = {};
    cfg.noise_var = -1.0;
    EXPECT_THROW(cfg.validate(), ConfigError);
    cfg = {};
    cfg.r_req = 0.0;
    EXPECT_THROW(cfg.validate(), ConfigError);
}

TEST(SystemConfig, SinrTarget)
{
    SystemConfig cfg;
    cfg.r_req = 1.0;
    EXPECT_DOUBLE_EQ(cfg.sinr_target(), 1.0);
    cfg.r_req = 0.5;
    EXPECT_DOUBLE_EQ(cfg.sinr_target(), std::sqrt(2.0) - 1.0);
}
