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

#include "nomabc/sinr.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace nomabc;
using nomabc::fixtures::channel;

namespace {

SystemConfig unit_noise(double alpha)
{
    SystemConfig cfg;
    cfg.num_cells = 1;
    cfg.noise_var = 1.0;
    cfg.sic_error = alpha;
    return cfg;
}

} // namespace

TEST(RateCoeffs, BackscatterOff)
{
    const auto cfg = unit_noise(0.3);
    const auto c = rate_coeffs(channel(2.0, 0.5, 1.0, 1.0, 1.0), 0.0, cfg);
    EXPECT_EQ(c.theta_n, 0.0);
    EXPECT_EQ(c.theta_m, 0.0);
    EXPECT_EQ(c.f_n, 2.0);
    EXPECT_EQ(c.f_m, 0.5);
    EXPECT_EQ(c.h_m, 0.5);
}

TEST(RateCoeffs, SicResidual)
{
    auto cfg = unit_noise(0.0);
    EXPECT_EQ(rate_coeffs(channel(2.0, 0.5), 0.0, cfg).h_n, 0.0);
    cfg.sic_error = 0.5;
    EXPECT_EQ(rate_coeffs(channel(2.0, 0.5), 0.0, cfg).h_n, 1.0);
}

TEST(RateCoeffs, BackscatterTerms)
{
    auto cfg = unit_noise(0.5);
    const auto c = rate_coeffs(channel(2.0, 0.5, 0.5, 4.0, 2.0, 0.25, 0.75), 0.5, cfg);
    EXPECT_DOUBLE_EQ(c.theta_n, 1.0);
    EXPECT_DOUBLE_EQ(c.theta_m, 0.5);
    EXPECT_DOUBLE_EQ(c.f_n, 3.0);
    EXPECT_DOUBLE_EQ(c.f_m, 1.0);
    EXPECT_DOUBLE_EQ(c.h_m, 1.0);
    EXPECT_DOUBLE_EQ(c.q_n, 1.25);
    EXPECT_DOUBLE_EQ(c.q_m, 1.75);
}

TEST(Sinr, StrongUser)
{
    const auto c0 = rate_coeffs(channel(1.0, 0.5), 0.0, unit_noise(0.0));
    EXPECT_EQ(sinr_n(c0, 2.0, 0.0, 0.5), 0.0);
    EXPECT_DOUBLE_EQ(sinr_n(c0, 2.0, 0.5, 0.5), 1.0);
    const auto c1 = rate_coeffs(channel(1.0, 0.5), 0.0, unit_noise(1.0));
    EXPECT_DOUBLE_EQ(sinr_n(c1, 2.0, 0.5, 0.5), 0.5);
}

TEST(Sinr, WeakUser)
{
    RateCoeffs c;
    c.f_m = c.h_m = 2.0;
    c.q_m = 1.0;
    EXPECT_EQ(sinr_m(c, 1.0, 0.5, 0.0), 0.0);
    EXPECT_DOUBLE_EQ(sinr_m(c, 1.0, 0.0, 1.0), 2.0);

    auto cfg = unit_noise(0.0);
    cfg.noise_var = 0.1;
    const auto c2 = rate_coeffs(channel(1.0, 1.0), 0.0, cfg);
    EXPECT_NEAR(sinr_m(c2, 2.0, 0.2, 0.8), 3.2, 1e-12);
}

TEST(CellSe, Examples)
{
    RateCoeffs c;
    c.f_n = c.f_m = c.h_m = 1.0;
    c.q_n = c.q_m = 1.0;
    EXPECT_EQ(cell_se(c, 1.0, 0.0, 0.0), 0.0);
    EXPECT_DOUBLE_EQ(rate_from_sinr(1.0) + rate_from_sinr(3.0), 3.0);
}

TEST(CellSe, MatchesRawGainRecomputation)
{
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0.01, 1.0);
    for (int i = 0; i < 1000; ++i)
    {
        SystemConfig cfg;
        cfg.sic_error = u(rng);
        const double gn = u(rng) + 1.0, gm = u(rng), hi = u(rng), g_n = u(rng), g_m = u(rng);
        const double in = u(rng), im = u(rng), beta = u(rng), p = 1000.0 * u(rng), x = 0.5 * u(rng);
        const auto c = rate_coeffs(channel(gn, gm, hi, g_n, g_m, in, im), beta, cfg);
        const double y = 1.0 - x;
        const double gamma_n = p * x * (gn + beta * hi * g_n) / (p * y * cfg.sic_error * gn + in + cfg.noise_var);
        const double gamma_m = p * y * (gm + beta * hi * g_m) / (p * x * (gm + beta * hi * g_m) + im + cfg.noise_var);
        const double expected = std::log2(1.0 + gamma_n) + std::log2(1.0 + gamma_m);
        EXPECT_NEAR(cell_se(c, p, x, y), expected, 1e-12 * expected);
    }
}

TEST(CellSe, ZeroBetaEqualsZeroedBackscatterGains)
{
    SystemConfig cfg;
    const auto with_bd = rate_coeffs(channel(1.3, 0.4, 0.9, 0.8, 0.7, 0.1, 0.2), 0.0, cfg);
    const auto without = rate_coeffs(channel(1.3, 0.4, 0.0, 0.0, 0.0, 0.1, 0.2), 0.7, cfg);
    EXPECT_EQ(cell_se(with_bd, 10.0, 0.3, 0.7), cell_se(without, 10.0, 0.3, 0.7));
}

TEST(Sinr, Monotonicity)
{
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(0.05, 0.9);
    for (int i = 0; i < 2000; ++i)
    {
        SystemConfig cfg;
        cfg.sic_error = u(rng);
        const auto ch = channel(1.0 + u(rng), u(rng), u(rng), u(rng), u(rng), u(rng), u(rng));
        const auto c = rate_coeffs(ch, u(rng), cfg);
        const double p = 100.0 * u(rng), x = 0.5 * u(rng), y = 1.0 - x;
        EXPECT_GT(sinr_n(c, p, x * 1.01, y), sinr_n(c, p, x, y));
        EXPECT_LE(sinr_n(c, p, x, y * 1.01), sinr_n(c, p, x, y));

        auto worse = cfg;
        worse.sic_error = std::min(1.0, cfg.sic_error + 0.05);
        EXPECT_LE(sinr_n(rate_coeffs(ch, 0.5, worse), p, x, y), sinr_n(rate_coeffs(ch, 0.5, cfg), p, x, y));
        auto noisier = ch;
        noisier.interference_n += 0.1;
        EXPECT_LE(sinr_n(rate_coeffs(noisier, 0.5, cfg), p, x, y), sinr_n(rate_coeffs(ch, 0.5, cfg), p, x, y));
    }
}

TEST(Qos, ZeroSplitFailsRateConstraints)
{
    SystemConfig cfg;
    const auto c = rate_coeffs(channel(1.0, 0.5), 0.0, cfg);
    const auto r = qos_satisfied(c, PowerAlloc{10.0, 0.0, 0.0, 0.0}, cfg);
    EXPECT_FALSE(r.z1);
    EXPECT_FALSE(r.z2);
    EXPECT_TRUE(r.z3);
    EXPECT_TRUE(r.z5);
}

TEST(Qos, BoundaryInclusive)
{
    auto cfg = unit_noise(0.0);
    cfg.r_req = 1.0; // target SINR 1
    const auto c = rate_coeffs(channel(1.0, 0.5), 0.0, cfg);
    // gamma_n = 2 * 0.5 * 1 / 1 = 1 exactly
    const auto r = qos_satisfied(c, PowerAlloc{2.0, 0.5, 0.5, 0.0}, cfg, 0.0);
    EXPECT_EQ(sinr_n(c, 2.0, 0.5, 0.5), 1.0);
    EXPECT_TRUE(r.z1);
}

TEST(Qos, BoxConstraints)
{
    SystemConfig cfg;
    const auto c = rate_coeffs(channel(1.0, 0.5), 0.0, cfg);
    EXPECT_FALSE(qos_satisfied(c, PowerAlloc{10.0, 0.6, 0.4, 0.0}, cfg).z3);
    EXPECT_FALSE(qos_satisfied(c, PowerAlloc{2000.0, 0.2, 0.8, 0.0}, cfg).z4);
    EXPECT_FALSE(qos_satisfied(c, PowerAlloc{10.0, 0.3, 0.8, 0.0}, cfg).z5);
    EXPECT_FALSE(qos_satisfied(c, PowerAlloc{10.0, 0.2, 0.8, 1.5}, cfg).z6);
}

TEST(Qos, AgreesWithLogFormulation)
{
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    int disagreements = 0;
    for (int i = 0; i < 10000; ++i)
    {
        SystemConfig cfg;
        cfg.r_req = 0.05 + 2.0 * u(rng);
        cfg.sic_error = u(rng);
        const auto c = rate_coeffs(channel(0.5 + u(rng), 0.5 * u(rng), u(rng), u(rng), u(rng), u(rng), u(rng)), u(rng), cfg);
        const double p = 1000.0 * u(rng), x = 0.5 * u(rng);
        const PowerAlloc a{p, x, 1.0 - x, 0.0};
        const double rate_n = std::log2(1.0 + sinr_n(c, a));
        // skip points within rounding of the boundary
        if (std::abs(rate_n - cfg.r_req) < 1e-9)
            continue;
        disagreements += qos_satisfied(c, a, cfg, 0.0).z1 != (rate_n >= cfg.r_req);
    }
    EXPECT_EQ(disagreements, 0);
}
