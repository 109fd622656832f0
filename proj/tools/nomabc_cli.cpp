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

// nomabc: run the Monte Carlo scenarios or the acceptance suites.
//
//   nomabc simulate --scenario alpha --config cfg.json --seed 7 --trials 500 --out results/
//   nomabc verify --suite oracle

#include "nomabc.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

namespace {

int simulate(const std::string &scenario, const std::string &config_path, std::optional<std::uint64_t> seed,
             std::optional<int> trials, int workers, const std::string &out_dir)
{
    nomabc::SystemConfig base;
    if (!config_path.empty())
        base = nomabc::load_config(config_path);
    auto spec = nomabc::default_spec(nomabc::parse_scenario(scenario), base);
    if (seed)
        spec.seed = *seed;
    if (trials)
        spec.trials = *trials;
    spec.workers = workers;
    const auto out = nomabc::run_scenario(spec);
    for (const auto &path : nomabc::write_outputs(out, out_dir))
        std::cout << "wrote " << path.string() << '\n';
    return 0;
}

int verify(const std::string &suite, int workers)
{
    nomabc::verify::Budget budget;
    budget.workers = workers;
    bool ok = true;
    for (const auto &r : nomabc::verify::run_suite(suite, budget))
    {
        std::cout << nomabc::verify::format_line(r) << std::endl;
        ok = ok && r.passed;
    }
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Multi-cell NOMA backscatter spectral-efficiency optimizer"};
    app.require_subcommand(1);

    auto *sim = app.add_subcommand("simulate", "run a Monte Carlo scenario and write CSV output");
    std::string scenario, config_path, out_dir;
    std::optional<std::uint64_t> seed;
    std::optional<int> trials;
    int workers = 0;
    sim->add_option("--scenario", scenario, "convergence, alpha or power")
        ->required()
        ->check(CLI::IsMember({"convergence", "alpha", "power"}));
    sim->add_option("--config", config_path, "JSON system configuration")->check(CLI::ExistingFile);
    sim->add_option("--seed", seed, "base seed (default: rng_seed from the config)");
    sim->add_option("--trials", trials, "Monte Carlo trials (default 500)")->check(CLI::PositiveNumber);
    sim->add_option("--out", out_dir, "output directory")->required();
    sim->add_option("--workers", workers, "worker threads, 0 for hardware concurrency")->check(CLI::NonNegativeNumber);

    auto *ver = app.add_subcommand("verify", "run acceptance suites");
    std::string suite;
    ver->add_option("--suite", suite, "oracle, calculus, trends or all")
        ->required()
        ->check(CLI::IsMember({"oracle", "calculus", "trends", "all"}));
    ver->add_option("--workers", workers, "worker threads, 0 for hardware concurrency")->check(CLI::NonNegativeNumber);

    CLI11_PARSE(app, argc, argv);
    try
    {
        if (*sim)
            return simulate(scenario, config_path, seed, trials, workers, out_dir);
        return verify(suite, workers);
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
