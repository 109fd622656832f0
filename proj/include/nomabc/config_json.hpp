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

#include <json.hpp>

#include <fstream>
#include <string>

namespace nomabc {

NLOHMANN_JSON_SERIALIZE_ENUM(InterferenceModel, {{InterferenceModel::per_interferer, "per_interferer"},
                                                 {InterferenceModel::factored, "factored"}})
NLOHMANN_JSON_SERIALIZE_ENUM(BetaRule, {{BetaRule::max_se, "max_se"}, {BetaRule::z1_active, "z1_active"}})
NLOHMANN_JSON_SERIALIZE_ENUM(PhiQuadraticForm, {{PhiQuadraticForm::derived, "derived"},
                                                {PhiQuadraticForm::printed, "printed"}})
NLOHMANN_JSON_SERIALIZE_ENUM(Coupling, {{Coupling::gauss_seidel, "gauss_seidel"}, {Coupling::jacobi, "jacobi"}})

inline void to_json(nlohmann::json &j, const SolverSettings &s)
{
    j = nlohmann::json{{"dual_init", s.dual_init},   {"step0", s.step0},         {"tol_dual", s.tol_dual},
                       {"max_dual_iters", s.max_dual_iters}, {"kkt_tol", s.kkt_tol}, {"tol_outer", s.tol_outer},
                       {"max_outer", s.max_outer},   {"qos_rel_tol", s.qos_rel_tol}};
}

inline void to_json(nlohmann::json &j, const SystemConfig &c)
{
    j = nlohmann::json{{"num_cells", c.num_cells},
                       {"p_tot_dbm", c.p_tot_dbm},
                       {"sic_error", c.sic_error},
                       {"r_req", c.r_req},
                       {"noise_var", c.noise_var},
                       {"pathloss_exp", c.pathloss_exp},
                       {"cell_radius", c.cell_radius},
                       {"inter_site_distance", c.inter_site_distance},
                       {"min_user_distance", c.min_user_distance},
                       {"rng_seed", c.rng_seed},
                       {"interference_model", c.interference_model},
                       {"beta_rule", c.beta_rule},
                       {"phi_quadratic", c.phi_form},
                       {"coupling", c.coupling},
                       {"solver", c.solver}};
}

namespace detail {

template <typename T>
void read_key(const nlohmann::json &j, const char *key, T &out)
{
    if (auto it = j.find(key); it != j.end())
        out = it->template get<T>();
}

template <typename E>
void read_enum(const nlohmann::json &j, const char *key, E &out)
{
    auto it = j.find(key);
    if (it == j.end())
        return;
    // unknown names map to the first entry; reject them
    const E parsed = it->template get<E>();
    if (nlohmann::json(parsed) != *it)
        throw ConfigError(std::string("invalid config: unknown value for '") + key + "': " + it->dump());
    out = parsed;
}

inline void reject_unknown(const nlohmann::json &j, std::initializer_list<const char *> known, const std::string &where)
{
    for (auto it = j.begin(); it != j.end(); ++it)
    {
        bool ok = false;
        for (const char *k : known)
            ok = ok || it.key() == k;
        if (!ok)
            throw ConfigError("invalid config: unknown key '" + where + it.key() + "'");
    }
}

} // namespace detail

/// Missing keys keep their defaults; unknown keys are rejected.
inline void from_json(const nlohmann::json &j, SystemConfig &c)
{
    using detail::read_key;
    if (!j.is_object())
        throw ConfigError("invalid config: top level must be an object");
    detail::reject_unknown(j,
                           {"num_cells", "p_tot_dbm", "sic_error", "r_req", "noise_var", "pathloss_exp", "cell_radius",
                            "inter_site_distance", "min_user_distance", "rng_seed", "interference_model", "beta_rule",
                            "phi_quadratic", "coupling", "solver"},
                           "");
    read_key(j, "num_cells", c.num_cells);
    read_key(j, "p_tot_dbm", c.p_tot_dbm);
    read_key(j, "sic_error", c.sic_error);
    read_key(j, "r_req", c.r_req);
    read_key(j, "noise_var", c.noise_var);
    read_key(j, "pathloss_exp", c.pathloss_exp);
    read_key(j, "cell_radius", c.cell_radius);
    read_key(j, "inter_site_distance", c.inter_site_distance);
    read_key(j, "min_user_distance", c.min_user_distance);
    read_key(j, "rng_seed", c.rng_seed);
    detail::read_enum(j, "interference_model", c.interference_model);
    detail::read_enum(j, "beta_rule", c.beta_rule);
    detail::read_enum(j, "phi_quadratic", c.phi_form);
    detail::read_enum(j, "coupling", c.coupling);
    if (auto it = j.find("solver"); it != j.end())
    {
        const auto &s = *it;
        detail::reject_unknown(s,
                               {"dual_init", "step0", "tol_dual", "max_dual_iters", "kkt_tol", "tol_outer", "max_outer",
                                "qos_rel_tol"},
                               "solver.");
        read_key(s, "dual_init", c.solver.dual_init);
        read_key(s, "step0", c.solver.step0);
        read_key(s, "tol_dual", c.solver.tol_dual);
        read_key(s, "max_dual_iters", c.solver.max_dual_iters);
        read_key(s, "kkt_tol", c.solver.kkt_tol);
        read_key(s, "tol_outer", c.solver.tol_outer);
        read_key(s, "max_outer", c.solver.max_outer);
        read_key(s, "qos_rel_tol", c.solver.qos_rel_tol);
    }
}

inline SystemConfig parse_config(const std::string &text)
{
    SystemConfig cfg;
    try
    {
        from_json(nlohmann::json::parse(text), cfg);
    }
    catch (const nlohmann::json::exception &e)
    {
        throw ConfigError(std::string("invalid config: ") + e.what());
    }
    cfg.validate();
    return cfg;
}

inline SystemConfig load_config(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file '" + path + "'");
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    try
    {
        return parse_config(text);
    }
    catch (const ConfigError &e)
    {
        throw ConfigError(path + ": " + e.what());
    }
}

} // namespace nomabc
