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

#include "nomabc/core_model.hpp"

#include <vector>

namespace nomabc::fixtures {

/// Single-cell realization with the given gains.
inline ChannelRealization single_cell(double gain_n, double gain_m, double bs_to_bd = 0.0, double bd_to_n = 0.0,
                                      double bd_to_m = 0.0)
{
    ChannelRealization r;
    r.cells.push_back({gain_n, gain_m, bs_to_bd, bd_to_n, bd_to_m});
    r.cross = {{{0.0, 0.0}}};
    return r;
}

inline CellChannel channel(double gain_n, double gain_m, double bs_to_bd = 0.0, double bd_to_n = 0.0,
                           double bd_to_m = 0.0, double i_n = 0.0, double i_m = 0.0)
{
    return {{gain_n, gain_m, bs_to_bd, bd_to_n, bd_to_m}, i_n, i_m};
}

inline SystemConfig single_cell_config()
{
    SystemConfig cfg;
    cfg.num_cells = 1;
    return cfg;
}

} // namespace nomabc::fixtures
