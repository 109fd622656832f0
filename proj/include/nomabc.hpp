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

#include "nomabc/beta_solver.hpp"
#include "nomabc/config_json.hpp"
#include "nomabc/core_model.hpp"
#include "nomabc/experiments.hpp"
#include "nomabc/optimizer.hpp"
#include "nomabc/oracle.hpp"
#include "nomabc/polyroots.hpp"
#include "nomabc/power_dual.hpp"
#include "nomabc/sinr.hpp"
#include "nomabc/verification.hpp"
