// SPDX-License-Identifier: Apache-2.0
//
// nfdof: spatial degrees of freedom between coplanar continuous linear arrays
// Copyright (C) 2026 The nfdof authors
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

#include "run_config.hpp"
#include "table.hpp"

#include <nfdof/geometry.hpp>

#include <json.hpp>

#include <string>
#include <vector>

namespace nfdof::cli
{
    LinkGeometry make_link(const RunConfig &cfg);

    // Copy of `cfg` with one sweep parameter replaced.
    RunConfig with_parameter(const RunConfig &cfg, const std::string &parameter, double value);

    nlohmann::json manifest(const std::string &command, const RunConfig &cfg, const nlohmann::json &recipe = nullptr);

    nlohmann::json cmd_dof(const RunConfig &cfg);
    Table dof_table(const nlohmann::json &report);
    Table cmd_sweep(const RunConfig &cfg);
    Table cmd_svd_compare(const RunConfig &cfg);
    Table cmd_kernel_scan(const RunConfig &cfg);
    Table cmd_stats(const RunConfig &cfg);

    struct Output
    {
        std::string name; // file stem
        Table table;
        nlohmann::json recipe;
    };

    const std::vector<std::string> &figure_ids();
    std::vector<Output> cmd_figure(const std::string &id, const RunConfig &base);

    std::string render(const Table &t, const nlohmann::json &manifest, const std::string &format);
}
