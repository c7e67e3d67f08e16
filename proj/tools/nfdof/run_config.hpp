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

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace nfdof::cli
{
    struct SweepSpec
    {
        std::string parameter; // theta_T, theta_R, x0, y0, L_T, L_R, frequency
        double start = 0.0;
        double stop = 0.0;
        int steps = 1;
        bool open_start = false; // drop `start`, e.g. for (-pi, pi]

        std::vector<double> values() const;
    };

    struct StatsSpec
    {
        double R = 20.0;
        std::string scenario = "full-visibility"; // partial-rplus, partial-rminus, full-visibility, conditional-on-x0
        double x0 = 10.0;
        int grid_points = 512;
        std::vector<double> grid; // explicit grid, overrides grid_points
        std::uint64_t mc_samples = 1000000;
    };

    struct RunConfig
    {
        double frequency_hz = 30e9;
        double L_T_m = 0.2;
        double L_R_m = 5.0;
        double x0_m = 10.0;
        double y0_m = 0.0;
        double theta_T = 0.0; // [rad]
        double theta_R = 3.141592653589793;
        std::optional<SweepSpec> sweep;
        std::optional<StatsSpec> stats;
        std::string output_path;
        std::string format = "csv";
        std::uint64_t seed = 1;
        double threshold = 0.96;       // sum-rule fraction
        double spacing_lambda = 0.25;  // SVD sampling step in wavelengths
        int n_samples = 1024;          // kernel scan samples
        double zeta_ref = 0.0;         // kernel reference point, from the effective Rx center
        std::vector<double> x0_over_L_R = {1.32, 2.0, 3.0, 5.0};

        double wavelength() const;
        void validate() const;
        nlohmann::json to_json() const;
    };

    // Parses a config document; with `degrees`, angle fields are read in degrees.
    RunConfig parse_config(const nlohmann::json &doc, bool degrees);
    RunConfig load_config_file(const std::string &path, bool degrees);
}
