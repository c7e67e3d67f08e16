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

#include "commands.hpp"

#include <nfdof/core.hpp>

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

namespace
{
    using namespace nfdof;
    using namespace nfdof::cli;

    struct Options
    {
        std::string config, out, format;
        std::optional<std::uint64_t> seed;
        bool deg = false;
        std::optional<double> theta_T, theta_R, x0, y0, L_T, L_R, frequency, threshold, spacing, zeta_ref;
        std::optional<int> samples;
        std::optional<std::uint64_t> mc_samples;
        std::vector<double> ratios;
        std::string figure;
    };

    void add_common(CLI::App *cmd, Options &o)
    {
        cmd->add_option("--config", o.config, "JSON run config");
        cmd->add_option("--out", o.out, "output file (figure: directory)");
        cmd->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
        cmd->add_option("--seed", o.seed, "RNG seed");
        cmd->add_flag("--deg", o.deg, "angles in degrees");
        cmd->add_option("--theta-T", o.theta_T, "Tx rotation");
        cmd->add_option("--theta-R", o.theta_R, "Rx rotation");
        cmd->add_option("--x0", o.x0, "Rx center x [m]");
        cmd->add_option("--y0", o.y0, "Rx center y [m]");
        cmd->add_option("--L-T", o.L_T, "Tx length [m]");
        cmd->add_option("--L-R", o.L_R, "Rx length [m]");
        cmd->add_option("--frequency", o.frequency, "carrier [Hz]");
    }

    RunConfig build_config(const Options &o)
    {
        RunConfig c = o.config.empty() ? RunConfig{} : load_config_file(o.config, o.deg);
        const double a = o.deg ? pi / 180.0 : 1.0;
        if (o.theta_T)
            c.theta_T = *o.theta_T * a;
        if (o.theta_R)
            c.theta_R = *o.theta_R * a;
        if (o.x0)
            c.x0_m = *o.x0;
        if (o.y0)
            c.y0_m = *o.y0;
        if (o.L_T)
            c.L_T_m = *o.L_T;
        if (o.L_R)
            c.L_R_m = *o.L_R;
        if (o.frequency)
            c.frequency_hz = *o.frequency;
        if (o.threshold)
            c.threshold = *o.threshold;
        if (o.spacing)
            c.spacing_lambda = *o.spacing;
        if (o.zeta_ref)
            c.zeta_ref = *o.zeta_ref;
        if (o.samples)
            c.n_samples = *o.samples;
        if (o.seed)
            c.seed = *o.seed;
        if (!o.ratios.empty())
            c.x0_over_L_R = o.ratios;
        if (o.mc_samples)
        {
            if (!c.stats)
                c.stats = StatsSpec{};
            c.stats->mc_samples = *o.mc_samples;
        }
        if (!o.format.empty())
            c.format = o.format;
        if (!o.out.empty())
            c.output_path = o.out;
        c.validate();
        return c;
    }

    void emit(const std::string &text, const std::string &path)
    {
        if (path.empty() || path == "-")
        {
            std::cout << text;
            return;
        }
        std::ofstream f(path, std::ios::binary);
        if (!f)
            throw error(errc::usage, "cannot write '" + path + "'");
        f << text;
    }

    int run(const std::string &command, const Options &o)
    {
        const RunConfig c = build_config(o);
        if (command == "dof")
        {
            const auto report = cmd_dof(c);
            const auto m = manifest(command, c);
            if (c.format == "json")
                emit(nlohmann::json{{"manifest", sanitize(m)}, {"report", report}}.dump(2) + "\n", c.output_path);
            else
                emit(to_csv(dof_table(report), m), c.output_path);
            return 0;
        }
        if (command == "figure")
        {
            const std::filesystem::path dir = c.output_path.empty() ? "." : c.output_path;
            const auto outs = cmd_figure(o.figure, c);
            std::filesystem::create_directories(dir);
            for (const auto &out : outs)
            {
                const auto path = dir / (out.name + "." + c.format);
                emit(render(out.table, manifest("figure " + o.figure, c, out.recipe), c.format), path.string());
                std::cout << path.string() << "\n";
            }
            return 0;
        }
        Table t;
        if (command == "sweep")
            t = cmd_sweep(c);
        else if (command == "svd-compare")
            t = cmd_svd_compare(c);
        else if (command == "kernel-scan")
            t = cmd_kernel_scan(c);
        else
            t = cmd_stats(c);
        emit(render(t, manifest(command, c), c.format), c.output_path);
        return 0;
    }
}

int main(int argc, char **argv)
{
    CLI::App app{"nfdof: spatial degrees of freedom between coplanar linear arrays"};
    app.set_version_flag("--version", std::string(nfdof::version));
    app.require_subcommand(1);
    Options o;

    auto *dof_cmd = app.add_subcommand("dof", "single-link DoF report");
    auto *sweep_cmd = app.add_subcommand("sweep", "DoF over a parameter sweep");
    auto *svd_cmd = app.add_subcommand("svd-compare", "kernel DoF vs SVD effective DoF over a sweep");
    auto *kernel_cmd = app.add_subcommand("kernel-scan", "exact and far-field kernel magnitude over the effective Rx segment");
    auto *stats_cmd = app.add_subcommand("stats", "analytic and Monte Carlo CCDF of the excess DoF");
    auto *fig_cmd = app.add_subcommand("figure", "figure data recipes");
    for (auto *c : {dof_cmd, sweep_cmd, svd_cmd, kernel_cmd, stats_cmd, fig_cmd})
        add_common(c, o);
    for (auto *c : {svd_cmd, fig_cmd})
    {
        c->add_option("--threshold", o.threshold, "sum-rule fraction");
        c->add_option("--spacing", o.spacing, "SVD sampling step [wavelengths]");
    }
    kernel_cmd->add_option("--samples", o.samples, "scan points");
    kernel_cmd->add_option("--zeta-ref", o.zeta_ref, "reference zeta' from the effective center [m]");
    for (auto *c : {stats_cmd, fig_cmd})
        c->add_option("--mc-samples", o.mc_samples, "accepted Monte Carlo samples (0: analytic only)");
    fig_cmd->add_option("--x0-over-L-R", o.ratios, "fig8 distance list");
    fig_cmd->add_option("id", o.figure, "figure id")->required();

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    std::string command;
    for (auto *c : app.get_subcommands())
        command = c->get_name();
    try
    {
        return run(command, o);
    }
    catch (const nfdof::error &e)
    {
        std::cerr << "nfdof: " << e.what() << "\n";
        return e.code() == nfdof::errc::usage || e.code() == nfdof::errc::domain ? 2 : 1;
    }
    catch (const std::exception &e)
    {
        std::cerr << "nfdof: " << e.what() << "\n";
        return 1;
    }
}
