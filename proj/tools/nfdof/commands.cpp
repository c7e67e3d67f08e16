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
#include <nfdof/dof.hpp>
#include <nfdof/kernel.hpp>
#include <nfdof/statistics.hpp>
#include <nfdof/svd.hpp>

#include <algorithm>
#include <cmath>

namespace nfdof::cli
{
    LinkGeometry make_link(const RunConfig &cfg)
    {
        cfg.validate();
        return LinkGeometry::make(cfg.L_T_m, cfg.theta_T, cfg.L_R_m, cfg.theta_R, cfg.x0_m, cfg.y0_m, cfg.wavelength());
    }

    RunConfig with_parameter(const RunConfig &cfg, const std::string &parameter, double value)
    {
        RunConfig c = cfg;
        if (parameter == "theta_T")
            c.theta_T = value;
        else if (parameter == "theta_R")
            c.theta_R = value;
        else if (parameter == "x0")
            c.x0_m = value;
        else if (parameter == "y0")
            c.y0_m = value;
        else if (parameter == "L_T")
            c.L_T_m = value;
        else if (parameter == "L_R")
            c.L_R_m = value;
        else if (parameter == "frequency")
            c.frequency_hz = value;
        else
            throw error(errc::usage, "unknown sweep parameter '" + parameter + "'");
        return c;
    }

    nlohmann::json manifest(const std::string &command, const RunConfig &cfg, const nlohmann::json &recipe)
    {
        nlohmann::json m;
        m["tool"] = "nfdof";
        m["version"] = version;
        m["command"] = command;
        m["config"] = cfg.to_json();
        m["seed"] = cfg.seed;
        m["angles"] = "radians";
        if (!recipe.is_null())
            m["recipe"] = recipe;
        return m;
    }

    namespace
    {
        const RunConfig &require_sweep(const RunConfig &cfg, const char *cmd)
        {
            if (!cfg.sweep)
                throw error(errc::usage, std::string(cmd) + ": config has no 'sweep' section");
            cfg.validate();
            return cfg;
        }

        nlohmann::json opt_number(const std::optional<double> &v)
        {
            return v ? number_or_null(*v) : nlohmann::json(nullptr);
        }

        Cell m_int_cell(const DofResult &d)
        {
            return d.m_int ? Cell(static_cast<long long>(*d.m_int)) : Cell(std::monostate{});
        }

        stats::Scenario parse_scenario(const std::string &s)
        {
            if (s == "partial-rplus")
                return stats::Scenario::partial_rplus;
            if (s == "partial-rminus")
                return stats::Scenario::partial_rminus;
            if (s == "full-visibility")
                return stats::Scenario::full_visibility;
            if (s == "conditional-on-x0")
                return stats::Scenario::conditional_on_x0;
            throw error(errc::usage, "unknown scenario '" + s + "'");
        }
    }

    nlohmann::json cmd_dof(const RunConfig &cfg)
    {
        const auto link = make_link(cfg);
        const auto d = dof(link);
        const auto &v = d.visibility;
        nlohmann::json j;
        j["status"] = to_string(v.status);
        j["visible_end"] = to_string(v.endpoint);
        j["wavelength"] = link.wavelength();
        j["d0"] = link.d0();
        j["l_T"] = v.l_T;
        j["l_R"] = v.l_R;
        j["eta_c"] = v.eta_c;
        j["zeta_c"] = v.zeta_c;
        j["eta_i"] = opt_number(v.eta_i);
        j["zeta_i"] = opt_number(v.zeta_i);
        j["beta_P"] = number_or_null(v.params.beta_P);
        j["delta_P"] = number_or_null(v.params.delta_P);
        j["parallel"] = v.params.parallel;
        const bool vis = v.visible();
        j["a_plus"] = vis ? number_or_null(d.a_plus) : nlohmann::json(nullptr);
        j["a_minus"] = vis ? number_or_null(d.a_minus) : nlohmann::json(nullptr);
        j["a_zero"] = vis ? number_or_null(d.a_zero) : nlohmann::json(nullptr);
        j["rho_c"] = vis ? number_or_null(d.rho_c) : nlohmann::json(nullptr);
        j["m_plus"] = vis ? number_or_null(d.m_plus) : nlohmann::json(nullptr);
        j["m_minus"] = vis ? number_or_null(d.m_minus) : nlohmann::json(nullptr);
        j["m_real"] = number_or_null(d.m_real);
        j["m_int"] = d.m_int ? nlohmann::json(*d.m_int) : nlohmann::json(nullptr);
        j["warnings"] = d.warnings;
        return j;
    }

    Table dof_table(const nlohmann::json &report)
    {
        Table t;
        for (auto it = report.begin(); it != report.end(); ++it)
            if (it.key() != "warnings")
                t.columns.push_back(it.key());
        t.columns.push_back("warnings");
        std::vector<Cell> row;
        for (const auto &c : t.columns)
        {
            const auto &v = report[c];
            if (c == "warnings")
            {
                std::string w;
                for (const auto &s : v)
                    w += (w.empty() ? "" : "; ") + s.get<std::string>();
                row.emplace_back(w);
            }
            else if (v.is_null())
                row.emplace_back(std::monostate{});
            else if (v.is_string())
                row.emplace_back(v.get<std::string>());
            else if (v.is_boolean())
                row.emplace_back(static_cast<long long>(v.get<bool>()));
            else if (v.is_number_integer())
                row.emplace_back(v.get<long long>());
            else
                row.emplace_back(v.get<double>());
        }
        t.add(std::move(row));
        return t;
    }

    Table cmd_sweep(const RunConfig &cfg)
    {
        require_sweep(cfg, "sweep");
        const auto &sw = *cfg.sweep;
        Table t;
        t.columns = {sw.parameter, "m_real", "m_int", "status"};
        for (double x : sw.values())
        {
            const auto d = dof(make_link(with_parameter(cfg, sw.parameter, x)));
            t.add({x, d.m_real, m_int_cell(d), to_string(d.visibility.status)});
        }
        return t;
    }

    Table cmd_svd_compare(const RunConfig &cfg)
    {
        require_sweep(cfg, "svd-compare");
        const auto &sw = *cfg.sweep;
        Table t;
        t.columns = {sw.parameter, "status", "m_real", "m_int", "effective_dof", "abs_difference"};
        long long worst = 0;
        std::size_t compared = 0;
        for (double x : sw.values())
        {
            const auto c = with_parameter(cfg, sw.parameter, x);
            const auto link = make_link(c);
            const auto d = dof(link);
            const auto status = to_string(d.visibility.status);
            if (d.visibility.status == Visibility::touching)
            {
                t.add({x, status, d.m_real, std::monostate{}, std::monostate{}, std::monostate{}});
                continue;
            }
            long long eff = 0;
            if (d.visibility.visible())
            {
                const auto rep = singular_spectrum(channel_matrix(link, d.visibility, c.spacing_lambda * c.wavelength()));
                eff = effective_dof(rep, c.threshold);
            }
            const long long diff = std::llabs(static_cast<long long>(*d.m_int) - eff);
            worst = std::max(worst, diff);
            ++compared;
            t.add({x, status, d.m_real, static_cast<long long>(*d.m_int), eff, diff});
        }
        t.add({std::string("max"), std::monostate{}, std::monostate{}, std::monostate{}, std::monostate{}, worst});
        t.summary = {{"max_abs_difference", worst}, {"compared_points", compared}, {"threshold", cfg.threshold},
                     {"spacing_lambda", cfg.spacing_lambda}};
        return t;
    }

    Table cmd_kernel_scan(const RunConfig &cfg)
    {
        const auto link = make_link(cfg);
        const auto d = dof(link);
        if (!d.visibility.visible())
            throw error(errc::domain, "kernel-scan: link status is " + to_string(d.visibility.status) + ", no kernel to scan");
        const auto n = std::size_t(cfg.n_samples);
        const auto ex = kernel_scan(link, d.visibility, cfg.zeta_ref, n, KernelModel::exact);
        const auto ff = kernel_scan(link, d.visibility, cfg.zeta_ref, n, KernelModel::farfield);
        double peak = 0.0;
        for (const auto &s : ex.samples)
            peak = std::max(peak, s.magnitude);
        Table t;
        t.columns = {"zeta", "abs_exact", "abs_farfield", "re_exact", "im_exact"};
        for (std::size_t i = 0; i < n; ++i)
        {
            const auto &e = ex.samples[i];
            t.add({e.zeta, e.magnitude, ff.samples[i].magnitude, e.value.real(), e.value.imag()});
        }
        t.summary = {{"status", to_string(d.visibility.status)},
                     {"zeta_c", d.visibility.zeta_c},
                     {"l_R", d.visibility.l_R},
                     {"m_plus", d.m_plus},
                     {"m_minus", d.m_minus},
                     {"predicted_minima", predicted_minima(d.m_plus, d.m_minus)},
                     {"minima_exact", ex.minima_locations.size()},
                     {"minima_farfield", ff.minima_locations.size()},
                     {"minima_exact_zeta", ex.minima_locations},
                     {"minima_farfield_zeta", ff.minima_locations},
                     {"peak_abs_exact", peak}};
        return t;
    }

    Table cmd_stats(const RunConfig &cfg)
    {
        cfg.validate();
        if (!cfg.stats)
            throw error(errc::usage, "stats: config has no 'stats' section");
        const auto &st = *cfg.stats;
        stats::ScenarioConfig sc;
        sc.R = st.R;
        sc.L_T = cfg.L_T_m;
        sc.L_R = cfg.L_R_m;
        sc.frequency = cfg.frequency_hz;
        sc.scenario = parse_scenario(st.scenario);
        sc.x0 = st.x0;
        sc.validate();
        const auto grid = st.grid.empty() ? stats::default_grid(sc, std::size_t(st.grid_points)) : st.grid;
        auto curve = stats::ccdf(sc, grid);
        stats::MonteCarloResult mc;
        const bool with_mc = st.mc_samples > 0;
        if (with_mc)
        {
            mc = stats::monte_carlo(sc, std::size_t(st.mc_samples), cfg.seed, grid);
            stats::attach_monte_carlo(curve, mc);
        }
        Table t;
        t.columns = {"mu_th", "pdf", "ccdf_analytic", "ccdf_mc", "mc_samples", "seed"};
        for (std::size_t i = 0; i < grid.size(); ++i)
            t.add({grid[i], curve.pdf[i], curve.ccdf[i], with_mc ? Cell(curve.mc_ccdf[i]) : Cell(std::monostate{}),
                   static_cast<long long>(curve.mc_samples), static_cast<long long>(cfg.seed)});
        t.summary = {{"scenario", stats::to_string(sc.scenario)}, {"normalization", curve.normalization}, {"support_max", stats::support_max(sc)},
                     {"warnings", sc.warnings()}};
        if (with_mc)
        {
            t.summary["sup_gap"] = stats::sup_gap(curve.ccdf, curve.mc_ccdf);
            t.summary["mc_draws"] = mc.draws;
            t.summary["acceptance_rate"] = mc.acceptance_rate;
            t.summary["engine_mismatch"] = mc.engine_mismatch;
            t.summary["engine_mismatch_x0_range"] = {mc.min_mismatch_x0, mc.max_mismatch_x0};
        }
        return t;
    }

    std::string render(const Table &t, const nlohmann::json &manifest, const std::string &format)
    {
        if (format == "json")
            return to_json(t, manifest).dump(2) + "\n";
        if (format == "csv")
            return to_csv(t, manifest);
        throw error(errc::usage, "unknown format '" + format + "'");
    }
}
