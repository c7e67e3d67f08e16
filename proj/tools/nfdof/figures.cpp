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
#include <nfdof/statistics.hpp>
#include <nfdof/svd.hpp>

#include <cmath>
#include <cstdio>

namespace nfdof::cli
{
    namespace
    {
        constexpr double deg = pi / 180.0;

        std::string tag(double v)
        {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%g", v);
            std::string s = buf;
            for (auto &c : s)
                if (c == '.')
                    c = 'p';
            return s;
        }

        RunConfig link_config(const RunConfig &base, double L_T, double theta_T, double L_R, double theta_R, double x0, double y0)
        {
            RunConfig c = base;
            c.L_T_m = L_T;
            c.theta_T = theta_T;
            c.L_R_m = L_R;
            c.theta_R = theta_R;
            c.x0_m = x0;
            c.y0_m = y0;
            c.frequency_hz = 30e9;
            c.sweep.reset();
            c.stats.reset();
            return c;
        }

        SweepSpec theta_R_sweep(int steps) { return SweepSpec{"theta_R", -pi, pi, steps, true}; }

        nlohmann::json bindings(const RunConfig &c)
        {
            return {{"L_T_m", c.L_T_m}, {"L_R_m", c.L_R_m}, {"theta_T", c.theta_T}, {"theta_R", c.theta_R},
                    {"x0_m", c.x0_m},   {"y0_m", c.y0_m},   {"frequency_hz", c.frequency_hz}};
        }

        std::vector<Output> fig3(const RunConfig &base, char sub)
        {
            RunConfig c;
            switch (sub)
            {
            case 'a':
                c = link_config(base, 0.2, 0.0, 5.0, pi, 10.0, 0.0);
                break;
            case 'b':
                c = link_config(base, 0.2, pi / 3, 5.0, pi, 10.0, 0.0);
                break;
            case 'c':
                c = link_config(base, 1.0, pi / 3, 5.0, -pi / 3, -5.0, 5.0);
                break;
            default:
                c = link_config(base, 0.2, pi / 3, 5.0, -pi / 3, -5.0, 5.0);
                break;
            }
            c.n_samples = 3001;
            c.zeta_ref = 0.0;
            auto r = bindings(c);
            r["n_samples"] = c.n_samples;
            r["zeta_ref"] = c.zeta_ref;
            return {{std::string("fig3") + sub, cmd_kernel_scan(c), r}};
        }

        RunConfig fig4_link(const RunConfig &base, double theta_R)
        {
            return link_config(base, 0.2, pi / 2, 5.0, theta_R, -5.0, 5.0);
        }

        std::vector<Output> fig4(const RunConfig &base)
        {
            auto c = fig4_link(base, 0.0);
            c.sweep = theta_R_sweep(721);
            auto r = bindings(c);
            r.erase("theta_R");
            r["sweep"] = {{"parameter", "theta_R"}, {"interval", "(-pi, pi]"}, {"steps", 721}};
            return {{"fig4", cmd_sweep(c), r}};
        }

        // Three Rx orientations; -53 deg is the caption's 53 deg in this library's rotation convention.
        std::vector<Output> fig5(const RunConfig &base)
        {
            const std::vector<double> angles = {-53.0 * deg, -30.0 * deg, -75.0 * deg};
            Table t;
            t.columns = {"theta_R", "index", "singular_value", "normalized_power", "cumulative_fraction"};
            nlohmann::json per = nlohmann::json::array();
            const double spacing_lambda = 0.5;
            for (double th : angles)
            {
                const auto c = fig4_link(base, th);
                const auto link = make_link(c);
                const auto d = dof(link);
                if (!d.visibility.visible())
                    throw error(errc::numeric, "fig5: link not visible");
                const auto rep = singular_spectrum(channel_matrix(link, d.visibility, spacing_lambda * link.wavelength()));
                const std::size_t n = std::min<std::size_t>(rep.singular_values.size(), 20);
                for (std::size_t j = 0; j < n; ++j)
                    t.add({th, static_cast<long long>(j + 1), rep.singular_values[j], rep.normalized_powers[j], rep.cumulative_fraction[j]});
                per.push_back({{"theta_R", th},
                               {"m_real", d.m_real},
                               {"m_int", *d.m_int},
                               {"effective_dof_96", effective_dof(rep, 0.96)},
                               {"effective_dof_99", effective_dof(rep, 0.99)}});
            }
            t.summary = {{"curves", per}};
            auto r = bindings(fig4_link(base, 0.0));
            r.erase("theta_R");
            r["theta_R_values"] = angles;
            r["spacing_lambda"] = spacing_lambda;
            return {{"fig5", t, r}};
        }

        struct Fig7Geometry
        {
            double x0, y0, theta_T[2];
        };

        std::vector<Output> fig7(const RunConfig &base, char sub)
        {
            static const Fig7Geometry geo[3] = {{10.0, 0.0, {0.0, pi / 6}}, {0.0, 10.0, {pi / 2, pi / 3}}, {5.0, 5.0, {pi / 4, pi / 12}}};
            const auto &g = geo[sub - 'a'];
            std::vector<Output> out;
            for (int k = 0; k < 2; ++k)
            {
                auto c = link_config(base, 0.2, g.theta_T[k], 5.0, 0.0, g.x0, g.y0);
                c.sweep = theta_R_sweep(181);
                c.threshold = base.threshold;
                c.spacing_lambda = base.spacing_lambda;
                auto r = bindings(c);
                r.erase("theta_R");
                r["sweep"] = {{"parameter", "theta_R"}, {"interval", "(-pi, pi]"}, {"steps", 181}};
                r["threshold"] = c.threshold;
                r["spacing_lambda"] = c.spacing_lambda;
                out.push_back({std::string("fig7") + sub + "_" + std::to_string(k + 1), cmd_svd_compare(c), r});
            }
            return out;
        }

        std::vector<Output> fig8(const RunConfig &base)
        {
            std::vector<Output> out;
            for (double ratio : base.x0_over_L_R)
            {
                auto c = link_config(base, 0.2, 0.0, 2.0, 0.0, ratio * 2.0, 0.0);
                c.sweep = theta_R_sweep(721);
                auto r = bindings(c);
                r.erase("theta_R");
                r["x0_over_L_R"] = ratio;
                r["sweep"] = {{"parameter", "theta_R"}, {"interval", "(-pi, pi]"}, {"steps", 721}};
                out.push_back({"fig8_x0_over_L_R_" + tag(ratio), cmd_sweep(c), r});
            }
            return out;
        }

        std::uint64_t mc_samples(const RunConfig &base) { return base.stats ? base.stats->mc_samples : 1000000; }

        Output stats_curve(const RunConfig &base, const std::string &name, const std::string &scenario, double R, double L_R, double x0)
        {
            RunConfig c = link_config(base, 0.2, 0.0, L_R, pi, 0.0, 0.0);
            StatsSpec st;
            st.R = R;
            st.scenario = scenario;
            st.x0 = x0;
            st.grid_points = base.stats ? base.stats->grid_points : 512;
            st.mc_samples = mc_samples(base);
            c.stats = st;
            nlohmann::json r = {{"scenario", scenario}, {"R", R}, {"L_T_m", 0.2}, {"L_R_m", L_R}, {"frequency_hz", 30e9},
                                {"grid_points", st.grid_points}, {"mc_samples", st.mc_samples}};
            if (scenario == "conditional-on-x0")
                r["x0_m"] = x0;
            return {name, cmd_stats(c), r};
        }

        std::vector<Output> fig9(const RunConfig &base, char sub)
        {
            std::vector<Output> out;
            for (double R : {5.0, 10.0, 20.0, 200.0})
            {
                if (sub == 'a')
                {
                    out.push_back(stats_curve(base, "fig9a_partial_rplus_R" + tag(R), "partial-rplus", R, 2.0, 10.0));
                    out.push_back(stats_curve(base, "fig9a_partial_rminus_R" + tag(R), "partial-rminus", R, 2.0, 10.0));
                }
                else
                    out.push_back(stats_curve(base, "fig9b_full_R" + tag(R), "full-visibility", R, 2.0, 10.0));
            }
            return out;
        }

        std::vector<Output> fig10(const RunConfig &base)
        {
            std::vector<Output> out;
            for (double x0 : {5.0, 10.0})
                for (double L_R : {2.0, 5.0})
                    out.push_back(stats_curve(base, "fig10_x0_" + tag(x0) + "_L_R_" + tag(L_R), "conditional-on-x0", 20.0, L_R, x0));
            return out;
        }

        std::vector<Output> fig11(const RunConfig &base)
        {
            const std::size_t draws = 10000;
            Table t;
            t.columns = {"x0", "L_R", "pov", "pov_mc", "mc_draws"};
            std::uint64_t cell = 0;
            for (int i = 1; i <= 20; ++i)
                for (int j = 1; j <= 20; ++j, ++cell)
                {
                    const double x0 = double(i), L_R = 0.5 * double(j);
                    const double v = stats::pov(x0, L_R);
                    const double mc = stats::pov_monte_carlo(x0, L_R, 0.2, wavelength_from_frequency(30e9), draws, base.seed + cell);
                    t.add({x0, L_R, v, mc, static_cast<long long>(draws)});
                }
            nlohmann::json r = {{"x0_m", "1..20 step 1"}, {"L_R_m", "0.5..10 step 0.5"}, {"L_T_m", 0.2}, {"frequency_hz", 30e9},
                                {"mc_draws_per_cell", draws}, {"cell_seed", "seed + cell index"}};
            return {{"fig11", t, r}};
        }
    }

    const std::vector<std::string> &figure_ids()
    {
        static const std::vector<std::string> ids = {"fig3a", "fig3b", "fig3c", "fig3d", "fig4",  "fig5",  "fig7a", "fig7b",
                                                     "fig7c", "fig8",  "fig9a", "fig9b", "fig10", "fig11"};
        return ids;
    }

    std::vector<Output> cmd_figure(const std::string &id, const RunConfig &base)
    {
        base.validate();
        if (id.size() == 5 && id.rfind("fig3", 0) == 0 && id[4] >= 'a' && id[4] <= 'd')
            return fig3(base, id[4]);
        if (id == "fig4")
            return fig4(base);
        if (id == "fig5")
            return fig5(base);
        if (id.size() == 5 && id.rfind("fig7", 0) == 0 && id[4] >= 'a' && id[4] <= 'c')
            return fig7(base, id[4]);
        if (id == "fig8")
            return fig8(base);
        if (id == "fig9a" || id == "fig9b")
            return fig9(base, id[4]);
        if (id == "fig10")
            return fig10(base);
        if (id == "fig11")
            return fig11(base);
        std::string known;
        for (const auto &k : figure_ids())
            known += (known.empty() ? "" : ", ") + k;
        throw error(errc::usage, "unknown figure id '" + id + "' (known: " + known + ")");
    }
}
