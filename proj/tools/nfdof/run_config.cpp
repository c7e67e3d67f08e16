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

#include "run_config.hpp"

#include <nfdof/core.hpp>

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace nfdof::cli
{
    namespace
    {
        [[noreturn]] void fail(const std::string &msg) { throw error(errc::usage, msg); }

        double deg2rad(double v) { return v * pi / 180.0; }

        bool is_angle(const std::string &p) { return p == "theta_T" || p == "theta_R"; }

        double get_number(const nlohmann::json &j, const std::string &field)
        {
            if (!j.is_number())
                fail("config field '" + field + "': expected a number");
            const double v = j.get<double>();
            if (!std::isfinite(v))
                fail("config field '" + field + "': must be finite");
            return v;
        }

        std::uint64_t get_count(const nlohmann::json &j, const std::string &field)
        {
            if (!j.is_number_integer() && !j.is_number_unsigned())
                fail("config field '" + field + "': expected an integer");
            if (j.is_number_integer() && j.get<long long>() < 0)
                fail("config field '" + field + "': must be non-negative");
            return j.get<std::uint64_t>();
        }

        std::string get_string(const nlohmann::json &j, const std::string &field)
        {
            if (!j.is_string())
                fail("config field '" + field + "': expected a string");
            return j.get<std::string>();
        }

        std::vector<double> get_numbers(const nlohmann::json &j, const std::string &field)
        {
            if (!j.is_array())
                fail("config field '" + field + "': expected an array of numbers");
            std::vector<double> v;
            for (std::size_t i = 0; i < j.size(); ++i)
                v.push_back(get_number(j[i], field + "[" + std::to_string(i) + "]"));
            return v;
        }

        void check_keys(const nlohmann::json &j, const std::set<std::string> &allowed, const std::string &where)
        {
            if (!j.is_object())
                fail("config section '" + where + "': expected an object");
            for (auto it = j.begin(); it != j.end(); ++it)
                if (!allowed.count(it.key()))
                    fail("config: unknown field '" + (where.empty() ? "" : where + ".") + it.key() + "'");
        }
    }

    std::vector<double> SweepSpec::values() const
    {
        if (steps < 1)
            fail("sweep.steps must be at least 1");
        std::vector<double> v(static_cast<std::size_t>(steps));
        for (int i = 0; i < steps; ++i)
        {
            if (open_start)
                v[std::size_t(i)] = start + (stop - start) * double(i + 1) / double(steps);
            else
                v[std::size_t(i)] = steps == 1 ? start : start + (stop - start) * double(i) / double(steps - 1);
        }
        return v;
    }

    double RunConfig::wavelength() const { return wavelength_from_frequency(frequency_hz); }

    void RunConfig::validate() const
    {
        if (!(frequency_hz > 0.0))
            fail("frequency_hz must be positive");
        if (!(L_T_m > 0.0) || !(L_R_m > 0.0))
            fail("L_T_m and L_R_m must be positive");
        if (!(threshold > 0.0 && threshold < 1.0))
            fail("threshold must lie in (0, 1)");
        if (!(spacing_lambda > 0.0 && spacing_lambda <= 0.5))
            fail("spacing_lambda must lie in (0, 0.5]");
        if (n_samples < 64)
            fail("n_samples must be at least 64");
        if (format != "csv" && format != "json")
            fail("format must be csv or json");
        if (sweep)
        {
            static const std::set<std::string> names = {"theta_T", "theta_R", "x0", "y0", "L_T", "L_R", "frequency"};
            if (!names.count(sweep->parameter))
                fail("sweep.parameter: unknown parameter '" + sweep->parameter + "'");
            if (sweep->steps < 1)
                fail("sweep.steps must be at least 1");
        }
        if (stats)
        {
            static const std::set<std::string> names = {"partial-rplus", "partial-rminus", "full-visibility", "conditional-on-x0"};
            if (!names.count(stats->scenario))
                fail("stats.scenario: unknown scenario '" + stats->scenario + "'");
            if (!(stats->R > 0.0))
                fail("stats.R must be positive");
            if (stats->grid.empty() && stats->grid_points < 2)
                fail("stats.grid_points must be at least 2");
        }
        for (double r : x0_over_L_R)
            if (!(r > 0.0))
                fail("x0_over_L_R entries must be positive");
    }

    nlohmann::json RunConfig::to_json() const
    {
        nlohmann::json j;
        j["frequency_hz"] = frequency_hz;
        j["L_T_m"] = L_T_m;
        j["L_R_m"] = L_R_m;
        j["x0_m"] = x0_m;
        j["y0_m"] = y0_m;
        j["theta_T"] = theta_T;
        j["theta_R"] = theta_R;
        j["seed"] = seed;
        j["threshold"] = threshold;
        j["spacing_lambda"] = spacing_lambda;
        j["n_samples"] = n_samples;
        j["zeta_ref"] = zeta_ref;
        j["x0_over_L_R"] = x0_over_L_R;
        j["output"] = {{"format", format}};
        if (sweep)
            j["sweep"] = {{"parameter", sweep->parameter}, {"start", sweep->start}, {"stop", sweep->stop}, {"steps", sweep->steps}, {"open_start", sweep->open_start}};
        if (stats)
        {
            j["stats"] = {{"R", stats->R}, {"scenario", stats->scenario}, {"x0", stats->x0}, {"grid_points", stats->grid_points}, {"mc_samples", stats->mc_samples}};
            if (!stats->grid.empty())
                j["stats"]["grid"] = stats->grid;
        }
        return j;
    }

    RunConfig parse_config(const nlohmann::json &doc, bool degrees)
    {
        check_keys(doc, {"frequency_hz", "L_T_m", "L_R_m", "x0_m", "y0_m", "theta_T", "theta_R", "sweep", "stats", "output", "seed",
                         "threshold", "spacing_lambda", "n_samples", "zeta_ref", "x0_over_L_R"},
                   "");
        RunConfig c;
        auto num = [&](const char *k, double &dst)
        {
            if (doc.contains(k))
                dst = get_number(doc[k], k);
        };
        num("frequency_hz", c.frequency_hz);
        num("L_T_m", c.L_T_m);
        num("L_R_m", c.L_R_m);
        num("x0_m", c.x0_m);
        num("y0_m", c.y0_m);
        num("theta_T", c.theta_T);
        num("theta_R", c.theta_R);
        num("threshold", c.threshold);
        num("spacing_lambda", c.spacing_lambda);
        num("zeta_ref", c.zeta_ref);
        if (degrees)
        {
            if (doc.contains("theta_T"))
                c.theta_T = deg2rad(c.theta_T);
            if (doc.contains("theta_R"))
                c.theta_R = deg2rad(c.theta_R);
        }
        if (doc.contains("seed"))
            c.seed = get_count(doc["seed"], "seed");
        if (doc.contains("n_samples"))
            c.n_samples = int(get_count(doc["n_samples"], "n_samples"));
        if (doc.contains("x0_over_L_R"))
            c.x0_over_L_R = get_numbers(doc["x0_over_L_R"], "x0_over_L_R");
        if (doc.contains("output"))
        {
            const auto &o = doc["output"];
            check_keys(o, {"path", "format"}, "output");
            if (o.contains("path"))
                c.output_path = get_string(o["path"], "output.path");
            if (o.contains("format"))
                c.format = get_string(o["format"], "output.format");
        }
        if (doc.contains("sweep"))
        {
            const auto &s = doc["sweep"];
            check_keys(s, {"parameter", "start", "stop", "steps", "open_start"}, "sweep");
            SweepSpec sw;
            if (!s.contains("parameter") || !s.contains("start") || !s.contains("stop") || !s.contains("steps"))
                fail("config section 'sweep' needs parameter, start, stop and steps");
            sw.parameter = get_string(s["parameter"], "sweep.parameter");
            sw.start = get_number(s["start"], "sweep.start");
            sw.stop = get_number(s["stop"], "sweep.stop");
            sw.steps = int(get_count(s["steps"], "sweep.steps"));
            if (s.contains("open_start"))
            {
                if (!s["open_start"].is_boolean())
                    fail("config field 'sweep.open_start': expected a boolean");
                sw.open_start = s["open_start"].get<bool>();
            }
            if (degrees && is_angle(sw.parameter))
            {
                sw.start = deg2rad(sw.start);
                sw.stop = deg2rad(sw.stop);
            }
            c.sweep = sw;
        }
        if (doc.contains("stats"))
        {
            const auto &s = doc["stats"];
            check_keys(s, {"R", "scenario", "x0", "grid_points", "grid", "mc_samples"}, "stats");
            StatsSpec st;
            if (s.contains("R"))
                st.R = get_number(s["R"], "stats.R");
            if (s.contains("scenario"))
                st.scenario = get_string(s["scenario"], "stats.scenario");
            if (s.contains("x0"))
                st.x0 = get_number(s["x0"], "stats.x0");
            if (s.contains("grid_points"))
                st.grid_points = int(get_count(s["grid_points"], "stats.grid_points"));
            if (s.contains("grid"))
            {
                st.grid = get_numbers(s["grid"], "stats.grid");
                if (st.grid.empty())
                    fail("config field 'stats.grid': empty grid");
            }
            if (s.contains("mc_samples"))
                st.mc_samples = get_count(s["mc_samples"], "stats.mc_samples");
            c.stats = st;
        }
        return c;
    }

    RunConfig load_config_file(const std::string &path, bool degrees)
    {
        std::ifstream in(path);
        if (!in)
            fail("cannot open config file '" + path + "'");
        std::stringstream ss;
        ss << in.rdbuf();
        const std::string text = ss.str();
        nlohmann::json doc;
        try
        {
            doc = nlohmann::json::parse(text);
        }
        catch (const nlohmann::json::parse_error &e)
        {
            std::size_t line = 1, col = 1;
            for (std::size_t i = 0; i < std::min(e.byte == 0 ? 0 : e.byte - 1, text.size()); ++i)
            {
                if (text[i] == '\n')
                {
                    ++line;
                    col = 1;
                }
                else
                    ++col;
            }
            fail(path + ":" + std::to_string(line) + ":" + std::to_string(col) + ": JSON syntax error");
        }
        return parse_config(doc, degrees);
    }
}
