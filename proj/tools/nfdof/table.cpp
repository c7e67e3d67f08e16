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

#include "table.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace nfdof::cli
{
    void Table::add(std::vector<Cell> row)
    {
        if (row.size() != columns.size())
            throw std::logic_error("table row width mismatch");
        rows.push_back(std::move(row));
    }

    std::string format_number(double v)
    {
        if (std::isnan(v))
            return "nan";
        if (std::isinf(v))
            return v > 0 ? "inf" : "-inf";
        if (v == 0.0)
            return "0";
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.9g", v);
        return buf;
    }

    namespace
    {
        std::string csv_escape(const std::string &s)
        {
            if (s.find_first_of(",\"\n") == std::string::npos)
                return s;
            std::string out = "\"";
            for (char c : s)
            {
                if (c == '"')
                    out += '"';
                out += c;
            }
            return out + "\"";
        }

        std::string cell_text(const Cell &c)
        {
            switch (c.index())
            {
            case 1:
                return format_number(std::get<double>(c));
            case 2:
                return std::to_string(std::get<long long>(c));
            case 3:
                return csv_escape(std::get<std::string>(c));
            default:
                return "";
            }
        }

        nlohmann::json cell_json(const Cell &c)
        {
            switch (c.index())
            {
            case 1:
                return number_or_null(std::get<double>(c));
            case 2:
                return std::get<long long>(c);
            case 3:
                return std::get<std::string>(c);
            default:
                return nullptr;
            }
        }
    }

    nlohmann::json number_or_null(double v)
    {
        if (!std::isfinite(v))
            return nullptr;
        return v;
    }

    nlohmann::json sanitize(const nlohmann::json &j)
    {
        if (j.is_number_float())
            return number_or_null(j.get<double>());
        if (j.is_array() || j.is_object())
        {
            nlohmann::json out = j;
            for (auto it = out.begin(); it != out.end(); ++it)
                *it = sanitize(*it);
            return out;
        }
        return j;
    }

    std::string to_csv(const Table &t, const nlohmann::json &manifest)
    {
        std::string out = "# manifest: " + sanitize(manifest).dump() + "\n";
        if (!t.summary.empty())
            out += "# summary: " + sanitize(t.summary).dump() + "\n";
        for (std::size_t i = 0; i < t.columns.size(); ++i)
            out += (i ? "," : "") + csv_escape(t.columns[i]);
        out += "\n";
        for (const auto &row : t.rows)
        {
            for (std::size_t i = 0; i < row.size(); ++i)
                out += (i ? "," : "") + cell_text(row[i]);
            out += "\n";
        }
        return out;
    }

    nlohmann::json to_json(const Table &t, const nlohmann::json &manifest)
    {
        nlohmann::json j;
        j["manifest"] = sanitize(manifest);
        j["columns"] = t.columns;
        nlohmann::json rows = nlohmann::json::array();
        for (const auto &row : t.rows)
        {
            nlohmann::json r = nlohmann::json::object();
            for (std::size_t i = 0; i < row.size(); ++i)
                r[t.columns[i]] = cell_json(row[i]);
            rows.push_back(std::move(r));
        }
        j["rows"] = std::move(rows);
        if (!t.summary.empty())
            j["summary"] = sanitize(t.summary);
        return j;
    }
}
