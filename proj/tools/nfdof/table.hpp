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

#include <string>
#include <variant>
#include <vector>

namespace nfdof::cli
{
    using Cell = std::variant<std::monostate, double, long long, std::string>;

    struct Table
    {
        std::vector<std::string> columns;
        std::vector<std::vector<Cell>> rows;
        nlohmann::json summary = nlohmann::json::object();

        void add(std::vector<Cell> row);
    };

    // 9 significant digits, "nan" / "inf" / "-inf" for non-finite values.
    std::string format_number(double v);

    std::string to_csv(const Table &t, const nlohmann::json &manifest);
    nlohmann::json to_json(const Table &t, const nlohmann::json &manifest);

    // NaN and infinities become null.
    nlohmann::json number_or_null(double v);
    nlohmann::json sanitize(const nlohmann::json &j);
}
