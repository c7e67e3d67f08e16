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

#include <numbers>
#include <stdexcept>
#include <string>

namespace nfdof
{
    inline constexpr double pi = std::numbers::pi;
    inline constexpr double speed_of_light = 299792458.0; // [m/s]

    inline constexpr const char *version = "1.0.0";

    enum class errc
    {
        domain,   // argument outside the documented domain
        parallel, // intersection requested for parallel lines
        numeric,  // overflow, non-convergence, degenerate distance
        usage     // bad configuration or command line
    };

    class error : public std::runtime_error
    {
    public:
        error(errc code, const std::string &what) : std::runtime_error(what), code_(code) {}
        errc code() const noexcept { return code_; }

    private:
        errc code_;
    };

    inline double wavelength_from_frequency(double frequency_hz)
    {
        if (!(frequency_hz > 0.0))
            throw error(errc::domain, "frequency must be positive");
        return speed_of_light / frequency_hz;
    }
}
