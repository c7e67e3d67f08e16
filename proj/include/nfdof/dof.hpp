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

#include "geometry.hpp"

#include <cmath>
#include <optional>
#include <string>
#include <vector>

namespace nfdof
{
    // Distance between Tx point eta + eta_c and Rx point zeta + zeta_c
    inline double exact_distance(const LinkGeometry &link, double eta, double zeta, double eta_c = 0.0, double zeta_c = 0.0)
    {
        const double hT = 0.5 * link.tx().length() * (1.0 + 1e-12), hR = 0.5 * link.rx().length() * (1.0 + 1e-12);
        if (std::abs(eta + eta_c) > hT || std::abs(zeta + zeta_c) > hR)
            throw error(errc::domain, "exact_distance: coordinate outside the array");
        return (link.rx().point(zeta + zeta_c) - link.tx().point(eta + eta_c)).norm();
    }

    struct TaylorCoefficients
    {
        double rho = 0.0;       // dr/deta at eta = 0
        double rho_tilde = 0.0; // (1/2) d2r/deta2 at eta = 0, [1/m]
        double gamma = 0.0;     // tan(a)
        double a = 0.0;         // angle of the segment Tx effective center -> Rx point, from the x axis
    };

    // zeta is measured from the effective Rx center
    inline TaylorCoefficients taylor_coeffs(const LinkGeometry &link, double zeta, const VisibilityReport &report)
    {
        if (!report.visible())
            throw error(errc::domain, "taylor_coeffs: link is not visible");
        const Point2 d = link.rx().point(report.zeta_c + zeta) - link.tx().point(report.eta_c);
        const double r = d.norm();
        if (!(r > 0.0))
            throw error(errc::numeric, "taylor_coeffs: zero distance");
        const double tT = link.tx().rotation();
        const double dn = d.dot(link.tx().normal());
        TaylorCoefficients tc;
        tc.a = std::atan2(d.y, d.x);
        tc.gamma = d.y / d.x;
        tc.rho = (d.x * std::sin(tT) - d.y * std::cos(tT)) / r;
        tc.rho_tilde = 0.5 * dn * dn / (r * r * r);
        return tc;
    }

    struct BoundaryAngles
    {
        double a_plus = 0.0, a_minus = 0.0, a_zero = 0.0, rho_c = 0.0;
    };

    inline BoundaryAngles boundary_angles(const LinkGeometry &link, const VisibilityReport &report)
    {
        if (!report.visible())
            throw error(errc::domain, "boundary_angles: link is not visible");
        const Point2 T = link.tx().point(report.eta_c);
        auto angle = [&](double zeta)
        {
            const Point2 d = link.rx().point(zeta) - T;
            return std::atan2(d.y, d.x);
        };
        BoundaryAngles b;
        b.a_plus = angle(report.zeta_c + 0.5 * report.l_R);
        b.a_minus = angle(report.zeta_c - 0.5 * report.l_R);
        b.a_zero = angle(report.zeta_c);
        b.rho_c = std::sin(link.tx().rotation() - b.a_zero);
        return b;
    }

    struct ModeIndices
    {
        double m_plus = 0.0, m_minus = 0.0;
    };

    inline ModeIndices mode_indices(const LinkGeometry &link, const VisibilityReport &report)
    {
        const auto b = boundary_angles(link, report);
        const double tT = link.tx().rotation(), C = report.l_T / link.wavelength();
        return {C * (std::sin(tT - b.a_plus) - b.rho_c), C * (std::sin(tT - b.a_minus) - b.rho_c)};
    }

    struct DofResult
    {
        double m_real = 0.0;      // |m+ - m-| + 1; 0 without visibility; NaN when touching
        std::optional<int> m_int; // round-to-nearest of m_real; empty when touching
        double m_plus = 0.0, m_minus = 0.0;
        double a_plus = 0.0, a_minus = 0.0, a_zero = 0.0, rho_c = 0.0;
        VisibilityReport visibility;
        std::vector<std::string> warnings;
    };

    inline double amplitude_distance_limit(double L_T, double L_R) { return 1.2 * (L_T + L_R); }

    inline DofResult dof(const LinkGeometry &link)
    {
        DofResult res;
        res.visibility = classify_visibility(link);
        if (link.d0() < amplitude_distance_limit(link.tx().length(), link.rx().length()))
            res.warnings.push_back("d0 < 1.2(L_T+L_R): amplitude approximation unreliable");
        switch (res.visibility.status)
        {
        case Visibility::touching:
            res.m_real = std::nan("");
            res.warnings.push_back("arrays touch: DoF undefined");
            return res;
        case Visibility::none:
            res.m_int = 0;
            return res;
        default:
            break;
        }
        const auto b = boundary_angles(link, res.visibility);
        res.a_plus = b.a_plus;
        res.a_minus = b.a_minus;
        res.a_zero = b.a_zero;
        res.rho_c = b.rho_c;
        const auto m = mode_indices(link, res.visibility);
        res.m_plus = m.m_plus;
        res.m_minus = m.m_minus;
        res.m_real = std::abs(m.m_plus - m.m_minus) + 1.0;
        res.m_int = int(std::floor(res.m_real + 0.5));
        return res;
    }

    inline double branch_half_angle(double x0, double L_R) { return std::atan(L_R / (2.0 * x0)); }

    // y0 = 0, theta_R = pi, theta_T in the full-visibility branch [a - pi/2, pi/2 - a]
    inline double dof_full_visibility_closed_form(double x0, double theta_T, double L_T, double L_R, double lambda)
    {
        if (!(x0 > 0.0) || !(L_T > 0.0) || !(L_R > 0.0) || !(lambda > 0.0))
            throw error(errc::domain, "dof_full_visibility_closed_form: non-positive input");
        const double a = branch_half_angle(x0, L_R);
        if (std::abs(theta_T) > 0.5 * pi - a + 1e-12)
            throw error(errc::domain, "dof_full_visibility_closed_form: theta_T outside the full-visibility branch");
        return 1.0 + (2.0 * L_T / lambda) * std::cos(theta_T) * std::sin(a);
    }

    inline double fraunhofer_distance(double L_T, double L_R, double lambda)
    {
        if (L_T < 0.0 || L_R < 0.0 || !(lambda > 0.0))
            throw error(errc::domain, "fraunhofer_distance: invalid input");
        return 2.0 * (L_T + L_R) * (L_T + L_R) / lambda;
    }
}
