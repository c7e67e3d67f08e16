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

#include "core.hpp"

#include <cmath>
#include <optional>
#include <string>

namespace nfdof
{
    struct Point2
    {
        double x = 0.0;
        double y = 0.0;

        Point2 operator+(Point2 o) const { return {x + o.x, y + o.y}; }
        Point2 operator-(Point2 o) const { return {x - o.x, y - o.y}; }
        Point2 operator-() const { return {-x, -y}; }
        Point2 operator*(double s) const { return {s * x, s * y}; }
        double dot(Point2 o) const { return x * o.x + y * o.y; }
        double norm() const { return std::hypot(x, y); }
    };

    inline double cross2(Point2 u, Point2 v) { return u.x * v.y - u.y * v.x; }

    // Wraps into (-pi, pi]
    inline double wrap_angle(double a)
    {
        if (!std::isfinite(a))
            throw error(errc::domain, "angle must be finite");
        double w = std::remainder(a, 2.0 * pi); // [-pi, pi]
        if (w <= -pi)
            w += 2.0 * pi;
        return w;
    }

    // One linear array. Points are center + s * (-sin(theta), cos(theta)), s in [-L/2, L/2];
    // theta is counter-clockwise from the y axis. The array radiates/receives toward (cos(theta), sin(theta)).
    class ArrayGeometry
    {
    public:
        ArrayGeometry(double length, double rotation, Point2 center = {}) : length_(length), rotation_(wrap_angle(rotation)), center_(center)
        {
            if (!(length > 0.0) || !std::isfinite(length))
                throw error(errc::domain, "array length must be positive");
            if (!std::isfinite(center.x) || !std::isfinite(center.y) || !std::isfinite(rotation))
                throw error(errc::domain, "array center and rotation must be finite");
        }

        double length() const { return length_; }
        double rotation() const { return rotation_; }
        Point2 center() const { return center_; }

        Point2 axis() const { return {-std::sin(rotation_), std::cos(rotation_)}; }
        Point2 normal() const { return {std::cos(rotation_), std::sin(rotation_)}; }
        Point2 point(double s) const { return center_ + axis() * s; }

    private:
        double length_, rotation_;
        Point2 center_;
    };

    struct Endpoints
    {
        Point2 plus, minus;
    };

    inline Endpoints endpoints(const ArrayGeometry &a)
    {
        return {a.point(0.5 * a.length()), a.point(-0.5 * a.length())};
    }

    // Tx centered at the origin, Rx centered at (x0, y0)
    class LinkGeometry
    {
    public:
        LinkGeometry(ArrayGeometry tx, ArrayGeometry rx, double wavelength) : tx_(tx), rx_(rx), wavelength_(wavelength)
        {
            if (tx.center().x != 0.0 || tx.center().y != 0.0)
                throw error(errc::domain, "Tx array must be centered at the origin");
            if (!(wavelength > 0.0) || !std::isfinite(wavelength))
                throw error(errc::domain, "wavelength must be positive");
        }

        static LinkGeometry make(double L_T, double theta_T, double L_R, double theta_R, double x0, double y0, double wavelength)
        {
            return LinkGeometry(ArrayGeometry(L_T, theta_T), ArrayGeometry(L_R, theta_R, {x0, y0}), wavelength);
        }

        const ArrayGeometry &tx() const { return tx_; }
        const ArrayGeometry &rx() const { return rx_; }
        double wavelength() const { return wavelength_; }
        double wavenumber() const { return 2.0 * pi / wavelength_; }
        double x0() const { return rx_.center().x; }
        double y0() const { return rx_.center().y; }
        double d0() const { return rx_.center().norm(); }

    private:
        ArrayGeometry tx_, rx_;
        double wavelength_;
    };

    inline constexpr double parallel_epsilon = 1e-12;

    struct IntersectionParams
    {
        double beta_P = std::nan("");  // position on the Tx line, 0 at T-, 1 at T+
        double delta_P = std::nan(""); // position on the Rx line, 0 at R-, 1 at R+
        bool parallel = false;
    };

    inline IntersectionParams intersection_params(const LinkGeometry &link)
    {
        const double tT = link.tx().rotation(), tR = link.rx().rotation();
        const double S = std::sin(tT - tR);
        IntersectionParams p;
        if (std::abs(S) < parallel_epsilon)
        {
            p.parallel = true;
            return p;
        }
        const double x0 = link.x0(), y0 = link.y0();
        p.delta_P = 0.5 - (x0 * std::cos(tT) + y0 * std::sin(tT)) / (link.rx().length() * S);
        p.beta_P = 0.5 - (x0 * std::cos(tR) + y0 * std::sin(tR)) / (link.tx().length() * S);
        return p;
    }

    struct IntersectionPoint
    {
        Point2 P;
        double zeta_i = 0.0; // signed coordinate of P along the Rx axis, + toward R+
        double eta_i = 0.0;  // signed coordinate of P along the Tx axis, + toward T+
    };

    inline IntersectionPoint intersection_point(const LinkGeometry &link, const IntersectionParams &params)
    {
        if (params.parallel)
            throw error(errc::parallel, "intersection_point: lines are parallel");
        IntersectionPoint ip;
        ip.zeta_i = (params.delta_P - 0.5) * link.rx().length();
        ip.eta_i = (params.beta_P - 0.5) * link.tx().length();
        if (params.delta_P == 0.5)
            ip.zeta_i = 0.0;
        if (params.beta_P == 0.5)
            ip.eta_i = 0.0;
        ip.P = link.rx().point(ip.zeta_i);
        return ip;
    }

    enum class Visibility
    {
        touching,
        none,
        full,
        partial_tx,
        partial_rx
    };

    enum class VisibleEnd
    {
        none,
        plus,
        minus
    };

    inline std::string to_string(Visibility v)
    {
        switch (v)
        {
        case Visibility::touching:
            return "touching";
        case Visibility::none:
            return "no-visibility";
        case Visibility::full:
            return "full";
        case Visibility::partial_tx:
            return "partial-tx";
        case Visibility::partial_rx:
            return "partial-rx";
        }
        return "unknown";
    }

    inline std::string to_string(VisibleEnd e)
    {
        return e == VisibleEnd::plus ? "plus" : e == VisibleEnd::minus ? "minus" : "none";
    }

    struct VisibilityReport
    {
        Visibility status = Visibility::none;
        VisibleEnd endpoint = VisibleEnd::none; // visible endpoint of the partially visible array
        double l_T = 0.0, l_R = 0.0;            // effective lengths, 0 unless visible
        double eta_c = 0.0, zeta_c = 0.0;       // effective centers (signed axis coordinates)
        std::optional<double> eta_i, zeta_i;
        std::optional<Point2> P;
        IntersectionParams params;
        double side_tx = 0.0; // t x c, > 0 when the Rx center is on the Tx radiating side
        double side_rx = 0.0; // r x (-c), > 0 when the Tx center is on the Rx receiving side

        bool visible() const { return status == Visibility::full || status == Visibility::partial_tx || status == Visibility::partial_rx; }
    };

    // Algorithm 1 visibility classification with effective lengths and centers
    inline VisibilityReport classify_visibility(const LinkGeometry &link)
    {
        const double L_T = link.tx().length(), L_R = link.rx().length();
        const auto [Tp, Tm] = endpoints(link.tx());
        const auto [Rp, Rm] = endpoints(link.rx());
        const Point2 c = link.rx().center();
        const Point2 t = Tm - Tp, r = Rm - Rp;

        VisibilityReport rep;
        rep.params = intersection_params(link);
        rep.side_tx = cross2(t, c);
        rep.side_rx = cross2(r, -c);
        const double b = rep.params.beta_P, d = rep.params.delta_P;
        const bool both_sides = rep.side_tx > 0.0 && rep.side_rx > 0.0;

        auto set_full = [&]
        {
            rep.status = Visibility::full;
            rep.l_T = L_T;
            rep.l_R = L_R;
        };

        if (rep.params.parallel)
        {
            if (both_sides)
                set_full();
            return rep;
        }

        const auto ip = intersection_point(link, rep.params);
        rep.eta_i = ip.eta_i;
        rep.zeta_i = ip.zeta_i;
        rep.P = ip.P;

        if (b >= 0.0 && b <= 1.0 && d >= 0.0 && d <= 1.0)
        {
            rep.status = Visibility::touching;
            return rep;
        }
        if ((b > 1.0 || b < 0.0) && (d > 1.0 || d < 0.0))
        {
            if (both_sides)
                set_full();
            return rep;
        }
        if (b > 0.0 && b < 1.0)
        {
            if (rep.side_tx > 0.0)
            {
                const double ei = ip.eta_i;
                if (cross2(r, Tm - c) > 0.0)
                {
                    rep.status = Visibility::partial_tx;
                    rep.endpoint = VisibleEnd::minus;
                    rep.l_T = ei + 0.5 * L_T;
                    rep.eta_c = 0.5 * (ei - 0.5 * L_T);
                }
                else if (cross2(r, Tp - c) > 0.0)
                {
                    rep.status = Visibility::partial_tx;
                    rep.endpoint = VisibleEnd::plus;
                    rep.l_T = 0.5 * L_T - ei;
                    rep.eta_c = 0.5 * (ei + 0.5 * L_T);
                }
                if (rep.status == Visibility::partial_tx)
                    rep.l_R = L_R;
            }
            return rep;
        }
        if (d > 0.0 && d < 1.0)
        {
            if (rep.side_rx > 0.0)
            {
                const double zi = ip.zeta_i;
                if (cross2(t, Rm) > 0.0)
                {
                    rep.status = Visibility::partial_rx;
                    rep.endpoint = VisibleEnd::minus;
                    rep.l_R = zi + 0.5 * L_R;
                    rep.zeta_c = 0.5 * (zi - 0.5 * L_R);
                }
                else if (cross2(t, Rp) > 0.0)
                {
                    rep.status = Visibility::partial_rx;
                    rep.endpoint = VisibleEnd::plus;
                    rep.l_R = 0.5 * L_R - zi;
                    rep.zeta_c = 0.5 * (zi + 0.5 * L_R);
                }
                if (rep.status == Visibility::partial_rx)
                    rep.l_T = L_T;
            }
            return rep;
        }
        // endpoint grazing (a parameter exactly 0 or 1, the other outside)
        rep.status = Visibility::touching;
        return rep;
    }
}
