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

#include <nfdof/dof.hpp>
#include <nfdof/numerics.hpp>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <gtest/gtest.h>

#include <cmath>

using namespace nfdof;
using mp = boost::multiprecision::cpp_bin_float_50;

namespace
{
    const double lambda30 = wavelength_from_frequency(30e9);

    LinkGeometry link(double L_T, double tT, double L_R, double tR, double x0, double y0)
    {
        return LinkGeometry::make(L_T, tT, L_R, tR, x0, y0, lambda30);
    }

    // r(eta) between Tx point eta_c + eta and Rx point zeta_c + zeta, in 50 digits
    mp distance50(const LinkGeometry &l, const VisibilityReport &rep, double zeta, mp eta)
    {
        using std::cos, std::sin;
        const mp tT = l.tx().rotation(), tR = l.rx().rotation();
        const mp e = mp(rep.eta_c) + eta, z = mp(rep.zeta_c) + mp(zeta);
        const mp tx = -e * sin(tT), ty = e * cos(tT);
        const mp rx = mp(l.x0()) - z * sin(tR), ry = mp(l.y0()) + z * cos(tR);
        return sqrt((rx - tx) * (rx - tx) + (ry - ty) * (ry - ty));
    }

    LinkGeometry random_link(numerics::UniformStream &u)
    {
        return link(0.05 + 1.0 * u(), pi - 2 * pi * u(), 0.5 + 6.0 * u(), pi - 2 * pi * u(), 30.0 * u() - 15.0, 30.0 * u() - 15.0);
    }
}

TEST(Distance, MatchesEuclideanFormula)
{
    const auto l = link(0.2, 0.3, 5.0, 2.9, 10.0, 1.0);
    const double eta = 0.07, zeta = -1.3;
    const double tT = 0.3, tR = 2.9;
    const double dx = 10.0 - zeta * std::sin(tR) + eta * std::sin(tT);
    const double dy = 1.0 + zeta * std::cos(tR) - eta * std::cos(tT);
    EXPECT_NEAR(exact_distance(l, eta, zeta), std::hypot(dx, dy), 1e-13);
    EXPECT_THROW(exact_distance(l, 0.2, 0.0), nfdof::error);
    EXPECT_THROW(exact_distance(l, 0.0, 2.6), nfdof::error);
}

TEST(Taylor, FiniteDifferenceOracle)
{
    auto u = numerics::sample_stream(31337, 0);
    const mp h = mp(1e-4) * mp(lambda30);
    int n = 0;
    while (n < 2000)
    {
        const auto l = random_link(u);
        const auto rep = classify_visibility(l);
        if (!rep.visible())
            continue;
        const double zeta = (u() - 0.5) * rep.l_R;
        const auto tc = taylor_coeffs(l, zeta, rep);
        const mp rp = distance50(l, rep, zeta, h), r0 = distance50(l, rep, zeta, 0), rm = distance50(l, rep, zeta, -h);
        const double d1 = static_cast<double>((rp - rm) / (2 * h));
        const double d2 = static_cast<double>((rp - 2 * r0 + rm) / (h * h));
        const double r = static_cast<double>(r0);
        EXPECT_NEAR(tc.rho, d1, 1e-6 * std::max(std::abs(d1), 1e-3)) << n;
        EXPECT_NEAR(2 * tc.rho_tilde, d2, 1e-6 * std::max(std::abs(d2), 1e-3 / r)) << n;
        ++n;
    }
}

TEST(Taylor, RhoIsSineOfAngleDifference)
{
    const auto l = link(0.2, 0.4, 5.0, pi, 10.0, 2.0);
    const auto rep = classify_visibility(l);
    ASSERT_TRUE(rep.visible());
    for (double z : {-2.0, 0.0, 1.5})
    {
        const auto tc = taylor_coeffs(l, z, rep);
        EXPECT_NEAR(tc.rho, std::sin(0.4 - tc.a), 1e-14);
        EXPECT_NEAR(tc.gamma, std::tan(tc.a), 1e-12);
        // 2 rho~ r = 1 - rho^2
        EXPECT_NEAR(2 * tc.rho_tilde * exact_distance(l, 0.0, z, rep.eta_c, rep.zeta_c), 1 - tc.rho * tc.rho, 1e-13);
    }
}

TEST(Taylor, NotVisibleThrows)
{
    const auto l = link(0.2, 0.0, 5.0, pi, -10.0, 0.0);
    EXPECT_THROW(taylor_coeffs(l, 0.0, classify_visibility(l)), nfdof::error);
}

TEST(Dof, ParaxialBroadside)
{
    const auto d = dof(link(0.2, 0.0, 5.0, pi, 10.0, 0.0));
    EXPECT_EQ(d.visibility.status, Visibility::full);
    EXPECT_NEAR(d.m_real, 10.708141158, 1e-8);
    ASSERT_TRUE(d.m_int.has_value());
    EXPECT_EQ(*d.m_int, 11);
    EXPECT_NEAR(d.m_plus, -d.m_minus, 1e-12);
    EXPECT_NEAR(d.a_zero, 0.0, 1e-15);
    EXPECT_NEAR(d.rho_c, 0.0, 1e-15);
    EXPECT_NEAR(d.a_plus, -d.a_minus, 1e-15);
    EXPECT_TRUE(d.warnings.empty());
    // paraxial count L_T L_R / (lambda d0)
    EXPECT_LE(std::abs(*d.m_int - 0.2 * 5.0 / (lambda30 * 10.0)), 1.0);
}

TEST(Dof, BoundaryAnglesPointAtSegmentEnds)
{
    const auto l = link(0.2, 1.4, 5.0, pi, 10.0, 0.0);
    const auto d = dof(l);
    ASSERT_EQ(d.visibility.status, Visibility::partial_rx);
    const auto T = l.tx().point(d.visibility.eta_c);
    const auto Rp = l.rx().point(d.visibility.zeta_c + 0.5 * d.visibility.l_R);
    EXPECT_NEAR(d.a_plus, std::atan2(Rp.y - T.y, Rp.x - T.x), 1e-15);
    EXPECT_NEAR(d.m_real, 2.705108053527, 1e-9);
    EXPECT_EQ(*d.m_int, 3);
}

TEST(Dof, NoVisibilityIsZero)
{
    const auto d = dof(link(0.2, 0.0, 5.0, pi, -10.0, 0.0));
    EXPECT_EQ(d.visibility.status, Visibility::none);
    EXPECT_EQ(d.m_real, 0.0);
    ASSERT_TRUE(d.m_int.has_value());
    EXPECT_EQ(*d.m_int, 0);
}

TEST(Dof, TouchingIsUndefined)
{
    const auto d = dof(link(0.2, 0.0, 2.0, pi / 2, 0.5, 0.0));
    EXPECT_EQ(d.visibility.status, Visibility::touching);
    EXPECT_TRUE(std::isnan(d.m_real));
    EXPECT_FALSE(d.m_int.has_value());
    EXPECT_FALSE(d.warnings.empty());
}

TEST(Dof, NearLinkWarns)
{
    const auto d = dof(link(0.2, 0.0, 5.0, pi, 3.0, 0.0));
    ASSERT_FALSE(d.warnings.empty());
    EXPECT_NE(d.warnings.front().find("1.2"), std::string::npos);
}

TEST(Dof, RoundingToNearest)
{
    auto u = numerics::sample_stream(8, 0);
    for (int i = 0; i < 2000; ++i)
    {
        const auto d = dof(random_link(u));
        if (!d.visibility.visible())
            continue;
        EXPECT_GE(d.m_real, 1.0);
        EXPECT_EQ(*d.m_int, int(std::floor(d.m_real + 0.5)));
        EXPECT_NEAR(d.m_real, std::abs(d.m_plus - d.m_minus) + 1.0, 1e-12);
    }
}

TEST(Dof, ClosedFormMatchesEngineInFullBranch)
{
    auto u = numerics::sample_stream(9, 0);
    for (int i = 0; i < 1000; ++i)
    {
        const double x0 = 0.5 + 30.0 * u(), L_R = 0.5 + 8.0 * u(), L_T = 0.05 + 0.5 * u();
        const double a = branch_half_angle(x0, L_R);
        const double tT = (a - 0.5 * pi) + (pi - 2 * a) * (0.001 + 0.998 * u());
        const auto d = dof(link(L_T, tT, L_R, pi, x0, 0.0));
        if (d.visibility.status == Visibility::touching)
            continue;
        ASSERT_EQ(d.visibility.status, Visibility::full) << x0 << " " << tT;
        EXPECT_NEAR(d.m_real, dof_full_visibility_closed_form(x0, tT, L_T, L_R, lambda30), 1e-9 * d.m_real);
    }
    EXPECT_THROW(dof_full_visibility_closed_form(10.0, 1.55, 0.2, 2.0, lambda30), nfdof::error);
    EXPECT_THROW(dof_full_visibility_closed_form(-1.0, 0.0, 0.2, 2.0, lambda30), nfdof::error);
}

TEST(Dof, LargeReceiverLimit)
{
    const double m = dof_full_visibility_closed_form(10.0, 0.0, 0.2, 1e6, lambda30);
    EXPECT_GE(m, 40.0);
    EXPECT_LT(m, 1.0 + 2 * 0.2 / lambda30);
    EXPECT_NEAR(m - 1.0, 2 * 0.2 / lambda30, 1e-3);
}

TEST(Dof, MonotoneInReceiverLength)
{
    double prev = 0.0;
    for (double L_R = 0.5; L_R < 40.0; L_R *= 1.3)
    {
        const double m = dof_full_visibility_closed_form(10.0, 0.3, 0.2, L_R, lambda30);
        EXPECT_GT(m, prev);
        prev = m;
    }
}

TEST(Dof, FrequencyScaling)
{
    // m - 1 scales with 1/lambda at fixed geometry
    const auto a = dof(LinkGeometry::make(0.2, 0.3, 5.0, pi, 10.0, 1.0, lambda30));
    const auto b = dof(LinkGeometry::make(0.2, 0.3, 5.0, pi, 10.0, 1.0, 0.5 * lambda30));
    EXPECT_NEAR(b.m_real - 1.0, 2.0 * (a.m_real - 1.0), 1e-9);
}

TEST(Dof, RotationInvariance)
{
    auto u = numerics::sample_stream(10, 0);
    for (int i = 0; i < 300; ++i)
    {
        const double LT = 0.05 + u(), tT = pi - 2 * pi * u(), LR = 0.5 + 5 * u(), tR = pi - 2 * pi * u();
        const double x0 = 20 * u() - 10, y0 = 20 * u() - 10, phi = pi - 2 * pi * u();
        const auto a = dof(link(LT, tT, LR, tR, x0, y0));
        const double c = std::cos(phi), s = std::sin(phi);
        const auto b = dof(link(LT, wrap_angle(tT + phi), LR, wrap_angle(tR + phi), c * x0 - s * y0, s * x0 + c * y0));
        if (!a.visibility.visible() || !b.visibility.visible())
            continue;
        EXPECT_NEAR(a.m_real, b.m_real, 1e-8 * a.m_real);
    }
}

TEST(Dof, Helpers)
{
    EXPECT_DOUBLE_EQ(amplitude_distance_limit(0.2, 5.0), 1.2 * 5.2);
    EXPECT_NEAR(fraunhofer_distance(0.2, 5.0, lambda30), 2 * 5.2 * 5.2 / lambda30, 1e-9);
    EXPECT_THROW(fraunhofer_distance(0.2, 5.0, 0.0), nfdof::error);
    EXPECT_NEAR(branch_half_angle(10.0, 2.0), std::atan(0.1), 1e-15);
}
