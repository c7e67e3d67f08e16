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

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <cmath>
#include <complex>
#include <vector>

namespace nfdof
{
    // Scalar free-space Green's function exp(-j k r) / (4 pi r)
    inline std::complex<double> green(Point2 point_t, Point2 point_r, double k)
    {
        const double r = (point_r - point_t).norm();
        if (!(r > 0.0))
            throw error(errc::numeric, "green: coincident points");
        return std::polar(1.0 / (4.0 * pi * r), -k * r);
    }

    struct ChannelMatrix
    {
        Eigen::MatrixXcd entries;       // N_r x N_t
        std::vector<double> tx_points;  // eta_n, absolute Tx axis coordinates
        std::vector<double> rx_points;  // zeta_m, absolute Rx axis coordinates
        double spacing = 0.0;
    };

    namespace detail
    {
        inline std::vector<double> segment_points(double center, double length, double spacing)
        {
            const auto n = std::size_t(std::floor(length / spacing + 1e-9)) + 1;
            std::vector<double> p(n, center);
            for (std::size_t i = 0; n > 1 && i < n; ++i)
                p[i] = center - 0.5 * length + length * double(i) / double(n - 1);
            return p;
        }
    }

    // Discretised channel over the effective segments. Points are uniform, endpoints included,
    // floor(l / spacing) + 1 per array.
    inline ChannelMatrix channel_matrix(const LinkGeometry &link, const VisibilityReport &report, double spacing)
    {
        if (!report.visible())
            throw error(errc::domain, "channel_matrix: link is not visible");
        if (!(spacing > 0.0) || spacing > 0.5 * link.wavelength() * (1.0 + 1e-12))
            throw error(errc::domain, "channel_matrix: spacing must be in (0, lambda/2]");
        if (!(report.l_T > 0.0) || !(report.l_R > 0.0))
            throw error(errc::domain, "channel_matrix: empty effective segment");
        ChannelMatrix M;
        M.spacing = spacing;
        M.tx_points = detail::segment_points(report.eta_c, report.l_T, spacing);
        M.rx_points = detail::segment_points(report.zeta_c, report.l_R, spacing);
        const double k = link.wavenumber();
        M.entries.resize(Eigen::Index(M.rx_points.size()), Eigen::Index(M.tx_points.size()));
        std::vector<Point2> pt(M.tx_points.size());
        for (std::size_t n = 0; n < pt.size(); ++n)
            pt[n] = link.tx().point(M.tx_points[n]);
        for (std::size_t m = 0; m < M.rx_points.size(); ++m)
        {
            const Point2 pr = link.rx().point(M.rx_points[m]);
            for (std::size_t n = 0; n < pt.size(); ++n)
                M.entries(Eigen::Index(m), Eigen::Index(n)) = green(pt[n], pr, k);
        }
        return M;
    }

    inline ChannelMatrix channel_matrix(const LinkGeometry &link, const VisibilityReport &report)
    {
        return channel_matrix(link, report, 0.25 * link.wavelength());
    }

    struct SvdReport
    {
        std::vector<double> singular_values;     // descending
        std::vector<double> normalized_powers;   // |s_j|^2 / |s_1|^2
        std::vector<double> cumulative_fraction; // sum_{i<=j} |s_i|^2 / sum |s_i|^2
        double total_power = 0.0;                // sum rule
    };

    inline SvdReport singular_spectrum(const Eigen::MatrixXcd &A)
    {
        if (A.size() == 0)
            throw error(errc::domain, "singular_spectrum: empty matrix");
        Eigen::BDCSVD<Eigen::MatrixXcd> svd(A);
        if (svd.info() != Eigen::Success)
            throw error(errc::numeric, "singular_spectrum: decomposition did not converge");
        const auto &s = svd.singularValues();
        SvdReport rep;
        rep.singular_values.assign(s.data(), s.data() + s.size());
        for (double v : rep.singular_values)
        {
            if (!std::isfinite(v))
                throw error(errc::numeric, "singular_spectrum: non-finite singular value");
            rep.total_power += v * v;
        }
        const double p1 = rep.singular_values.front() * rep.singular_values.front();
        double acc = 0.0;
        for (double v : rep.singular_values)
        {
            acc += v * v;
            rep.normalized_powers.push_back(p1 > 0.0 ? v * v / p1 : 0.0);
            rep.cumulative_fraction.push_back(rep.total_power > 0.0 ? acc / rep.total_power : 1.0);
        }
        rep.cumulative_fraction.back() = 1.0;
        return rep;
    }

    inline SvdReport singular_spectrum(const ChannelMatrix &M) { return singular_spectrum(M.entries); }

    inline constexpr double default_sum_rule_fraction = 0.96;

    // Smallest k whose leading k modes carry at least `fraction` of the sum rule
    inline int effective_dof(const SvdReport &rep, double fraction = default_sum_rule_fraction)
    {
        if (!(fraction > 0.0 && fraction < 1.0))
            throw error(errc::domain, "effective_dof: fraction must be in (0, 1)");
        for (std::size_t j = 0; j < rep.cumulative_fraction.size(); ++j)
            if (rep.cumulative_fraction[j] >= fraction - 1e-15)
                return int(j + 1);
        return int(rep.cumulative_fraction.size());
    }
}
