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

#include "dof.hpp"
#include "numerics.hpp"

#include <cmath>
#include <complex>
#include <vector>

namespace nfdof
{
    using complex = std::complex<double>;

    inline constexpr double kernel_rho_tilde_floor = 1e-14; // [1/m], below this the far-field form is used

    inline double sinc(double x)
    {
        if (x == 0.0)
            return 1.0;
        const double px = pi * x;
        return std::sin(px) / px;
    }

    namespace detail
    {
        inline void check_zeta(const VisibilityReport &report, double zeta, const char *what)
        {
            if (!report.visible())
                throw error(errc::domain, std::string(what) + ": link is not visible");
            if (std::abs(zeta) > 0.5 * report.l_R * (1.0 + 1e-12))
                throw error(errc::domain, std::string(what) + ": zeta outside the effective Rx segment");
        }

        inline double kernel_scale(const LinkGeometry &link)
        {
            const double s = 4.0 * pi * link.d0();
            return 1.0 / (s * s);
        }

        // int_{-l/2}^{l/2} exp(-j k (a eta + b eta^2)) d eta for b != 0.
        // erf(s) = sigma (1 - exp(-s^2) w(i sigma s)), sigma = sign(Re s); the exp(j k a^2 / 4b)
        // prefactor is folded into exp(-s^2) analytically so only endpoint phases remain.
        inline complex quadratic_phase_integral(double a, double b, double l, double k)
        {
            const complex q = std::sqrt(complex(0.0, k * b)); // Re q > 0
            const double u1 = -0.5 * l + a / (2.0 * b), u2 = 0.5 * l + a / (2.0 * b);
            const complex s1 = q * u1, s2 = q * u2;
            auto tail = [](complex s, int sigma)
            {
                const complex is(-sigma * s.imag(), sigma * s.real());
                return numerics::faddeeva_w(is);
            };
            auto endpoint_phase = [&](double eta)
            { return std::exp(complex(0.0, -k * (a * eta + b * eta * eta))); };
            const int sg1 = u1 >= 0.0 ? 1 : -1, sg2 = u2 >= 0.0 ? 1 : -1;
            const complex e1 = endpoint_phase(-0.5 * l) * tail(s1, sg1);
            const complex e2 = endpoint_phase(0.5 * l) * tail(s2, sg2);
            complex diff; // exp(j k a^2 / 4b) (erf(s2) - erf(s1))
            if (sg1 == sg2)
                diff = -double(sg1) * (e2 - e1);
            else
                diff = 2.0 * std::exp(complex(0.0, k * a * a / (4.0 * b))) - e2 - e1;
            return 0.5 * std::sqrt(pi) / q * diff;
        }
    }

    // Phase of the quadratic focusing profile, eta measured from the effective Tx center
    inline double focusing_phase(double eta, double zeta, const LinkGeometry &link, const VisibilityReport &report)
    {
        if (std::abs(eta) > 0.5 * report.l_T * (1.0 + 1e-12))
            throw error(errc::domain, "focusing_phase: eta outside the effective Tx segment");
        const auto tc = taylor_coeffs(link, zeta, report);
        return link.wavenumber() * (tc.rho * eta + tc.rho_tilde * eta * eta);
    }

    inline double kernel_farfield(double zeta, double zeta_ref, const LinkGeometry &link, const VisibilityReport &report)
    {
        detail::check_zeta(report, zeta, "kernel_farfield");
        detail::check_zeta(report, zeta_ref, "kernel_farfield");
        const double drho = taylor_coeffs(link, zeta, report).rho - taylor_coeffs(link, zeta_ref, report).rho;
        return detail::kernel_scale(link) * report.l_T * sinc(report.l_T / link.wavelength() * drho);
    }

    // Closed-form kernel with the quadratic phase term; zeta, zeta_ref measured from the effective Rx center
    inline complex kernel_exact(double zeta, double zeta_ref, const LinkGeometry &link, const VisibilityReport &report)
    {
        detail::check_zeta(report, zeta, "kernel_exact");
        detail::check_zeta(report, zeta_ref, "kernel_exact");
        const auto t = taylor_coeffs(link, zeta, report), tr = taylor_coeffs(link, zeta_ref, report);
        const double a = t.rho - tr.rho, b = t.rho_tilde - tr.rho_tilde;
        if (std::abs(b) < kernel_rho_tilde_floor)
            return detail::kernel_scale(link) * report.l_T * sinc(report.l_T / link.wavelength() * a);
        const complex v = detail::kernel_scale(link) * detail::quadratic_phase_integral(a, b, report.l_T, link.wavenumber());
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw error(errc::numeric, "kernel_exact: non-finite result");
        return v;
    }

    enum class KernelModel
    {
        exact,
        farfield
    };

    struct KernelSample
    {
        double zeta = 0.0;
        complex value;
        double magnitude = 0.0;
    };

    struct KernelScan
    {
        double reference_zeta = 0.0;
        std::vector<KernelSample> samples;
        std::vector<double> minima_locations;
    };

    // Interior local minima lying below half of both neighbouring maxima
    inline std::vector<std::size_t> kernel_minima(const std::vector<double> &v)
    {
        std::vector<std::size_t> cand;
        for (std::size_t i = 1; i + 1 < v.size(); ++i)
            if (v[i] < v[i - 1] && v[i] <= v[i + 1])
                cand.push_back(i);
        std::vector<std::size_t> out;
        for (std::size_t j = 0; j < cand.size(); ++j)
        {
            const std::size_t lo = j == 0 ? 0 : cand[j - 1];
            const std::size_t hi = j + 1 == cand.size() ? v.size() - 1 : cand[j + 1];
            double left = 0.0, right = 0.0;
            for (std::size_t i = lo; i <= cand[j]; ++i)
                left = std::max(left, v[i]);
            for (std::size_t i = cand[j]; i <= hi; ++i)
                right = std::max(right, v[i]);
            if (v[cand[j]] < 0.5 * std::min(left, right))
                out.push_back(cand[j]);
        }
        return out;
    }

    inline KernelScan kernel_scan(const LinkGeometry &link, const VisibilityReport &report, double zeta_ref, std::size_t n_samples,
                                  KernelModel model = KernelModel::exact)
    {
        if (n_samples < 64)
            throw error(errc::domain, "kernel_scan: need at least 64 samples");
        if (!report.visible())
            throw error(errc::domain, "kernel_scan: link is not visible");
        KernelScan scan;
        scan.reference_zeta = zeta_ref;
        scan.samples.resize(n_samples);
        std::vector<double> mag(n_samples);
        const double h = 0.5 * report.l_R;
        for (std::size_t i = 0; i < n_samples; ++i)
        {
            const double z = -h + report.l_R * double(i) / double(n_samples - 1);
            auto &s = scan.samples[i];
            s.zeta = z;
            s.value = model == KernelModel::exact ? kernel_exact(z, zeta_ref, link, report) : complex(kernel_farfield(z, zeta_ref, link, report), 0.0);
            s.magnitude = std::abs(s.value);
            mag[i] = s.magnitude;
        }
        for (auto i : kernel_minima(mag))
            scan.minima_locations.push_back(scan.samples[i].zeta);
        return scan;
    }

    // Number of nonzero integers strictly between m- and m+: the sinc nulls inside the effective Rx segment
    inline int predicted_minima(double m_plus, double m_minus)
    {
        const double lo = std::min(m_plus, m_minus), hi = std::max(m_plus, m_minus);
        int n = int(std::ceil(hi) - std::floor(lo)) - 1;
        if (lo < 0.0 && hi > 0.0)
            --n;
        return std::max(n, 0);
    }
}
