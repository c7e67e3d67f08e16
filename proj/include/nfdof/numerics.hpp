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

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <vector>

namespace nfdof::numerics
{
    using complex = std::complex<double>;

    // ---------------------------------------------------------------------
    // Faddeeva function w(z) = exp(-z^2) erfc(-iz)
    // ---------------------------------------------------------------------

    namespace detail
    {
        // Weideman's rational approximation, N = 48 terms.
        struct weideman_table
        {
            static constexpr int N = 48;
            double L = 0.0;
            std::array<double, N> a{}; // a[j] multiplies Z^j

            weideman_table()
            {
                const int M = 2 * N, M2 = 2 * M;
                L = std::sqrt(N / std::sqrt(2.0));
                std::vector<double> f(M2, 0.0);
                for (int k = -M + 1; k < M; ++k)
                {
                    const double t = L * std::tan(k * pi / (2.0 * M));
                    f[k + M] = std::exp(-t * t) * (L * L + t * t);
                }
                // fftshift then real part of the DFT at bins 1..N
                std::vector<double> g(M2);
                for (int i = 0; i < M2; ++i)
                    g[i] = f[(i + M) % M2];
                for (int j = 1; j <= N; ++j)
                {
                    long double s = 0.0L;
                    for (int n = 0; n < M2; ++n)
                    {
                        const int phase = (j * n) % M2;
                        s += (long double)g[n] * std::cos(2.0L * std::numbers::pi_v<long double> * phase / M2);
                    }
                    a[j - 1] = double(s / M2);
                }
            }
        };

        inline const weideman_table &weideman()
        {
            static const weideman_table table;
            return table;
        }

        // Valid for Im z >= 0
        inline complex faddeeva_upper(complex z)
        {
            const auto &tb = weideman();
            const complex iz(-z.imag(), z.real());
            const complex den = tb.L - iz;
            const complex Z = (tb.L + iz) / den;
            complex p = 0.0;
            for (int j = weideman_table::N - 1; j >= 0; --j)
                p = p * Z + tb.a[j];
            return 2.0 * p / (den * den) + (1.0 / std::sqrt(pi)) / den;
        }

        inline bool finite(complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }
    }

    inline complex faddeeva_w(complex z)
    {
        if (!detail::finite(z))
            throw error(errc::domain, "faddeeva_w: non-finite argument");
        if (z.imag() >= 0.0)
            return detail::faddeeva_upper(z);
        // w(z) = 2 exp(-z^2) - w(-z)
        return 2.0 * std::exp(-z * z) - detail::faddeeva_upper(-z);
    }

    // ---------------------------------------------------------------------
    // Imaginary error function erfi(z) = -i erf(iz)
    // ---------------------------------------------------------------------

    inline constexpr double erfi_series_radius = 3.0;
    inline constexpr double erfi_max_modulus = 50.0;

    namespace detail
    {
        inline complex erfi_series(complex z)
        {
            using lc = std::complex<long double>;
            const lc zz(z.real(), z.imag());
            const lc z2 = zz * zz;
            lc term = zz, sum = zz; // term_n = z^(2n+1) / n!
            for (int n = 1; n < 200; ++n)
            {
                term *= z2 / (long double)n;
                const lc add = term / (long double)(2 * n + 1);
                sum += add;
                if (std::abs(add) <= 1e-21L * std::abs(sum))
                    break;
            }
            sum *= 2.0L / std::sqrt(std::numbers::pi_v<long double>);
            return complex((double)sum.real(), (double)sum.imag());
        }
    }

    // erfi(z) = s * i * (1 - exp(z^2) * tail) with s = +1 for Im z >= 0, else -1.
    // Lets callers combine exp(z^2) with other phases before multiplying.
    struct erfi_split
    {
        int sign = 1;
        complex tail;
    };

    inline erfi_split erfi_parts(complex z)
    {
        if (z.imag() >= 0.0)
            return {1, detail::faddeeva_upper(z)};
        return {-1, std::conj(detail::faddeeva_upper(std::conj(z)))};
    }

    inline complex erfi(complex z)
    {
        if (!detail::finite(z))
            throw error(errc::domain, "erfi: non-finite argument");
        if (std::abs(z) > erfi_max_modulus)
            throw error(errc::domain, "erfi: |z| > 50");
        if (std::abs(z) <= erfi_series_radius)
            return detail::erfi_series(z);
        if (z.real() * z.real() - z.imag() * z.imag() > 700.0)
            throw error(errc::numeric, "erfi: result overflows double precision");
        const auto p = erfi_parts(z);
        const complex v = complex(0.0, p.sign) * (1.0 - std::exp(z * z) * p.tail);
        if (!detail::finite(v))
            throw error(errc::numeric, "erfi: non-finite result");
        return v;
    }

    // ---------------------------------------------------------------------
    // Adaptive Gauss-Kronrod (7/15) quadrature
    // ---------------------------------------------------------------------

    struct QuadratureResult
    {
        double value = 0.0;
        double abs_error_estimate = 0.0;
        std::size_t evaluations = 0;
        bool converged = false;
    };

    namespace detail
    {
        inline constexpr std::array<double, 8> gk15_x = {
            0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
            0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
            0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
            0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
        inline constexpr std::array<double, 8> gk15_wk = {
            0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
            0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
            0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
            0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
        inline constexpr std::array<double, 4> gk15_wg = {
            0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
            0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

        struct gk_segment
        {
            double a, b, value, error;
        };

        template <typename F>
        gk_segment gk15(F &f, double a, double b)
        {
            const double c = 0.5 * (a + b), h = 0.5 * (b - a);
            const double fc = f(c);
            double resk = fc * gk15_wk[7], resg = fc * gk15_wg[3];
            double resabs = std::abs(resk);
            std::array<double, 7> f1{}, f2{};
            for (int j = 0; j < 7; ++j)
            {
                const double dx = h * gk15_x[j];
                f1[j] = f(c - dx);
                f2[j] = f(c + dx);
                resk += gk15_wk[j] * (f1[j] + f2[j]);
                resabs += gk15_wk[j] * (std::abs(f1[j]) + std::abs(f2[j]));
                if (j % 2 == 1)
                    resg += gk15_wg[j / 2] * (f1[j] + f2[j]);
            }
            const double mean = 0.5 * resk;
            double resasc = gk15_wk[7] * std::abs(fc - mean);
            for (int j = 0; j < 7; ++j)
                resasc += gk15_wk[j] * (std::abs(f1[j] - mean) + std::abs(f2[j] - mean));
            resk *= h;
            resg *= h;
            resabs *= std::abs(h);
            resasc *= std::abs(h);
            double err = std::abs(resk - resg);
            if (resasc != 0.0 && err != 0.0)
                err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
            const double eps = std::numeric_limits<double>::epsilon();
            if (resabs > std::numeric_limits<double>::min() / (50.0 * eps))
                err = std::max(50.0 * eps * resabs, err);
            return {a, b, resk, err};
        }
    }

    namespace detail
    {
        template <typename G>
        QuadratureResult integrate_adaptive(G &g, double a, double b, double rel_tol, double abs_tol, std::size_t max_segments)
        {
            QuadratureResult res;
            std::vector<gk_segment> segs;
            segs.reserve(64);
            segs.push_back(gk15(g, a, b));
            res.evaluations = 15;
            double total = segs[0].value, err = segs[0].error;
            while (true)
            {
                if (err <= std::max(rel_tol * std::abs(total), abs_tol))
                {
                    res.converged = true;
                    break;
                }
                if (segs.size() >= max_segments)
                    break;
                auto worst = std::max_element(segs.begin(), segs.end(),
                                              [](const auto &x, const auto &y)
                                              { return x.error < y.error; });
                const auto s = *worst;
                const double mid = 0.5 * (s.a + s.b);
                if (!(mid > s.a && mid < s.b))
                    break;
                *worst = gk15(g, s.a, mid);
                segs.push_back(gk15(g, mid, s.b));
                res.evaluations += 30;
                total = 0.0;
                err = 0.0;
                for (const auto &q : segs)
                {
                    total += q.value;
                    err += q.error;
                }
            }
            res.value = total;
            res.abs_error_estimate = err;
            return res;
        }
    }

    // Integrates f over [a, b]; stops when the error estimate drops below max(rel_tol * |I|, abs_tol).
    // The rule runs on x = c - h cos(t), t in [0, pi], so (x-a)^(-1/2) and (b-x)^(-1/2) endpoint
    // singularities become bounded integrands. f is never evaluated at a or b.
    template <typename F>
    QuadratureResult integrate(F &&f, double a, double b, double rel_tol = 1e-8, double abs_tol = 1e-15,
                               std::size_t max_segments = 2000)
    {
        if (!std::isfinite(a) || !std::isfinite(b) || a > b)
            throw error(errc::domain, "integrate: invalid bounds");
        if (a == b)
            return {0.0, 0.0, 1, true};
        const double h = 0.5 * (b - a);
        const double lo = std::nextafter(a, b), hi = std::nextafter(b, a);
        auto g = [&](double t)
        {
            const double s = std::sin(0.5 * t), c = std::cos(0.5 * t);
            double x = (t < 0.5 * pi) ? a + 2.0 * h * s * s : b - 2.0 * h * c * c;
            x = std::clamp(x, lo, hi);
            return f(x) * h * std::sin(t);
        };
        return detail::integrate_adaptive(g, 0.0, pi, rel_tol, abs_tol, max_segments);
    }

    // ---------------------------------------------------------------------
    // Counter-based uniform sampler (Philox4x32-10)
    // ---------------------------------------------------------------------

    namespace detail
    {
        using philox_block = std::array<std::uint32_t, 4>;

        inline philox_block philox4x32_10(philox_block ctr, std::array<std::uint32_t, 2> key)
        {
            constexpr std::uint32_t M0 = 0xD2511F53u, M1 = 0xCD9E8D57u;
            constexpr std::uint32_t W0 = 0x9E3779B9u, W1 = 0xBB67AE85u;
            for (int round = 0; round < 10; ++round)
            {
                if (round > 0)
                {
                    key[0] += W0;
                    key[1] += W1;
                }
                const std::uint64_t p0 = std::uint64_t(M0) * ctr[0];
                const std::uint64_t p1 = std::uint64_t(M1) * ctr[2];
                ctr = {std::uint32_t(p1 >> 32) ^ ctr[1] ^ key[0], std::uint32_t(p1),
                       std::uint32_t(p0 >> 32) ^ ctr[3] ^ key[1], std::uint32_t(p0)};
            }
            return ctr;
        }
    }

    // Deterministic stream of uniforms in [0, 1). Draw i of (seed, substream) depends only on
    // (seed, substream, i), so any partition of the work reproduces the same numbers.
    class UniformStream
    {
    public:
        UniformStream(std::uint64_t seed, std::uint64_t substream) : seed_(seed), substream_(substream) {}

        double operator()()
        {
            const double u = at(counter_);
            ++counter_;
            return u;
        }

        // Random access to draw i
        double at(std::uint64_t i) const
        {
            const std::uint64_t block = i >> 1;
            const auto r = detail::philox4x32_10(
                {std::uint32_t(block), std::uint32_t(block >> 32), std::uint32_t(substream_), std::uint32_t(substream_ >> 32)},
                {std::uint32_t(seed_), std::uint32_t(seed_ >> 32)});
            const std::uint64_t bits = (i & 1) ? (std::uint64_t(r[2]) << 32 | r[3]) : (std::uint64_t(r[0]) << 32 | r[1]);
            return double(bits >> 11) * 0x1.0p-53;
        }

        void skip(std::uint64_t n) { counter_ += n; }
        std::uint64_t position() const { return counter_; }
        std::uint64_t seed() const { return seed_; }
        std::uint64_t substream() const { return substream_; }

    private:
        std::uint64_t seed_, substream_, counter_ = 0;
    };

    inline UniformStream sample_stream(std::uint64_t seed, std::uint64_t substream)
    {
        return UniformStream(seed, substream);
    }
}
