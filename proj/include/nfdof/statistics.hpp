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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <thread>
#include <vector>

// Statistics of the excess DoF mu = m - 1 for an Rx center uniform in a disk of radius R
// (x0 > 0, y0 = 0, theta_R = pi) and a Tx rotation uniform on each visibility branch.

namespace nfdof::stats
{
    enum class Scenario
    {
        partial_rplus,
        partial_rminus,
        full_visibility,
        conditional_on_x0
    };

    inline std::string to_string(Scenario s)
    {
        switch (s)
        {
        case Scenario::partial_rplus:
            return "partial-rplus";
        case Scenario::partial_rminus:
            return "partial-rminus";
        case Scenario::full_visibility:
            return "full-visibility";
        case Scenario::conditional_on_x0:
            return "conditional-on-x0";
        }
        return "unknown";
    }

    struct ScenarioConfig
    {
        double R = 20.0;        // disk radius [m]
        double L_T = 0.2;       // [m]
        double L_R = 2.0;       // [m]
        double frequency = 30e9; // [Hz]
        Scenario scenario = Scenario::full_visibility;
        double x0 = 10.0; // used by conditional_on_x0

        double wavelength() const { return wavelength_from_frequency(frequency); }
        double C() const { return L_T / wavelength(); }

        void validate() const
        {
            if (!(R > 0.0) || !(L_T > 0.0) || !(L_R > 0.0) || !(frequency > 0.0))
                throw error(errc::domain, "scenario: R, L_T, L_R and frequency must be positive");
            if (scenario == Scenario::conditional_on_x0 && !(x0 > 0.0 && x0 <= R))
                throw error(errc::domain, "scenario: x0 must lie in (0, R]");
        }

        std::vector<std::string> warnings() const
        {
            std::vector<std::string> w;
            if (R <= amplitude_distance_limit(L_T, L_R))
                w.push_back("R <= 1.2(L_T+L_R): many draws violate the amplitude approximation");
            return w;
        }
    };

    // Half opening angle of the Rx seen from the Tx center
    inline double half_angle(double x0, double L_R) { return std::atan(L_R / (2.0 * x0)); }

    // Branch of theta_T for y0 = 0, theta_R = pi, x0 > 0:
    // 1 = R+ visible, 2 = full visibility, 3 = R- visible, 0 = no visibility
    inline int branch_of(double theta_T, double x0, double L_R)
    {
        const double a = half_angle(x0, L_R), t = wrap_angle(theta_T);
        if (t > -0.5 * pi - a && t < a - 0.5 * pi)
            return 1;
        if (t >= a - 0.5 * pi && t <= 0.5 * pi - a)
            return 2;
        if (t > 0.5 * pi - a && t < 0.5 * pi + a)
            return 3;
        return 0;
    }

    // Closed-form excess DoF on each branch
    inline double branch_mu(int branch, double theta_T, double x0, double L_R, double C)
    {
        const double a = half_angle(x0, L_R);
        switch (branch)
        {
        case 1:
            return C * (1.0 + std::sin(theta_T + a));
        case 2:
            return 2.0 * C * std::cos(theta_T) * std::sin(a);
        case 3:
            return C * (1.0 - std::sin(theta_T - a));
        default:
            return 0.0;
        }
    }

    inline double pdf_x0(double x0, double R)
    {
        if (!(R > 0.0) || x0 < 0.0 || x0 > R)
            throw error(errc::domain, "pdf_x0: x0 outside [0, R]");
        return 4.0 * std::sqrt(R * R - x0 * x0) / (pi * R * R);
    }

    inline double pov(double x0, double L_R)
    {
        if (!(x0 > 0.0) || !(L_R > 0.0))
            throw error(errc::domain, "pov: x0 and L_R must be positive");
        return 0.5 + half_angle(x0, L_R) / pi;
    }

    inline constexpr double inner_rel_tol = 1e-8;
    inline constexpr double outer_rel_tol = 1e-6;

    namespace detail
    {
        inline double checked(const numerics::QuadratureResult &q, const char *what)
        {
            if (!q.converged && q.abs_error_estimate > 1e-6 * std::max(1.0, std::abs(q.value)))
                throw error(errc::numeric, std::string(what) + ": quadrature did not converge");
            return q.value;
        }
    }

    inline double x_max(double rho, double L_R)
    {
        return L_R / (2.0 * std::tan(0.5 * (std::asin(rho) + 0.5 * pi)));
    }

    // Density of rho- = sin(theta_T - a-) with R+ visible
    inline double pdf_rho_minus(double rho, const ScenarioConfig &cfg)
    {
        if (!(rho > -1.0 && rho < 1.0))
            return 0.0;
        const double up = std::min(x_max(rho, cfg.L_R), cfg.R);
        if (!(up > 0.0))
            return 0.0;
        auto g = [&](double x)
        { return pdf_x0(x, cfg.R) / (2.0 * half_angle(x, cfg.L_R)); };
        const double I = detail::checked(numerics::integrate(g, 0.0, up, inner_rel_tol), "pdf_rho_minus");
        return I / std::sqrt(1.0 - rho * rho);
    }

    // rho+ = -rho- in the mirrored branch
    inline double pdf_rho_plus(double rho, const ScenarioConfig &cfg) { return pdf_rho_minus(-rho, cfg); }

    inline double pdf_m_partial_rplus(double mu, const ScenarioConfig &cfg)
    {
        const double C = cfg.C();
        if (mu < 0.0 || mu > 2.0 * C)
            return 0.0;
        return pdf_rho_minus(mu / C - 1.0, cfg) / C;
    }

    inline double pdf_m_partial_rminus(double mu, const ScenarioConfig &cfg)
    {
        const double C = cfg.C();
        if (mu < 0.0 || mu > 2.0 * C)
            return 0.0;
        return pdf_rho_plus(1.0 - mu / C, cfg) / C;
    }

    // pi - 2 atan(L_R / 2x0), written without cancellation for small x0
    inline double full_branch_width(double x0, double L_R) { return 2.0 * std::atan(2.0 * x0 / L_R); }

    inline double pdf_m_full_conditional(double mu, double x0, const ScenarioConfig &cfg)
    {
        const double C = cfg.C(), a = half_angle(x0, cfg.L_R);
        const double Cx = C * std::sin(a);
        if (mu < 2.0 * C * std::sin(a) * std::sin(a) || mu >= 2.0 * Cx)
            return 0.0;
        const double q = mu / (2.0 * Cx);
        return 1.0 / (full_branch_width(x0, cfg.L_R) * Cx * std::sqrt((1.0 - q) * (1.0 + q)));
    }

    inline double omega_bound(double mu, const ScenarioConfig &cfg)
    {
        return 0.5 * cfg.L_R * std::sqrt((2.0 * cfg.C() - mu) / mu);
    }

    inline double psi_bound(double mu, const ScenarioConfig &cfg)
    {
        const double r = mu / (2.0 * cfg.C());
        return 0.5 * cfg.L_R * std::sqrt((1.0 - r) * (1.0 + r)) / r;
    }

    inline double pdf_m_full(double mu, const ScenarioConfig &cfg)
    {
        const double C = cfg.C();
        if (!(mu > 0.0) || mu > 2.0 * C)
            return 0.0;
        const double psi = psi_bound(mu, cfg);
        const double lo = std::min(omega_bound(mu, cfg), cfg.R), hi = std::min(psi, cfg.R);
        if (!(hi > lo))
            return 0.0;
        // 1 - (mu / 2C(x))^2 = 4 s^2 (psi - x)(psi + x), s = mu / (2 C L_R)
        const double s = mu / (2.0 * C * cfg.L_R);
        auto g = [&](double x)
        {
            const double Cx = C * std::sin(half_angle(x, cfg.L_R));
            const double root = 2.0 * s * std::sqrt(std::max(0.0, (psi - x) * (psi + x)));
            return pdf_x0(x, cfg.R) / (full_branch_width(x, cfg.L_R) * Cx * root);
        };
        return detail::checked(numerics::integrate(g, lo, hi, inner_rel_tol), "pdf_m_full");
    }

    struct MixtureWeights
    {
        double v_rplus = 0.0, v_rminus = 0.0, v_full = 0.0, v = 0.0;
    };

    inline MixtureWeights mixture_weights(double x0, double L_R)
    {
        const double a = half_angle(x0, L_R);
        return {a / pi, a / pi, full_branch_width(x0, L_R) / (2.0 * pi), pov(x0, L_R)};
    }

    // Upper end of the partial piece, 2C L_R^2 / (L_R^2 + 4 x0^2)
    inline double partial_support_max(double x0, const ScenarioConfig &cfg)
    {
        const double L2 = cfg.L_R * cfg.L_R;
        return 2.0 * cfg.C() * L2 / (L2 + 4.0 * x0 * x0);
    }

    // Density of mu given x0 and that the Rx is visible
    inline double pdf_m_conditional(double mu, double x0, const ScenarioConfig &cfg)
    {
        const double C = cfg.C(), a = half_angle(x0, cfg.L_R);
        if (mu < 0.0 || mu > 2.0 * C * std::sin(a))
            return 0.0;
        const auto w = mixture_weights(x0, cfg.L_R);
        double f = 0.0;
        if (mu < partial_support_max(x0, cfg))
        {
            const double r = mu / C - 1.0;
            f += (w.v_rplus + w.v_rminus) / (C * 2.0 * a * std::sqrt(1.0 - r * r));
        }
        f += w.v_full * pdf_m_full_conditional(mu, x0, cfg);
        return f / w.v;
    }

    // Scenario density and its support [lo, hi] with interior kinks
    inline double scenario_pdf(double mu, const ScenarioConfig &cfg)
    {
        switch (cfg.scenario)
        {
        case Scenario::partial_rplus:
            return pdf_m_partial_rplus(mu, cfg);
        case Scenario::partial_rminus:
            return pdf_m_partial_rminus(mu, cfg);
        case Scenario::full_visibility:
            return pdf_m_full(mu, cfg);
        case Scenario::conditional_on_x0:
            return pdf_m_conditional(mu, cfg.x0, cfg);
        }
        return 0.0;
    }

    inline double support_max(const ScenarioConfig &cfg)
    {
        if (cfg.scenario == Scenario::conditional_on_x0)
            return 2.0 * cfg.C() * std::sin(half_angle(cfg.x0, cfg.L_R));
        return 2.0 * cfg.C();
    }

    inline std::vector<double> breakpoints(const ScenarioConfig &cfg)
    {
        if (cfg.scenario == Scenario::conditional_on_x0)
            return {partial_support_max(cfg.x0, cfg)};
        if (cfg.scenario == Scenario::full_visibility)
        {
            const double a = half_angle(cfg.R, cfg.L_R);
            return {2.0 * cfg.C() * std::sin(a) * std::sin(a), 2.0 * cfg.C() * std::sin(a)};
        }
        return {};
    }

    inline std::vector<double> default_grid(const ScenarioConfig &cfg, std::size_t n = 512)
    {
        if (n < 2)
            throw error(errc::usage, "grid needs at least two points");
        std::vector<double> g(n);
        const double hi = support_max(cfg);
        for (std::size_t i = 0; i < n; ++i)
            g[i] = hi * double(i) / double(n - 1);
        return g;
    }

    struct DistributionCurve
    {
        ScenarioConfig config;
        std::vector<double> grid;
        std::vector<double> pdf;
        std::vector<double> ccdf;      // analytic P[mu > grid_i]
        std::vector<double> mc_ccdf;   // empty unless an overlay was attached
        std::size_t mc_samples = 0;
        std::uint64_t seed = 0;
        double normalization = 0.0;    // integral of the pdf over its support
    };

    // Integral of the scenario pdf over [a, b], split at interior kinks
    inline double pdf_mass(const ScenarioConfig &cfg, double a, double b)
    {
        std::vector<double> cuts{a};
        for (double p : breakpoints(cfg))
            if (p > a && p < b)
                cuts.push_back(p);
        cuts.push_back(b);
        double s = 0.0;
        for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
        {
            auto f = [&](double mu)
            { return scenario_pdf(mu, cfg); };
            s += detail::checked(numerics::integrate(f, cuts[i], cuts[i + 1], outer_rel_tol, 1e-12), "ccdf");
        }
        return s;
    }

    inline DistributionCurve ccdf(const ScenarioConfig &cfg, const std::vector<double> &grid)
    {
        cfg.validate();
        if (grid.empty())
            throw error(errc::usage, "ccdf: empty grid");
        for (std::size_t i = 1; i < grid.size(); ++i)
            if (!(grid[i] > grid[i - 1]))
                throw error(errc::usage, "ccdf: grid must be strictly ascending");
        const double top = support_max(cfg);
        if (grid.front() < 0.0 || grid.back() > top * (1.0 + 1e-12))
            throw error(errc::usage, "ccdf: grid outside the scenario support");

        DistributionCurve out;
        out.config = cfg;
        out.grid = grid;
        const std::size_t n = grid.size();
        std::vector<double> mass(n, 0.0); // mass[i] = integral over [grid_i, grid_{i+1}] (last: to top)
        for (std::size_t i = 0; i < n; ++i)
        {
            const double b = i + 1 < n ? grid[i + 1] : top;
            mass[i] = std::min(b, top) > grid[i] ? pdf_mass(cfg, grid[i], std::min(b, top)) : 0.0;
        }
        out.ccdf.assign(n, 0.0);
        double acc = 0.0;
        for (std::size_t i = n; i-- > 0;)
        {
            acc += mass[i];
            out.ccdf[i] = std::clamp(acc, 0.0, 1.0);
        }
        out.normalization = acc + (grid.front() > 0.0 ? pdf_mass(cfg, 0.0, grid.front()) : 0.0);
        out.pdf.resize(n);
        for (std::size_t i = 0; i < n; ++i)
            out.pdf[i] = scenario_pdf(grid[i], cfg);
        return out;
    }

    // ---------------------------------------------------------------------
    // Monte Carlo through the deterministic engine
    // ---------------------------------------------------------------------

    struct MonteCarloResult
    {
        std::vector<double> grid;
        std::vector<double> ccdf;          // empirical P[mu > grid_i]
        std::vector<double> samples;       // sorted excess DoF values
        std::size_t accepted = 0;
        std::size_t draws = 0;
        double acceptance_rate = 0.0;      // mean branch probability of the scenario
        std::size_t engine_mismatch = 0;   // draws where the engine status disagreed with the branch
        double min_mismatch_x0 = 0.0, max_mismatch_x0 = 0.0;
        std::uint64_t seed = 0;
    };

    inline constexpr std::size_t mc_chunk = 1 << 16;

    namespace detail
    {
        inline double sample_x0(numerics::UniformStream &u, double R)
        {
            while (true)
            {
                const double r = R * std::sqrt(u()), phi = pi * (u() - 0.5);
                const double x = r * std::cos(phi);
                if (x > 0.0)
                    return x;
            }
        }

        struct chunk_out
        {
            std::vector<double> mu;
            std::size_t draws = 0, mismatch = 0;
            double prob_sum = 0.0, mis_lo = 1e300, mis_hi = 0.0;
        };

        inline Visibility expected_status(int branch)
        {
            return branch == 2 ? Visibility::full : Visibility::partial_rx;
        }

        inline chunk_out run_chunk(const ScenarioConfig &cfg, std::uint64_t seed, std::uint64_t chunk, std::size_t want)
        {
            auto u = numerics::sample_stream(seed, chunk);
            const double lambda = cfg.wavelength(), C = cfg.C();
            chunk_out out;
            out.mu.reserve(want);
            while (out.mu.size() < want)
            {
                ++out.draws;
                int branch = 0;
                double x0 = cfg.x0, theta = 0.0;
                if (cfg.scenario == Scenario::conditional_on_x0)
                {
                    theta = pi - 2.0 * pi * u(); // (-pi, pi]
                    branch = branch_of(theta, x0, cfg.L_R);
                    out.prob_sum += pov(x0, cfg.L_R);
                    if (branch == 0)
                        continue;
                }
                else
                {
                    x0 = sample_x0(u, cfg.R);
                    const double a = half_angle(x0, cfg.L_R), v = u();
                    if (cfg.scenario == Scenario::full_visibility)
                    {
                        branch = 2;
                        theta = (a - 0.5 * pi) + v * (pi - 2.0 * a);
                        out.prob_sum += (pi - 2.0 * a) / (2.0 * pi);
                    }
                    else
                    {
                        branch = cfg.scenario == Scenario::partial_rplus ? 1 : 3;
                        const double lo = branch == 1 ? -0.5 * pi - a : 0.5 * pi - a;
                        theta = lo + v * 2.0 * a;
                        out.prob_sum += a / pi;
                    }
                }
                const auto link = LinkGeometry::make(cfg.L_T, theta, cfg.L_R, pi, x0, 0.0, lambda);
                const auto d = dof(link);
                if (d.visibility.status == expected_status(branch))
                    out.mu.push_back(d.m_real - 1.0);
                else
                {
                    ++out.mismatch;
                    out.mis_lo = std::min(out.mis_lo, x0);
                    out.mis_hi = std::max(out.mis_hi, x0);
                    out.mu.push_back(branch_mu(branch, theta, x0, cfg.L_R, C));
                }
            }
            return out;
        }
    }

    inline std::vector<double> empirical_ccdf(const std::vector<double> &sorted, const std::vector<double> &grid)
    {
        std::vector<double> c(grid.size());
        for (std::size_t i = 0; i < grid.size(); ++i)
        {
            const auto it = std::upper_bound(sorted.begin(), sorted.end(), grid[i]);
            c[i] = double(sorted.end() - it) / double(sorted.size());
        }
        return c;
    }

    // n accepted samples; chunk k always uses substream k, so results do not depend on threads.
    inline MonteCarloResult monte_carlo(const ScenarioConfig &cfg, std::size_t n, std::uint64_t seed, const std::vector<double> &grid,
                                        unsigned threads = 0)
    {
        cfg.validate();
        if (n < 10000)
            throw error(errc::domain, "monte_carlo: need at least 1e4 samples");
        const std::size_t chunks = (n + mc_chunk - 1) / mc_chunk;
        std::vector<detail::chunk_out> parts(chunks);
        auto work = [&](std::size_t first, std::size_t step)
        {
            for (std::size_t k = first; k < chunks; k += step)
                parts[k] = detail::run_chunk(cfg, seed, k, std::min(mc_chunk, n - k * mc_chunk));
        };
        if (threads == 0)
            threads = std::max(1u, std::thread::hardware_concurrency());
        threads = unsigned(std::min<std::size_t>(threads, chunks));
        if (threads <= 1)
            work(0, 1);
        else
        {
            std::vector<std::thread> pool;
            for (unsigned t = 0; t < threads; ++t)
                pool.emplace_back(work, t, threads);
            for (auto &th : pool)
                th.join();
        }

        MonteCarloResult res;
        res.seed = seed;
        res.grid = grid;
        double prob = 0.0;
        res.min_mismatch_x0 = 1e300;
        for (auto &p : parts)
        {
            res.samples.insert(res.samples.end(), p.mu.begin(), p.mu.end());
            res.draws += p.draws;
            res.engine_mismatch += p.mismatch;
            prob += p.prob_sum;
            res.min_mismatch_x0 = std::min(res.min_mismatch_x0, p.mis_lo);
            res.max_mismatch_x0 = std::max(res.max_mismatch_x0, p.mis_hi);
        }
        if (res.engine_mismatch == 0)
            res.min_mismatch_x0 = 0.0;
        res.accepted = res.samples.size();
        res.acceptance_rate = prob / double(res.draws);
        if (cfg.scenario == Scenario::conditional_on_x0)
            res.acceptance_rate = double(res.accepted) / double(res.draws);
        std::sort(res.samples.begin(), res.samples.end());
        res.ccdf = empirical_ccdf(res.samples, grid);
        return res;
    }

    inline void attach_monte_carlo(DistributionCurve &curve, const MonteCarloResult &mc)
    {
        curve.mc_ccdf = mc.ccdf;
        curve.mc_samples = mc.accepted;
        curve.seed = mc.seed;
    }

    inline double sup_gap(const std::vector<double> &a, const std::vector<double> &b)
    {
        double g = 0.0;
        for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i)
            g = std::max(g, std::abs(a[i] - b[i]));
        return g;
    }

    // Visibility frequency over theta_T in (-pi, pi] at fixed x0, stratified (one draw per stratum)
    inline double pov_monte_carlo(double x0, double L_R, double L_T, double wavelength, std::size_t n, std::uint64_t seed)
    {
        if (n == 0)
            throw error(errc::domain, "pov_monte_carlo: n must be positive");
        auto u = numerics::sample_stream(seed, 0);
        std::size_t hits = 0;
        for (std::size_t i = 0; i < n; ++i)
        {
            const double theta = pi - 2.0 * pi * (double(i) + u()) / double(n);
            const auto rep = classify_visibility(LinkGeometry::make(L_T, theta, L_R, pi, x0, 0.0, wavelength));
            hits += rep.visible() ? 1 : 0;
        }
        return double(hits) / double(n);
    }

    // Visibility frequency with x0 ~ pdf_x0 and theta_T uniform on (-pi, pi]
    inline double visibility_rate_monte_carlo(const ScenarioConfig &cfg, std::size_t n, std::uint64_t seed)
    {
        auto u = numerics::sample_stream(seed, 0);
        std::size_t hits = 0;
        for (std::size_t i = 0; i < n; ++i)
        {
            const double x0 = detail::sample_x0(u, cfg.R);
            const double theta = pi - 2.0 * pi * u();
            hits += branch_of(theta, x0, cfg.L_R) != 0 ? 1 : 0;
        }
        return double(hits) / double(n);
    }

    // E[pov(x0)] over pdf_x0
    inline double mean_pov(const ScenarioConfig &cfg)
    {
        auto g = [&](double x)
        { return pov(x, cfg.L_R) * pdf_x0(x, cfg.R); };
        return detail::checked(numerics::integrate(g, 0.0, cfg.R, inner_rel_tol), "mean_pov");
    }
}
