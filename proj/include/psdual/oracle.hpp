#pragma once

// Independent numerical checks of the duality's closed forms.  The radial
// equation is reduced with u = r psi to
//
//   -(1/2) u'' + U(r) u = E u,   u(0) = 0,
//
// and the ground state is found by outward Numerov integration plus bisection
// on a node-count/boundary-sign shooting indicator.  Nothing here reuses the
// symbolic eigenvalue or normalization paths it is meant to test.

#include <cmath>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "psdual/duality.hpp"
#include "psdual/quadrature.hpp"
#include "psdual/radial_polynomial.hpp"

namespace psdual {

struct NumerovResult {
    double energy = 0.0;
    int node_count = 0;
};

namespace detail {

struct ShootOutcome {
    int nodes = 0;
    double u_end = 0.0;
};

// Outward Numerov sweep of u'' = 2 (U - E) u at fixed E, counting interior
// sign changes.  The solution is rescaled whenever it grows past 1e250, which
// preserves signs and node count.
inline ShootOutcome shoot(const std::vector<double>& potential, const GridSpec& grid, double coulomb_z,
                          double energy) {
    const double h = grid.h();
    const double h2_12 = h * h / 12.0;
    const auto f = [&](int i) { return 2.0 * (potential[static_cast<std::size_t>(i)] - energy); };

    // Series seed u ~ r (1 - Z r) absorbs the Coulomb singularity at the
    // origin; with Z = 0 it reduces to the regular u ~ r behavior.
    const double r0 = grid.r(0);
    const double r1 = grid.r(1);
    double u_prev = r0 * (1.0 - coulomb_z * r0);
    double u_curr = r1 * (1.0 - coulomb_z * r1);

    ShootOutcome out;
    if (u_prev * u_curr < 0.0) out.nodes += 1;
    for (int i = 1; i < grid.n; ++i) {
        const double u_next = (2.0 * u_curr * (1.0 + 5.0 * h2_12 * f(i)) - u_prev * (1.0 - h2_12 * f(i - 1))) /
                              (1.0 - h2_12 * f(i + 1));
        if (u_curr * u_next < 0.0) out.nodes += 1;
        u_prev = u_curr;
        u_curr = u_next;
        if (std::abs(u_curr) > 1e250) {
            u_prev *= 1e-250;
            u_curr *= 1e-250;
        }
    }
    out.u_end = u_curr;
    return out;
}

inline std::vector<double> sample_potential(const RadialPolynomial& potential, const GridSpec& grid) {
    std::vector<double> values(static_cast<std::size_t>(grid.n) + 1);
    for (int i = 0; i <= grid.n; ++i) values[static_cast<std::size_t>(i)] = evaluate(potential, grid.r(i));
    return values;
}

}  // namespace detail

// Interior node count of the outward solution at the given trial energy.
// The count is non-decreasing in E, which is what makes bisection safe.
inline int count_nodes(const RadialPolynomial& potential, const GridSpec& grid, double energy) {
    const std::vector<double> samples = detail::sample_potential(potential, grid);
    const double coulomb_z = -potential.coefficient_of(-1.0);
    return detail::shoot(samples, grid, coulomb_z, energy).nodes;
}

// Lowest eigenvalue inside (e_lo, e_hi), bisected to |dE| <= 1e-10.  The
// shooting indicator flips where the boundary solution first picks up a node
// or a negative tail.
inline NumerovResult numerov_ground_state(const RadialPolynomial& potential, const GridSpec& grid, double e_lo,
                                          double e_hi) {
    if (!(e_lo < e_hi)) throw std::invalid_argument("numerov_ground_state: require e_lo < e_hi");

    const std::vector<double> samples = detail::sample_potential(potential, grid);
    const double coulomb_z = -potential.coefficient_of(-1.0);
    const auto above = [&](double energy) {
        const detail::ShootOutcome s = detail::shoot(samples, grid, coulomb_z, energy);
        return s.nodes > 0 || s.u_end < 0.0;
    };

    if (above(e_lo) || !above(e_hi)) {
        throw std::runtime_error("numerov_ground_state: no eigenvalue bracketed by (e_lo, e_hi)");
    }
    double lo = e_lo;
    double hi = e_hi;
    while (hi - lo > 1e-10) {
        const double mid = 0.5 * (lo + hi);
        if (above(mid)) {
            hi = mid;
        } else {
            lo = mid;
        }
    }

    NumerovResult out;
    out.energy = 0.5 * (lo + hi);
    out.node_count = detail::shoot(samples, grid, coulomb_z, lo).nodes;
    if (out.node_count != 0) {
        throw std::runtime_error("numerov_ground_state: converged state is not a ground state");
    }
    return out;
}

// Max over interior grid points of the transformation identity residual
//
//   | Lap(psi)/psi - (psi'/psi)^2 + rho | / (1 + |rho|)
//
// with 6th-order central stencils; the residual is a small difference of two
// (psi'/psi)^2-sized quantities, and for steep Gaussian tails (S' > 20) a
// 4th-order stencil's h^4 S'^6 truncation already overshoots 1e-6 at h = 1e-3.
// Stencil values are taken relative to the center point, so strongly decaying
// wavefunctions never underflow the ratio.
inline double fd_residual(const DualSolution& sol, const ChargeDensity& rho, const GridSpec& grid) {
    if (!sol.normalization) throw std::runtime_error("fd_residual: solution is not normalized");

    const double h = grid.h();
    double worst = 0.0;
    for (int i = 3; i <= grid.n - 3; ++i) {
        const double r = grid.r(i);
        const double s_center = evaluate(sol.exponent, r);
        double psi[7];  // psi(r + k h)/psi(r), k = -3..3
        for (int k = -3; k <= 3; ++k) {
            psi[k + 3] = std::exp(s_center - evaluate(sol.exponent, r + k * h));
        }
        const double d1 =
            (-psi[0] + 9.0 * psi[1] - 45.0 * psi[2] + 45.0 * psi[4] - 9.0 * psi[5] + psi[6]) / (60.0 * h);
        const double d2 = (2.0 * psi[0] - 27.0 * psi[1] + 270.0 * psi[2] - 490.0 * psi[3] + 270.0 * psi[4] -
                           27.0 * psi[5] + 2.0 * psi[6]) /
                          (180.0 * h * h);
        const double laplacian = d2 + 2.0 * d1 / r;
        const double density = evaluate(rho.profile(), r);
        const double residual = std::abs(laplacian - d1 * d1 + density) / (1.0 + std::abs(density));
        worst = std::max(worst, residual);
    }
    return worst;
}

struct VerificationReport {
    double analytic_E0 = 0.0;
    std::optional<double> numeric_E0;
    std::optional<double> abs_err;
    std::optional<int> node_count;
    std::optional<double> ode_residual_max;
    std::optional<double> norm_quadrature;
    std::optional<double> norm_closed_form;
    bool passed = false;
    std::string reason;  // nonempty iff the report failed before/at a check
};

// Full cross-check of one density: closed-form solution vs Numerov eigenvalue,
// finite-difference identity residual, and normalization quadrature.
inline VerificationReport verify(const ChargeDensity& rho, const GridSpec& grid) {
    VerificationReport report;
    const DualSolution sol = solve_dual(rho);
    report.analytic_E0 = sol.ground_energy;

    if (!sol.normalizable) {
        report.reason = "not normalizable";
        return report;
    }
    if (!sol.bound) {
        report.reason = "E0 >= 0";
        return report;
    }

    const double e0 = sol.ground_energy;
    const NumerovResult numerov =
        numerov_ground_state(sol.quantum_potential, grid, std::min(e0 - 1.0, 2.0 * e0), -1e-12);
    report.numeric_E0 = numerov.energy;
    report.abs_err = std::abs(e0 - numerov.energy);
    report.node_count = numerov.node_count;

    report.ode_residual_max = fd_residual(sol, rho, grid);

    const double a = *sol.normalization;
    const auto norm_integrand = [&](double r) {
        const double psi = a * std::exp(-evaluate(sol.exponent, r));
        return r * r * psi * psi;
    };
    report.norm_quadrature = simpson_quadrature(norm_integrand, grid).value;
    if (const auto family = match_dual_family(rho)) {
        report.norm_closed_form = normalization_closed_form(*family);
    }

    report.passed = *report.abs_err <= 1e-5 && *report.ode_residual_max <= 1e-6 &&
                    std::abs(*report.norm_quadrature - 1.0) <= 1e-8 && *report.node_count == 0;
    if (!report.passed) report.reason = "tolerance exceeded";
    return report;
}

}  // namespace psdual
