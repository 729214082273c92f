#pragma once

// The electrostatic-to-quantum map.  A power-law charge density fixes, through
// Gauss's law, a field E = E1 + E2(r) with E1 constant; substituting
// psi = A exp(-S) with S' = |E| into the Poisson equation turns it into the
// s-wave Schroedinger equation
//
//   -(1/2r^2) d/dr(r^2 dpsi/dr) + U(r) psi = E0 psi
//
// with U = |E2|^2/2 + E1 E2 - rho/2 (constant term folded into E0) and
// E0 = -E1^2/2 - c0.  Both the ground-state energy and the wavefunction come
// out in closed form; the oracle module re-derives them numerically.

#include <cmath>
#include <optional>
#include <stdexcept>
#include <utility>

#include "psdual/electrostatics.hpp"
#include "psdual/erfc.hpp"
#include "psdual/quadrature.hpp"
#include "psdual/radial_polynomial.hpp"

namespace psdual {

// Split of the total field into its constant magnitude and the varying rest.
// Reconstruction invariant: [(constant, 0)] + varying equals the input field.
struct FieldDecomposition {
    double constant = 0.0;         // E1
    RadialPolynomial varying;      // E2, all exponents > 0
};

// Parameters of the two-term density family rho = 2Z/r + 3W.
struct DualFamilyParams {
    double z;
    double w;

    DualFamilyParams(double z_, double w_) : z(z_), w(w_) {
        if (!(z > 0.0)) throw std::invalid_argument("DualFamilyParams: require Z > 0");
        if (!(w >= 0.0)) throw std::invalid_argument("DualFamilyParams: require W >= 0");
    }
};

struct DualSolution {
    RadialPolynomial quantum_potential;     // U(r), no constant term
    double ground_energy = 0.0;             // E0
    RadialPolynomial exponent;              // S(r); psi(r) = A exp(-S(r)), S(0) = 0
    std::optional<double> normalization;    // A, set iff normalizable
    bool normalizable = false;
    bool bound = false;                     // E0 < 0 (and normalizable)
};

inline FieldDecomposition decompose_field(const RadialPolynomial& field) {
    FieldDecomposition out;
    std::vector<PowerTerm> varying;
    for (const auto& t : field.terms()) {
        if (t.exponent < -kExponentMergeTol) {
            throw std::domain_error("decompose_field: negative exponent, no constant/varying split");
        }
        if (std::abs(t.exponent) < kExponentMergeTol) {
            out.constant = t.coefficient;
        } else {
            varying.push_back(t);
        }
    }
    out.varying = RadialPolynomial(std::move(varying));
    return out;
}

struct QuantumPotential {
    RadialPolynomial potential;  // U with the constant term removed
    double constant_offset = 0.0;  // c0, the removed exponent-0 coefficient
};

// U_full = |E2|^2/2 + E1 E2 - rho/2 in atomic units; the exponent-0
// coefficient is split off so it can migrate into the eigenvalue.
inline QuantumPotential quantum_potential(const FieldDecomposition& d, const ChargeDensity& rho) {
    RadialPolynomial full = add(add(scale(multiply(d.varying, d.varying), 0.5), scale(d.varying, d.constant)),
                                scale(rho.profile(), -0.5));
    QuantumPotential out;
    out.constant_offset = full.coefficient_of(0.0);
    std::vector<PowerTerm> terms;
    for (const auto& t : full.terms()) {
        if (std::abs(t.exponent) >= kExponentMergeTol) terms.push_back(t);
    }
    out.potential = RadialPolynomial(std::move(terms));
    return out;
}

inline double ground_state_energy(const FieldDecomposition& d, double constant_offset) {
    return -0.5 * d.constant * d.constant - constant_offset;
}

// S(r) = Integral_0^r |E|(s) ds, so psi = A exp(-S) and S(0) = 0.
inline RadialPolynomial wavefunction_exponent(const RadialPolynomial& field) {
    for (const auto& t : field.terms()) {
        if (t.exponent < -kExponentMergeTol) {
            throw std::domain_error("wavefunction_exponent: negative field exponent");
        }
    }
    return integrate_from_zero(field);
}

// Density shapes with a closed-form normalization: exactly [(2Z,-1)] or
// [(2Z,-1),(3W,0)] with Z, W > 0.
inline std::optional<DualFamilyParams> match_dual_family(const ChargeDensity& rho) {
    const auto& terms = rho.profile().terms();
    if (terms.size() == 1 && std::abs(terms[0].exponent + 1.0) < kExponentMergeTol && terms[0].coefficient > 0.0) {
        return DualFamilyParams(terms[0].coefficient / 2.0, 0.0);
    }
    if (terms.size() == 2 && std::abs(terms[0].exponent + 1.0) < kExponentMergeTol &&
        std::abs(terms[1].exponent) < kExponentMergeTol && terms[0].coefficient > 0.0 &&
        terms[1].coefficient > 0.0) {
        return DualFamilyParams(terms[0].coefficient / 2.0, terms[1].coefficient / 3.0);
    }
    return std::nullopt;
}

// Normalization constant for psi = A exp(-Zr - Wr^2/2), from
// Integral_0^inf r^2 psi^2 dr = 1:
//
//   A = 2 W^(5/4) / sqrt(sqrt(pi) (W + 2Z^2) erfcx(Z/sqrt(W)) - 2 Z sqrt(W))
//
// computed through the scaled complementary error function so the huge
// exp(Z^2/W) never appears on its own.  W = 0 reduces to A = 2 Z^(3/2).
inline double normalization_closed_form(const DualFamilyParams& p) {
    if (p.w == 0.0) return 2.0 * p.z * std::sqrt(p.z);
    const double sqrt_w = std::sqrt(p.w);
    const double scaled = erfc(p.z / sqrt_w).scaled;
    const double radicand = detail::kSqrtPi * (p.w + 2.0 * p.z * p.z) * scaled - 2.0 * p.z * sqrt_w;
    if (!(radicand > 0.0)) {
        throw std::runtime_error("normalization_closed_form: non-positive radicand (numeric instability)");
    }
    return 2.0 * std::pow(p.w, 1.25) / std::sqrt(radicand);
}

namespace detail {

// Quadrature fallback for densities outside the closed-form family:
// A = 1/sqrt(Integral_0^rmax r^2 exp(-2 S) dr) with rmax pushed out until the
// integrand tail is below 1e-16 of its maximum.
inline double normalization_from_quadrature(const RadialPolynomial& exponent) {
    const auto integrand = [&](double r) { return r * r * std::exp(-2.0 * evaluate(exponent, r)); };

    double r_max = 10.0;
    double max_seen = 0.0;
    for (int i = 1; i <= 400; ++i) max_seen = std::max(max_seen, integrand(r_max * i / 400.0));
    while (integrand(r_max) > 1e-16 * max_seen && r_max < 1e4) r_max *= 1.5;
    if (integrand(r_max) > 1e-16 * max_seen) {
        throw std::runtime_error("normalization: integrand tail does not decay");
    }

    const int n = std::max(1000, static_cast<int>(std::ceil(r_max / 1e-3)));
    const SimpsonResult q = simpson_quadrature(integrand, GridSpec(1e-8, r_max, n));
    if (!(q.value > 0.0) || !std::isfinite(q.value)) {
        throw std::runtime_error("normalization: quadrature failed");
    }
    return 1.0 / std::sqrt(q.value);
}

}  // namespace detail

// Full pipeline: density -> field -> decomposition -> (U, E0, S, A, flags).
inline DualSolution solve_dual(const ChargeDensity& rho) {
    const RadialPolynomial field = field_from_density(rho);
    const FieldDecomposition split = decompose_field(field);
    const QuantumPotential qp = quantum_potential(split, rho);

    DualSolution sol;
    sol.quantum_potential = qp.potential;
    sol.ground_energy = ground_state_energy(split, qp.constant_offset);
    sol.exponent = wavefunction_exponent(field);

    // exp(-S) decays super-polynomially iff the leading coefficient is positive.
    sol.normalizable = !sol.exponent.is_zero() && sol.exponent.terms().back().coefficient > 0.0;
    if (sol.normalizable) {
        if (const auto family = match_dual_family(rho)) {
            sol.normalization = normalization_closed_form(*family);
        } else {
            sol.normalization = detail::normalization_from_quadrature(sol.exponent);
        }
    }
    sol.bound = sol.normalizable && sol.ground_energy < 0.0;
    return sol;
}

inline double wavefunction_eval(const DualSolution& sol, double r) {
    if (!sol.normalization) throw std::runtime_error("wavefunction_eval: solution is not normalized");
    return *sol.normalization * std::exp(-evaluate(sol.exponent, r));
}

}  // namespace psdual
