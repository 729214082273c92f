#pragma once

// Gauss's-law field construction for spherically symmetric power-law charge
// densities, the electrostatic potential in the V(0) = 0 gauge, and a symbolic
// Poisson residual check.  Everything is in atomic units.

#include <cmath>
#include <stdexcept>

#include "psdual/radial_polynomial.hpp"

namespace psdual {

// Atomic-units convention used throughout; all interfaces are dimensionless.
struct UnitConvention {
    double epsilon0 = 1.0;
    double v0 = 1.0;
    double a0 = 1.0;
    double hbar = 1.0;
    double mass = 1.0;
};

inline constexpr UnitConvention atomic_units{};

// Volume charge density rho(r).  Exponents below -1 are rejected: they would
// feed negative powers of r into the field and break the constant/varying
// field split the duality relies on.
class ChargeDensity {
  public:
    explicit ChargeDensity(RadialPolynomial profile) : profile_(std::move(profile)) {
        if (profile_.is_zero()) {
            throw std::invalid_argument("ChargeDensity: density must have at least one term");
        }
        for (const auto& t : profile_.terms()) {
            if (t.exponent < -1.0 - kExponentMergeTol) {
                throw std::invalid_argument("ChargeDensity: exponent below -1 is unsupported");
            }
        }
    }

    const RadialPolynomial& profile() const { return profile_; }

  private:
    RadialPolynomial profile_;
};

// |E|(r) = (1/r^2) Integral_0^r rho(s) s^2 ds, term by term:
// c r^k -> c/(k+3) r^(k+1).  All resulting exponents are >= 0.
inline RadialPolynomial field_from_density(const ChargeDensity& rho) {
    std::vector<PowerTerm> terms;
    terms.reserve(rho.profile().size());
    for (const auto& t : rho.profile().terms()) {
        terms.push_back({t.coefficient / (t.exponent + 3.0), t.exponent + 1.0});
    }
    return RadialPolynomial(std::move(terms));
}

// V(r) = -Integral_0^r E(s) ds, gauge V(0) = 0.
inline RadialPolynomial potential_from_field(const RadialPolynomial& field) {
    for (const auto& t : field.terms()) {
        if (t.exponent < -kExponentMergeTol) {
            throw std::domain_error("potential_from_field: negative field exponent, V(0) = 0 gauge undefined");
        }
    }
    return scale(integrate_from_zero(field), -1.0);
}

// Laplacian(V) + rho, which must be the zero polynomial for any potential
// produced by this module's pipeline.  Symbolic check on r > 0 only;
// distributional sources at the origin are not modeled.
inline RadialPolynomial poisson_residual(const RadialPolynomial& potential, const ChargeDensity& rho) {
    return add(radial_laplacian(potential), rho.profile());
}

}  // namespace psdual
