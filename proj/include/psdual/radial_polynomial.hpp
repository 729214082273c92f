#pragma once

// Sparse sums of real-exponent power terms c * r^k.  Every radial quantity in
// this library (charge density, field magnitude, potentials, wavefunction
// exponent) is carried in this representation, so the duality pipeline can be
// checked with exact coefficient arithmetic instead of sampled values.

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace psdual {

// Exponents closer than this are merged into one term.
inline constexpr double kExponentMergeTol = 1e-12;

// Merged coefficients below this magnitude are treated as exact zeros.
inline constexpr double kCoefficientZeroTol = 1e-300;

struct PowerTerm {
    double coefficient = 0.0;
    double exponent = 0.0;
};

// Canonical form: exponents strictly increasing, no duplicates, no zero
// coefficients.  The empty term list is the zero polynomial.
class RadialPolynomial {
  public:
    RadialPolynomial() = default;

    explicit RadialPolynomial(std::vector<PowerTerm> terms) {
        for (const auto& t : terms) {
            if (!std::isfinite(t.coefficient) || !std::isfinite(t.exponent)) {
                throw std::invalid_argument("RadialPolynomial: non-finite term");
            }
        }
        std::stable_sort(terms.begin(), terms.end(),
                         [](const PowerTerm& a, const PowerTerm& b) { return a.exponent < b.exponent; });
        for (const auto& t : terms) {
            if (!terms_.empty() && std::abs(t.exponent - terms_.back().exponent) < kExponentMergeTol) {
                terms_.back().coefficient += t.coefficient;
            } else {
                terms_.push_back(t);
            }
        }
        terms_.erase(std::remove_if(terms_.begin(), terms_.end(),
                                    [](const PowerTerm& t) {
                                        return std::abs(t.coefficient) < kCoefficientZeroTol;
                                    }),
                     terms_.end());
    }

    const std::vector<PowerTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    // Coefficient of r^k, 0 if the term is absent.
    double coefficient_of(double exponent) const {
        for (const auto& t : terms_) {
            if (std::abs(t.exponent - exponent) < kExponentMergeTol) return t.coefficient;
        }
        return 0.0;
    }

    bool operator==(const RadialPolynomial& other) const {
        if (terms_.size() != other.terms_.size()) return false;
        for (std::size_t i = 0; i < terms_.size(); ++i) {
            if (terms_[i].coefficient != other.terms_[i].coefficient ||
                terms_[i].exponent != other.terms_[i].exponent) {
                return false;
            }
        }
        return true;
    }

  private:
    std::vector<PowerTerm> terms_;
};

inline RadialPolynomial canonicalize(std::vector<PowerTerm> terms) {
    return RadialPolynomial(std::move(terms));
}

namespace detail {

// r^k with a multiplicative fast path for small integral exponents; these are
// exact for the exponents the duality actually produces.
inline double pow_real(double r, double k) {
    const double rounded = std::nearbyint(k);
    if (rounded == k && std::abs(rounded) <= 16.0) {
        const int n = static_cast<int>(rounded);
        double acc = 1.0;
        for (int i = 0; i < std::abs(n); ++i) acc *= r;
        return n >= 0 ? acc : 1.0 / acc;
    }
    return std::pow(r, k);
}

}  // namespace detail

// Evaluate at r >= 0.  r = 0 is legal only when no negative exponents are
// present (the zero polynomial evaluates to 0 everywhere).
inline double evaluate(const RadialPolynomial& p, double r) {
    if (p.is_zero()) return 0.0;
    if (r < 0.0) throw std::domain_error("evaluate: negative radius");
    double sum = 0.0;
    for (const auto& t : p.terms()) {
        if (r == 0.0) {
            if (t.exponent < -kExponentMergeTol) {
                throw std::domain_error("evaluate: r = 0 with a negative exponent present");
            }
            if (std::abs(t.exponent) < kExponentMergeTol) sum += t.coefficient;
            continue;
        }
        sum += t.coefficient * detail::pow_real(r, t.exponent);
    }
    return sum;
}

inline RadialPolynomial add(const RadialPolynomial& p, const RadialPolynomial& q) {
    std::vector<PowerTerm> terms = p.terms();
    terms.insert(terms.end(), q.terms().begin(), q.terms().end());
    return RadialPolynomial(std::move(terms));
}

inline RadialPolynomial scale(const RadialPolynomial& p, double s) {
    if (!std::isfinite(s)) throw std::invalid_argument("scale: non-finite factor");
    std::vector<PowerTerm> terms = p.terms();
    for (auto& t : terms) t.coefficient *= s;
    return RadialPolynomial(std::move(terms));
}

inline RadialPolynomial multiply(const RadialPolynomial& p, const RadialPolynomial& q) {
    std::vector<PowerTerm> terms;
    terms.reserve(p.size() * q.size());
    for (const auto& a : p.terms()) {
        for (const auto& b : q.terms()) {
            terms.push_back({a.coefficient * b.coefficient, a.exponent + b.exponent});
        }
    }
    return RadialPolynomial(std::move(terms));
}

// Antiderivative that vanishes at the origin: c r^k -> c/(k+1) r^(k+1).
// Exponents at or below -1 have no finite integral from 0.
inline RadialPolynomial integrate_from_zero(const RadialPolynomial& p) {
    std::vector<PowerTerm> terms;
    terms.reserve(p.size());
    for (const auto& t : p.terms()) {
        if (t.exponent <= -1.0 + kExponentMergeTol) {
            throw std::domain_error("integrate_from_zero: exponent <= -1 is not integrable at the origin");
        }
        terms.push_back({t.coefficient / (t.exponent + 1.0), t.exponent + 1.0});
    }
    return RadialPolynomial(std::move(terms));
}

// d/dr, term by term.
inline RadialPolynomial derivative(const RadialPolynomial& p) {
    std::vector<PowerTerm> terms;
    terms.reserve(p.size());
    for (const auto& t : p.terms()) {
        terms.push_back({t.coefficient * t.exponent, t.exponent - 1.0});
    }
    return RadialPolynomial(std::move(terms));
}

// (1/r^2) d/dr (r^2 d/dr), term by term: c r^k -> c k (k+1) r^(k-2).
// Constants and 1/r terms are harmonic away from the origin and map to zero.
inline RadialPolynomial radial_laplacian(const RadialPolynomial& p) {
    std::vector<PowerTerm> terms;
    terms.reserve(p.size());
    for (const auto& t : p.terms()) {
        terms.push_back({t.coefficient * t.exponent * (t.exponent + 1.0), t.exponent - 2.0});
    }
    return RadialPolynomial(std::move(terms));
}

inline double max_abs_coefficient(const RadialPolynomial& p) {
    double m = 0.0;
    for (const auto& t : p.terms()) m = std::max(m, std::abs(t.coefficient));
    return m;
}

}  // namespace psdual
