#pragma once

// Uniform radial grids and composite Simpson quadrature.  Shared by the
// normalization integrals and the numerical verification oracles.

#include <cmath>
#include <stdexcept>
#include <utility>

namespace psdual {

// Uniform grid of n intervals on [r_min, r_max].  r_min > 0 keeps 1/r terms
// evaluable everywhere on the grid.
struct GridSpec {
    double r_min;
    double r_max;
    int n;

    GridSpec(double r_min_, double r_max_, int n_) : r_min(r_min_), r_max(r_max_), n(n_) {
        if (!(r_min > 0.0) || !(r_max > r_min)) {
            throw std::invalid_argument("GridSpec: require 0 < r_min < r_max");
        }
        if (n < 1000) throw std::invalid_argument("GridSpec: require n >= 1000 intervals");
        if (h() > 1e-2) throw std::invalid_argument("GridSpec: spacing h must be <= 1e-2");
    }

    double h() const { return (r_max - r_min) / n; }
    double r(int i) const { return r_min + i * h(); }
};

struct SimpsonResult {
    double value = 0.0;        // composite Simpson estimate
    double last_sample = 0.0;  // |f(r_max)|, for tail-truncation asserts
    double max_sample = 0.0;   // max |f| over the grid
};

// Composite Simpson on the grid.  An odd interval count is adjusted to n + 1
// internally (the grid spacing shrinks accordingly).
template <typename F>
SimpsonResult simpson_quadrature(F&& f, const GridSpec& grid) {
    const int n = (grid.n % 2 == 0) ? grid.n : grid.n + 1;
    const double h = (grid.r_max - grid.r_min) / n;

    SimpsonResult out;
    double sum = 0.0;
    double comp = 0.0;
    const auto accumulate = [&](double v) {
        const double y = v - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    };

    for (int i = 0; i <= n; ++i) {
        const double r = (i == n) ? grid.r_max : grid.r_min + i * h;
        const double fi = f(r);
        out.max_sample = std::max(out.max_sample, std::abs(fi));
        if (i == n) out.last_sample = std::abs(fi);
        const double weight = (i == 0 || i == n) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
        accumulate(weight * fi);
    }
    out.value = sum * h / 3.0;
    return out;
}

}  // namespace psdual
