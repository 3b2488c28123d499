// Shared test utilities: seeded random draws over the valid domain and an
// independent singular-value oracle (characteristic-polynomial route, kept
// separate from the closed form under test).

#pragma once

#include <cmath>
#include <numbers>
#include <random>
#include <utility>

#include "qsl/mat2.hpp"
#include "qsl/model.hpp"

namespace testutil {

using qsl::cplx;
using qsl::Mat2;

constexpr double kPi = std::numbers::pi;

struct Rng {
    std::mt19937 gen;
    explicit Rng(unsigned seed) : gen(seed) {}

    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(gen);
    }

    cplx complex_box(double scale) {
        return {uniform(-scale, scale), uniform(-scale, scale)};
    }

    Mat2 matrix(double scale = 1.0) {
        return {complex_box(scale), complex_box(scale), complex_box(scale),
                complex_box(scale)};
    }

    Mat2 hermitian(double scale = 1.0) {
        const cplx off = complex_box(scale);
        return {uniform(-scale, scale), off, std::conj(off), uniform(-scale, scale)};
    }

    // Uniform draw from the Bloch ball; always a valid state.
    qsl::DensityMatrix state() {
        double x, y, z;
        do {
            x = uniform(-1.0, 1.0);
            y = uniform(-1.0, 1.0);
            z = uniform(-1.0, 1.0);
        } while (x * x + y * y + z * z > 1.0);
        const Mat2 m{0.5 * (1.0 + z), 0.5 * cplx(x, -y), 0.5 * cplx(x, y),
                     0.5 * (1.0 - z)};
        return qsl::DensityMatrix::validated(m);
    }

    // gamma kept away from 0 so Gamma > 0 for every draw.
    qsl::ModelParams params() {
        return qsl::ModelParams::make(uniform(0.0, 15.0), uniform(0.01, 1.0),
                                      uniform(0.0, 0.8), uniform(-kPi, kPi),
                                      uniform(0.0, 0.5 * kPi), uniform(0.0, kPi));
    }
};

// Singular values from the roots of x^2 - tr(G) x + det(G), G = M M^dagger.
inline std::pair<double, double> svd_oracle(const Mat2& m) {
    const Mat2 g = m * qsl::adjoint(m);
    const double tr = qsl::trace(g).real();
    const double dt = qsl::det(g).real();
    const double disc = std::sqrt(std::max(0.0, tr * tr - 4.0 * dt));
    const double hi = 0.5 * (tr + disc);
    const double lo = 0.5 * (tr - disc);
    return {std::sqrt(std::max(0.0, hi)), std::sqrt(std::max(0.0, lo))};
}

}  // namespace testutil
