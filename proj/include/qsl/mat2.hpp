// Complex 2x2 linear-algebra kernel. Everything is closed form and
// allocation free; eigenvalues and singular values come from the exact
// 2x2 formulas rather than a general decomposition routine.

#pragma once

#include <cmath>
#include <complex>
#include <utility>

#include "qsl/errors.hpp"

namespace qsl {

using cplx = std::complex<double>;

struct Mat2 {
    cplx m00{}, m01{}, m10{}, m11{};

    static Mat2 zero() { return {}; }
    static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static Mat2 diag(cplx a, cplx b) { return {a, 0.0, 0.0, b}; }
};

inline Mat2 operator+(const Mat2& a, const Mat2& b) {
    return {a.m00 + b.m00, a.m01 + b.m01, a.m10 + b.m10, a.m11 + b.m11};
}

inline Mat2 operator-(const Mat2& a, const Mat2& b) {
    return {a.m00 - b.m00, a.m01 - b.m01, a.m10 - b.m10, a.m11 - b.m11};
}

inline Mat2 operator-(const Mat2& a) {
    return {-a.m00, -a.m01, -a.m10, -a.m11};
}

inline Mat2 operator*(const Mat2& a, const Mat2& b) {
    return {a.m00 * b.m00 + a.m01 * b.m10, a.m00 * b.m01 + a.m01 * b.m11,
            a.m10 * b.m00 + a.m11 * b.m10, a.m10 * b.m01 + a.m11 * b.m11};
}

inline Mat2 operator*(cplx s, const Mat2& a) {
    return {s * a.m00, s * a.m01, s * a.m10, s * a.m11};
}

inline Mat2 operator*(double s, const Mat2& a) {
    return {s * a.m00, s * a.m01, s * a.m10, s * a.m11};
}

inline Mat2 operator*(const Mat2& a, cplx s) { return s * a; }
inline Mat2 operator*(const Mat2& a, double s) { return s * a; }

inline Mat2 adjoint(const Mat2& a) {
    return {std::conj(a.m00), std::conj(a.m10), std::conj(a.m01), std::conj(a.m11)};
}

inline cplx trace(const Mat2& a) { return a.m00 + a.m11; }

inline cplx det(const Mat2& a) { return a.m00 * a.m11 - a.m01 * a.m10; }

inline Mat2 commutator(const Mat2& a, const Mat2& b) { return a * b - b * a; }

inline double max_abs_entry(const Mat2& a) {
    return std::max(std::max(std::abs(a.m00), std::abs(a.m01)),
                    std::max(std::abs(a.m10), std::abs(a.m11)));
}

inline double max_abs_diff(const Mat2& a, const Mat2& b) {
    return max_abs_entry(a - b);
}

inline double frobenius_norm_sq(const Mat2& a) {
    return std::norm(a.m00) + std::norm(a.m01) + std::norm(a.m10) + std::norm(a.m11);
}

inline bool is_finite(const Mat2& a) {
    const auto ok = [](cplx z) {
        return std::isfinite(z.real()) && std::isfinite(z.imag());
    };
    return ok(a.m00) && ok(a.m01) && ok(a.m10) && ok(a.m11);
}

// max |A - A^dagger| entry; zero for exactly Hermitian input.
inline double hermiticity_defect(const Mat2& a) {
    return max_abs_entry(a - adjoint(a));
}

// Eigenvalues of a Hermitian matrix, descending: mean +- sqrt(dev^2 + |off|^2).
// Input must be Hermitian within 1e-10.
inline std::pair<double, double> eig_hermitian(const Mat2& h) {
    if (!is_finite(h)) throw DomainError("eig_hermitian: non-finite entries");
    if (hermiticity_defect(h) > 1e-10)
        throw NonHermitianInput("eig_hermitian: input not Hermitian within 1e-10");
    const double mean = 0.5 * (h.m00.real() + h.m11.real());
    const double dev = 0.5 * (h.m00.real() - h.m11.real());
    const double r = std::sqrt(dev * dev + std::norm(h.m01));
    return {mean + r, mean - r};
}

// Singular values, descending: square roots of the eigenvalues of M M^dagger.
// Total on finite input; for Hermitian M equals the absolute eigenvalues.
inline std::pair<double, double> singular_values(const Mat2& m) {
    const double g00 = std::norm(m.m00) + std::norm(m.m01);
    const double g11 = std::norm(m.m10) + std::norm(m.m11);
    const cplx g01 = m.m00 * std::conj(m.m10) + m.m01 * std::conj(m.m11);
    const double mean = 0.5 * (g00 + g11);
    const double dev = 0.5 * (g00 - g11);
    const double r = std::sqrt(dev * dev + std::norm(g01));
    return {std::sqrt(std::max(0.0, mean + r)), std::sqrt(std::max(0.0, mean - r))};
}

// Hermitian, unit-trace, positive-semidefinite state. Hermiticity and trace
// are checked at 1e-12; the eigenvalue floor is a call-site choice (1e-12 for
// hand-built states, 1e-9 on integrator and propagator outputs where rounding
// accumulates).
class DensityMatrix {
  public:
    static DensityMatrix validated(const Mat2& m, double positivity_tol = 1e-12) {
        if (!is_finite(m)) throw DomainError("density matrix: non-finite entries");
        if (hermiticity_defect(m) > 1e-12)
            throw DomainError("density matrix: Hermiticity defect above 1e-12");
        if (std::abs(trace(m) - 1.0) > 1e-12)
            throw DomainError("density matrix: trace differs from 1 by more than 1e-12");
        const auto [e1, e2] = eig_hermitian(m);
        (void)e1;
        if (e2 < -positivity_tol)
            throw PositivityViolation("density matrix: eigenvalue " + std::to_string(e2) +
                                      " below -" + std::to_string(positivity_tol));
        return DensityMatrix(m);
    }

    const Mat2& mat() const { return mat_; }

    // tr(rho^2); the same trace arithmetic as relative_purity so the two agree
    // bitwise on identical states.
    double purity() const { return trace(mat_ * mat_).real(); }

    // Eigenvalues descending with tiny negatives clamped to zero, ready for
    // use as the state spectrum in the bound denominators.
    std::pair<double, double> spectrum() const {
        const auto [e1, e2] = eig_hermitian(mat_);
        return {std::max(0.0, e1), std::max(0.0, e2)};
    }

  private:
    explicit DensityMatrix(const Mat2& m) : mat_(m) {}
    Mat2 mat_;
};

}  // namespace qsl
