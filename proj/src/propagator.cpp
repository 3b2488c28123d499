#include "qsl/propagator.hpp"

#include <cmath>
#include <numbers>

namespace qsl {

namespace {
constexpr double kPi = std::numbers::pi;
}

DensityMatrix initial_state(double theta, double chi) {
    if (!std::isfinite(theta) || theta < 0.0 || theta > 0.5 * kPi)
        throw DomainError("initial_state: theta must lie in [0, pi/2]");
    if (!std::isfinite(chi) || chi < 0.0 || chi > kPi)
        throw DomainError("initial_state: chi must lie in [0, pi]");
    const double ct = std::cos(theta);
    const double st = std::sin(theta);
    const cplx phase = std::polar(1.0, chi);
    const Mat2 m{ct * ct, ct * st * std::conj(phase), ct * st * phase, st * st};
    return DensityMatrix::validated(m);
}

PropagatorCoeffs coefficients(double t, const ModelParams& p, CoeffMode mode) {
    p.validate();
    if (!std::isfinite(t) || t < 0.0)
        throw DomainError("coefficients: t must be finite and >= 0");

    const double lam = p.lambda_fb;
    const double sqrt_gamma = std::sqrt(p.gamma);
    const double lam_sq = lam * lam;
    // decay block |sqrt(gamma) + lam e^{i a}|^2; Gamma = 2 l^2 + 2 l sqrt(g)
    // cos(a) + g grouped as lam_sq + block so that mu(0) = 1 bitwise.
    const double block = lam_sq + 2.0 * lam * sqrt_gamma * std::cos(p.alpha) + p.gamma;
    const double big_gamma = lam_sq + block;
    if (big_gamma == 0.0)
        throw DegenerateModel("coefficients: Gamma = 0 (gamma = lambda = 0); "
                              "population coefficients are undefined");

    const double osc = p.omega + lam * std::sin(p.alpha);  // coherence frequency
    const cplx big_delta = 2.0 * std::sqrt(cplx(lam_sq * block - osc * osc, 0.0));

    PropagatorCoeffs out;
    out.big_gamma = big_gamma;
    out.big_delta = big_delta;

    const double relax = std::exp(-big_gamma * t);
    out.mu = (lam_sq + block * relax) / big_gamma;
    out.nu = lam_sq * (1.0 - relax) / big_gamma;

    // cosh_term = e^{-Gamma t/2} cosh(Delta t/2)
    // s_term    = e^{-Gamma t/2} sinh(Delta t/2) / Delta
    // Both exponents below have non-positive real part (Re Delta <= Gamma by
    // AM-GM on lam^2 and the decay block), so the overdamped branch cannot
    // overflow. The sinh difference cancels as Delta t -> 0; below 1e-6 a
    // 2-term series resolves the removable singularity s_term -> t/2.
    const cplx z = 0.5 * big_delta * t;
    cplx cosh_term, s_term;
    if (std::abs(big_delta) * t < 1e-6) {
        const double env = std::exp(-0.5 * big_gamma * t);
        cosh_term = env * (1.0 + 0.5 * z * z);
        s_term = env * 0.5 * t * (1.0 + z * z / 6.0);
    } else {
        const cplx e_plus = std::exp(z - 0.5 * big_gamma * t);
        const cplx e_minus = std::exp(-z - 0.5 * big_gamma * t);
        cosh_term = 0.5 * (e_plus + e_minus);
        s_term = 0.5 * (e_plus - e_minus) / big_delta;
    }

    const double xi_freq =
        (mode == CoeffMode::paper_literal) ? lam * std::sin(p.alpha) : osc;
    out.xi = cosh_term - cplx(0.0, 2.0 * xi_freq) * s_term;

    const cplx e_alpha = std::polar(1.0, p.alpha);
    out.eta = -2.0 * lam * e_alpha * (sqrt_gamma + lam * e_alpha) * s_term;
    return out;
}

Mat2 apply_map(const PropagatorCoeffs& k, const Mat2& r) {
    const cplx r00 = k.mu * r.m00 + k.nu * r.m11;
    const cplx r01 = k.xi * r.m01 + k.eta * r.m10;
    const cplx r10 = std::conj(k.eta) * r.m01 + std::conj(k.xi) * r.m10;
    const cplx r11 = (1.0 - k.mu) * r.m00 + (1.0 - k.nu) * r.m11;
    return {r00, r01, r10, r11};
}

DensityMatrix evolve_analytic(const DensityMatrix& rho0, double t, const ModelParams& p,
                              CoeffMode mode) {
    const PropagatorCoeffs k = coefficients(t, p, mode);
    return DensityMatrix::validated(apply_map(k, rho0.mat()), 1e-9);
}

std::string to_string(CoeffMode mode) {
    return mode == CoeffMode::paper_literal ? "paper-literal" : "oracle-validated";
}

CoeffMode coeff_mode_from_string(const std::string& s) {
    if (s == "paper-literal") return CoeffMode::paper_literal;
    if (s == "oracle-validated") return CoeffMode::oracle_validated;
    throw DomainError("unknown coefficient mode '" + s +
                      "' (expected 'paper-literal' or 'oracle-validated')");
}

}  // namespace qsl
