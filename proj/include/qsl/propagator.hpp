// Closed-form time evolution under feedback. The density-matrix map is
//
//   r00(t) = mu r00(0) + nu r11(0)          r01(t) = xi r01(0) + eta r10(0)
//   r11(t) = (1-mu) r00(0) + (1-nu) r11(0)  r10(t) = eta* r01(0) + xi* r10(0)
//
// with populations relaxing at rate Gamma = 2 l^2 + 2 l sqrt(g) cos(a) + g and
// coherences built from cosh/sinh of Delta t/2 where
// Delta = 2 sqrt( l^2 (l^2 + 2 l sqrt(g) cos a + g) - (w + l sin a)^2 ).
// Delta is taken as a principal complex square root; xi and eta depend on it
// only through even combinations, so the branch does not matter and the
// oscillatory (negative radicand) regime needs no special casing.

#pragma once

#include "qsl/mat2.hpp"
#include "qsl/model.hpp"

namespace qsl {

// The coherence coefficient xi comes in two variants that differ in the
// frequency multiplying the sinh term:
//   paper_literal    -> 2 lambda sin(alpha)
//   oracle_validated -> 2 (omega + lambda sin(alpha))
// Only oracle_validated reproduces the master equation (it recovers the
// exp(-i w t - g t/2) coherence decay at lambda = 0); the literal variant is
// kept so the validate command can quantify the difference. Populations are
// identical in both modes.
enum class CoeffMode { paper_literal, oracle_validated };

struct PropagatorCoeffs {
    double mu = 1.0;        // population transfer, in [0, 1]
    double nu = 0.0;        // population feed, in [0, 1]
    cplx xi{1.0, 0.0};      // coherence self-coupling
    cplx eta{};             // coherence cross-coupling
    double big_gamma = 0.0; // population decay rate Gamma
    cplx big_delta{};       // coherence discriminant Delta
};

// rho(0) = |psi><psi| with |psi> = cos(theta)|0> + exp(i chi) sin(theta)|1>.
DensityMatrix initial_state(double theta, double chi);

PropagatorCoeffs coefficients(double t, const ModelParams& p,
                              CoeffMode mode = CoeffMode::oracle_validated);

// Raw application of the linear map; no output validation.
Mat2 apply_map(const PropagatorCoeffs& k, const Mat2& rho0);

DensityMatrix evolve_analytic(const DensityMatrix& rho0, double t, const ModelParams& p,
                              CoeffMode mode = CoeffMode::oracle_validated);

std::string to_string(CoeffMode mode);
CoeffMode coeff_mode_from_string(const std::string& s);  // throws DomainError

}  // namespace qsl
