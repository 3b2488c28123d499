// Physical model: parameters, Pauli/ladder operators, feedback Hamiltonian,
// and the Lindblad generator of the feedback-averaged master equation
//
//   drho/dt = -i[ w/2 sz + (s+ F + F s-)/2 , rho ] + D[ sqrt(gamma) s- - iF ] rho
//
// with F = lambda (sx sin a + sy cos a) and D[c] r = c r c+ - {c+c, r}/2.
//
// Basis convention: order (|0>, |1>) with |0> the EXCITED level, so
// sz = diag(1, -1) and s- = |1><0| (lower-left entry 1). Under this choice
// the lambda = 0 excited population decays as exp(-gamma t).

#pragma once

#include "qsl/mat2.hpp"

namespace qsl {

inline Mat2 pauli_x() { return {0.0, 1.0, 1.0, 0.0}; }
inline Mat2 pauli_y() { return {0.0, cplx(0.0, -1.0), cplx(0.0, 1.0), 0.0}; }
inline Mat2 pauli_z() { return {1.0, 0.0, 0.0, -1.0}; }
inline Mat2 sigma_plus() { return {0.0, 1.0, 0.0, 0.0}; }
inline Mat2 sigma_minus() { return {0.0, 0.0, 1.0, 0.0}; }

// All rates share inverse-time units (hbar = 1); t is dimensionless time.
struct ModelParams {
    double omega = 10.0;      // transition frequency, >= 0
    double gamma = 0.1;       // dissipation coefficient, >= 0
    double lambda_fb = 0.0;   // feedback coefficient, >= 0
    double alpha = 0.0;       // feedback direction angle, in [-pi, pi]
    double theta = 0.0;       // initial-state polar angle, in [0, pi/2]
    double chi = 0.0;         // initial-state phase, in [0, pi]

    void validate() const;  // throws DomainError naming the offending field

    static ModelParams make(double omega, double gamma, double lambda_fb,
                            double alpha, double theta, double chi);
};

// F = lambda (sx sin a + sy cos a); Hermitian by construction.
Mat2 feedback_hamiltonian(double lambda_fb, double alpha);

// H = w/2 sz + (s+ F + F s-)/2. The symmetrized feedback term is diagonal:
// it shifts the excited level by lambda sin(alpha).
Mat2 effective_hamiltonian(const ModelParams& p);

// c = sqrt(gamma) s- - iF.
Mat2 jump_operator(const ModelParams& p);

// Operators precomputed once so the right-hand side can run in tight
// quadrature/integration loops without re-deriving them per call.
class LindbladGenerator {
  public:
    explicit LindbladGenerator(const ModelParams& p);

    // drho/dt for the given state; Hermitian and traceless to rounding.
    Mat2 apply(const Mat2& rho) const {
        return cplx(0.0, -1.0) * commutator(h_, rho) + c_ * rho * c_dag_ -
               0.5 * (cdc_ * rho + rho * cdc_);
    }

    const Mat2& hamiltonian() const { return h_; }
    const Mat2& jump() const { return c_; }

  private:
    Mat2 h_, c_, c_dag_, cdc_;
};

Mat2 lindblad_rhs(const DensityMatrix& rho, const ModelParams& p);

}  // namespace qsl
