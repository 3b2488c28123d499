#include "qsl/model.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace qsl {

namespace {

constexpr double kPi = std::numbers::pi;

void require(bool ok, const char* what) {
    if (!ok) throw DomainError(std::string("ModelParams: ") + what);
}

}  // namespace

void ModelParams::validate() const {
    require(std::isfinite(omega) && omega >= 0.0, "omega must be finite and >= 0");
    require(std::isfinite(gamma) && gamma >= 0.0, "gamma must be finite and >= 0");
    require(std::isfinite(lambda_fb) && lambda_fb >= 0.0,
            "lambda_fb must be finite and >= 0");
    require(std::isfinite(alpha) && alpha >= -kPi && alpha <= kPi,
            "alpha must lie in [-pi, pi]");
    require(std::isfinite(theta) && theta >= 0.0 && theta <= 0.5 * kPi,
            "theta must lie in [0, pi/2]");
    require(std::isfinite(chi) && chi >= 0.0 && chi <= kPi, "chi must lie in [0, pi]");
}

ModelParams ModelParams::make(double omega, double gamma, double lambda_fb,
                              double alpha, double theta, double chi) {
    ModelParams p{omega, gamma, lambda_fb, alpha, theta, chi};
    p.validate();
    return p;
}

Mat2 feedback_hamiltonian(double lambda_fb, double alpha) {
    if (!std::isfinite(alpha) || alpha < -kPi || alpha > kPi)
        throw DomainError("feedback_hamiltonian: alpha must lie in [-pi, pi]");
    if (!std::isfinite(lambda_fb) || lambda_fb < 0.0)
        throw DomainError("feedback_hamiltonian: lambda_fb must be finite and >= 0");
    return lambda_fb * std::sin(alpha) * pauli_x() +
           lambda_fb * std::cos(alpha) * pauli_y();
}

Mat2 effective_hamiltonian(const ModelParams& p) {
    p.validate();
    const Mat2 f = feedback_hamiltonian(p.lambda_fb, p.alpha);
    const Mat2 h =
        0.5 * p.omega * pauli_z() + 0.5 * (sigma_plus() * f + f * sigma_minus());
    if (hermiticity_defect(h) > 1e-12)
        throw NumericError("effective_hamiltonian: lost Hermiticity");
    return h;
}

Mat2 jump_operator(const ModelParams& p) {
    p.validate();
    return std::sqrt(p.gamma) * sigma_minus() -
           cplx(0.0, 1.0) * feedback_hamiltonian(p.lambda_fb, p.alpha);
}

LindbladGenerator::LindbladGenerator(const ModelParams& p)
    : h_(effective_hamiltonian(p)),
      c_(jump_operator(p)),
      c_dag_(adjoint(c_)),
      cdc_(c_dag_ * c_) {}

Mat2 lindblad_rhs(const DensityMatrix& rho, const ModelParams& p) {
    return LindbladGenerator(p).apply(rho.mat());
}

}  // namespace qsl
