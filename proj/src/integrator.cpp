#include "qsl/integrator.hpp"

#include <cmath>
#include <string>

namespace qsl {

DensityMatrix rk4_step(const DensityMatrix& rho, double dt, const LindbladGenerator& gen) {
    if (!std::isfinite(dt) || dt <= 0.0)
        throw DomainError("rk4_step: dt must be finite and > 0");
    const Mat2& r = rho.mat();
    const Mat2 k1 = gen.apply(r);
    const Mat2 k2 = gen.apply(r + (0.5 * dt) * k1);
    const Mat2 k3 = gen.apply(r + (0.5 * dt) * k2);
    const Mat2 k4 = gen.apply(r + dt * k3);
    Mat2 next = r + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    next = 0.5 * (next + adjoint(next));
    try {
        return DensityMatrix::validated(next, 1e-9);
    } catch (const PositivityViolation& e) {
        throw StepRejected(std::string("rk4_step: dt too large? ") + e.what());
    }
}

DensityMatrix rk4_step(const DensityMatrix& rho, double dt, const ModelParams& p) {
    return rk4_step(rho, dt, LindbladGenerator(p));
}

void integrate_visit(const DensityMatrix& rho0, double t_final, double dt,
                     const ModelParams& p,
                     const std::function<void(double, const DensityMatrix&)>& visit) {
    if (!std::isfinite(t_final) || t_final < 0.0)
        throw DomainError("integrate: t_final must be finite and >= 0");
    if (!std::isfinite(dt) || dt <= 0.0)
        throw DomainError("integrate: dt must be finite and > 0");

    const LindbladGenerator gen(p);
    DensityMatrix rho = rho0;
    visit(0.0, rho);
    if (t_final == 0.0) return;

    // Relative slack so horizons that are an integer number of steps up to
    // rounding do not spawn a spurious sliver step.
    const double quotient = t_final / dt;
    const auto n_full = static_cast<long long>(std::floor(quotient * (1.0 + 1e-12)));
    const double remainder = t_final - dt * static_cast<double>(n_full);
    const bool partial = remainder > 1e-9 * dt;

    for (long long i = 1; i <= n_full; ++i) {
        try {
            rho = rk4_step(rho, dt, gen);
        } catch (const StepRejected& e) {
            throw StepRejected(std::string(e.what()) + " at t=" +
                               std::to_string(dt * static_cast<double>(i)));
        }
        const bool last = (i == n_full) && !partial;
        visit(last ? t_final : dt * static_cast<double>(i), rho);
    }
    if (partial) {
        rho = rk4_step(rho, remainder, gen);
        visit(t_final, rho);
    }
}

Trajectory integrate(const DensityMatrix& rho0, double t_final, double dt,
                     const ModelParams& p) {
    Trajectory traj;
    integrate_visit(rho0, t_final, dt, p, [&](double t, const DensityMatrix& state) {
        traj.times.push_back(t);
        traj.states.push_back(state);
    });
    return traj;
}

}  // namespace qsl
