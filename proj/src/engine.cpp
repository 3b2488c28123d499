#include "qsl/engine.hpp"

#include <cmath>

namespace qsl {

AnalyticEngine::AnalyticEngine(const ModelParams& p, const DensityMatrix& rho0,
                               CoeffMode mode)
    : params_(p), rho0_(rho0), mode_(mode) {
    params_.validate();
}

DensityMatrix AnalyticEngine::state_at(double t) {
    return evolve_analytic(rho0_, t, params_, mode_);
}

OracleEngine::OracleEngine(const ModelParams& p, const DensityMatrix& rho0, double dt)
    : params_(p), gen_(p), dt_(dt) {
    if (!std::isfinite(dt) || dt <= 0.0)
        throw DomainError("OracleEngine: dt must be finite and > 0");
    checkpoints_.push_back(rho0);
}

void OracleEngine::extend_to(std::size_t index) {
    while (checkpoints_.size() <= index) {
        DensityMatrix rho = checkpoints_.back();
        for (int i = 0; i < kStride; ++i) rho = rk4_step(rho, dt_, gen_);
        checkpoints_.push_back(rho);
    }
}

DensityMatrix OracleEngine::state_at(double t) {
    if (!std::isfinite(t) || t < 0.0)
        throw DomainError("OracleEngine: t must be finite and >= 0");
    const double span = dt_ * kStride;
    const auto index = static_cast<std::size_t>(std::floor(t / span * (1.0 + 1e-12)));
    extend_to(index);

    DensityMatrix rho = checkpoints_[index];
    const double t0 = span * static_cast<double>(index);
    const double ahead = t - t0;
    if (ahead <= 0.0) return rho;

    auto n_full = static_cast<long long>(std::floor(ahead / dt_ * (1.0 + 1e-12)));
    if (n_full > kStride) n_full = kStride;  // guard against rounding overshoot
    for (long long i = 0; i < n_full; ++i) rho = rk4_step(rho, dt_, gen_);
    const double remainder = ahead - dt_ * static_cast<double>(n_full);
    if (remainder > 1e-9 * dt_) rho = rk4_step(rho, remainder, gen_);
    return rho;
}

std::string to_string(Engine engine) {
    return engine == Engine::analytic ? "analytic" : "oracle";
}

Engine engine_from_string(const std::string& s) {
    if (s == "analytic") return Engine::analytic;
    if (s == "oracle") return Engine::oracle;
    throw DomainError("unknown engine '" + s + "' (expected 'analytic' or 'oracle')");
}

}  // namespace qsl
