// Fixed-step classical RK4 integration of the master equation. This is the
// brute-force oracle that adjudicates the closed-form propagator; the
// generator is time independent and smooth at the parameter scales of
// interest, so adaptive stepping would buy nothing.

#pragma once

#include <functional>
#include <vector>

#include "qsl/mat2.hpp"
#include "qsl/model.hpp"

namespace qsl {

struct Trajectory {
    std::vector<double> times;           // strictly increasing, starts at 0
    std::vector<DensityMatrix> states;   // same length
};

// One classical RK4 step; the result is re-Hermitized as (M + M+)/2 before
// validation so rounding drift cannot accumulate over long horizons.
// Throws StepRejected if an output eigenvalue falls below -1e-9 (dt too big).
DensityMatrix rk4_step(const DensityMatrix& rho, double dt, const LindbladGenerator& gen);
DensityMatrix rk4_step(const DensityMatrix& rho, double dt, const ModelParams& p);

// Streaming integration: visit(t, state) at t = 0 and after every accepted
// step; the final partial step is shortened to land exactly on t_final.
void integrate_visit(const DensityMatrix& rho0, double t_final, double dt,
                     const ModelParams& p,
                     const std::function<void(double, const DensityMatrix&)>& visit);

// Dense trajectory (one entry per step). Prefer integrate_visit in loops that
// only stream: a dt = 1e-4 horizon of 5 would otherwise retain 50k states.
Trajectory integrate(const DensityMatrix& rho0, double t_final, double dt,
                     const ModelParams& p);

}  // namespace qsl
