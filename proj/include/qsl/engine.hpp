// Uniform access to rho(t) for the quadrature loops: either the closed-form
// propagator or the RK4 oracle behind one interface.

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qsl/integrator.hpp"
#include "qsl/model.hpp"
#include "qsl/propagator.hpp"

namespace qsl {

class EvolutionEngine {
  public:
    virtual ~EvolutionEngine() = default;
    virtual DensityMatrix state_at(double t) = 0;
};

class AnalyticEngine final : public EvolutionEngine {
  public:
    AnalyticEngine(const ModelParams& p, const DensityMatrix& rho0,
                   CoeffMode mode = CoeffMode::oracle_validated);
    DensityMatrix state_at(double t) override;

  private:
    ModelParams params_;
    DensityMatrix rho0_;
    CoeffMode mode_;
};

// RK4-backed engine. States after every stride_ steps are memoized, so a
// query integrates at most one stride from the nearest checkpoint at or
// before t; checkpoints depend only on (params, rho0, dt), never on the query
// order, which keeps results deterministic.
class OracleEngine final : public EvolutionEngine {
  public:
    OracleEngine(const ModelParams& p, const DensityMatrix& rho0, double dt = 1e-4);
    DensityMatrix state_at(double t) override;

  private:
    void extend_to(std::size_t index);

    ModelParams params_;
    LindbladGenerator gen_;
    double dt_;
    std::vector<DensityMatrix> checkpoints_;
    static constexpr int kStride = 128;
};

enum class Engine { analytic, oracle };

std::string to_string(Engine engine);
Engine engine_from_string(const std::string& s);  // throws DomainError

}  // namespace qsl
