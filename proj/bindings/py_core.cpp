// Python bindings: density matrices cross the boundary as 2x2 complex128
// numpy arrays; everything else maps to small value classes.

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>

#include "qsl/engine.hpp"
#include "qsl/integrator.hpp"
#include "qsl/model.hpp"
#include "qsl/propagator.hpp"
#include "qsl/qslt.hpp"
#include "qsl/sweep.hpp"

namespace py = pybind11;

namespace {

using qsl::cplx;

using ComplexArray = py::array_t<cplx, py::array::c_style | py::array::forcecast>;

qsl::Mat2 mat_from_array(const ComplexArray& a) {
    if (a.ndim() != 2 || a.shape(0) != 2 || a.shape(1) != 2)
        throw qsl::DomainError("expected a 2x2 complex array");
    const auto r = a.unchecked<2>();
    return {r(0, 0), r(0, 1), r(1, 0), r(1, 1)};
}

py::array_t<cplx> mat_to_array(const qsl::Mat2& m) {
    py::array_t<cplx> out({2, 2});
    auto r = out.mutable_unchecked<2>();
    r(0, 0) = m.m00;
    r(0, 1) = m.m01;
    r(1, 0) = m.m10;
    r(1, 1) = m.m11;
    return out;
}

qsl::DensityMatrix density_from_array(const ComplexArray& a, double positivity_tol) {
    return qsl::DensityMatrix::validated(mat_from_array(a), positivity_tol);
}

qsl::CoeffMode mode_arg(const std::string& s) { return qsl::coeff_mode_from_string(s); }

qsl::QsltResult qslt_open_py(const qsl::ModelParams& p, double tau, double tau_d,
                             int n_quad, const std::string& engine,
                             const std::string& mode, double oracle_dt) {
    p.validate();
    const qsl::DensityMatrix rho0 = qsl::initial_state(p.theta, p.chi);
    if (qsl::engine_from_string(engine) == qsl::Engine::oracle) {
        qsl::OracleEngine eng(p, rho0, oracle_dt);
        return qsl::qslt_open(p, tau, tau_d, n_quad, eng);
    }
    qsl::AnalyticEngine eng(p, rho0, mode_arg(mode));
    return qsl::qslt_open(p, tau, tau_d, n_quad, eng);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Two-level-atom homodyne-feedback dynamics and "
              "quantum-speed-limit-time bounds";
    m.attr("__version__") = "0.1.0";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const qsl::DomainError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const qsl::IoError& e) {
            PyErr_SetString(PyExc_OSError, e.what());
        } catch (const qsl::Error& e) {
            PyErr_SetString(PyExc_RuntimeError, e.what());
        }
    });

    py::class_<qsl::ModelParams>(m, "ModelParams")
        .def(py::init([](double omega, double gamma, double lambda_fb, double alpha,
                         double theta, double chi) {
                 return qsl::ModelParams::make(omega, gamma, lambda_fb, alpha, theta,
                                               chi);
             }),
             py::arg("omega") = 10.0, py::arg("gamma") = 0.1,
             py::arg("lambda_fb") = 0.0, py::arg("alpha") = 0.0,
             py::arg("theta") = 0.0, py::arg("chi") = 0.0)
        .def_readwrite("omega", &qsl::ModelParams::omega)
        .def_readwrite("gamma", &qsl::ModelParams::gamma)
        .def_readwrite("lambda_fb", &qsl::ModelParams::lambda_fb)
        .def_readwrite("alpha", &qsl::ModelParams::alpha)
        .def_readwrite("theta", &qsl::ModelParams::theta)
        .def_readwrite("chi", &qsl::ModelParams::chi)
        .def("validate", &qsl::ModelParams::validate)
        .def("__repr__", [](const qsl::ModelParams& p) {
            return "ModelParams(omega=" + qsl::format_double(p.omega) +
                   ", gamma=" + qsl::format_double(p.gamma) +
                   ", lambda_fb=" + qsl::format_double(p.lambda_fb) +
                   ", alpha=" + qsl::format_double(p.alpha) +
                   ", theta=" + qsl::format_double(p.theta) +
                   ", chi=" + qsl::format_double(p.chi) + ")";
        });

    py::class_<qsl::PropagatorCoeffs>(m, "PropagatorCoeffs")
        .def_readonly("mu", &qsl::PropagatorCoeffs::mu)
        .def_readonly("nu", &qsl::PropagatorCoeffs::nu)
        .def_readonly("xi", &qsl::PropagatorCoeffs::xi)
        .def_readonly("eta", &qsl::PropagatorCoeffs::eta)
        .def_readonly("big_gamma", &qsl::PropagatorCoeffs::big_gamma)
        .def_readonly("big_delta", &qsl::PropagatorCoeffs::big_delta);

    py::class_<qsl::QsltResult>(m, "QsltResult")
        .def_readonly("tau", &qsl::QsltResult::tau)
        .def_readonly("tau_d", &qsl::QsltResult::tau_d)
        .def_readonly("rel_purity", &qsl::QsltResult::rel_purity)
        .def_readonly("ml_denominator", &qsl::QsltResult::ml_denominator)
        .def_readonly("mt_denominator", &qsl::QsltResult::mt_denominator)
        .def_readonly("bound_ml", &qsl::QsltResult::bound_ml)
        .def_readonly("bound_mt", &qsl::QsltResult::bound_mt)
        .def_readonly("tau_qsl", &qsl::QsltResult::tau_qsl)
        .def("__repr__", [](const qsl::QsltResult& q) {
            return "QsltResult(tau=" + qsl::format_double(q.tau) +
                   ", tau_d=" + qsl::format_double(q.tau_d) +
                   ", tau_qsl=" + qsl::format_double(q.tau_qsl) + ")";
        });

    py::class_<qsl::SweepConfig>(m, "SweepConfig")
        .def(py::init<>())
        .def_readwrite("params", &qsl::SweepConfig::params)
        .def_readwrite("lambda_values", &qsl::SweepConfig::lambda_values)
        .def_readwrite("tau_start", &qsl::SweepConfig::tau_start)
        .def_readwrite("tau_end", &qsl::SweepConfig::tau_end)
        .def_readwrite("tau_steps", &qsl::SweepConfig::tau_steps)
        .def_readwrite("tau_d", &qsl::SweepConfig::tau_d)
        .def_readwrite("n_quad", &qsl::SweepConfig::n_quad)
        .def_readwrite("oracle_dt", &qsl::SweepConfig::oracle_dt)
        .def_readwrite("output_path", &qsl::SweepConfig::output_path)
        .def_property(
            "engine",
            [](const qsl::SweepConfig& c) { return qsl::to_string(c.engine); },
            [](qsl::SweepConfig& c, const std::string& s) {
                c.engine = qsl::engine_from_string(s);
            })
        .def_property(
            "coeff_mode",
            [](const qsl::SweepConfig& c) { return qsl::to_string(c.coeff_mode); },
            [](qsl::SweepConfig& c, const std::string& s) {
                c.coeff_mode = qsl::coeff_mode_from_string(s);
            });

    m.def("initial_state",
          [](double theta, double chi) {
              return mat_to_array(qsl::initial_state(theta, chi).mat());
          },
          py::arg("theta"), py::arg("chi"),
          "Pure state cos(theta)|0> + exp(i chi) sin(theta)|1> as a density matrix");

    m.def("pauli_x", [] { return mat_to_array(qsl::pauli_x()); });
    m.def("pauli_y", [] { return mat_to_array(qsl::pauli_y()); });
    m.def("pauli_z", [] { return mat_to_array(qsl::pauli_z()); });

    m.def("feedback_hamiltonian",
          [](double lambda_fb, double alpha) {
              return mat_to_array(qsl::feedback_hamiltonian(lambda_fb, alpha));
          },
          py::arg("lambda_fb"), py::arg("alpha"));

    m.def("effective_hamiltonian",
          [](const qsl::ModelParams& p) {
              return mat_to_array(qsl::effective_hamiltonian(p));
          },
          py::arg("params"));

    m.def("jump_operator",
          [](const qsl::ModelParams& p) { return mat_to_array(qsl::jump_operator(p)); },
          py::arg("params"));

    m.def("lindblad_rhs",
          [](const ComplexArray& rho, const qsl::ModelParams& p) {
              return mat_to_array(qsl::lindblad_rhs(density_from_array(rho, 1e-9), p));
          },
          py::arg("rho"), py::arg("params"),
          "Master-equation right-hand side at the given state");

    m.def("coefficients",
          [](double t, const qsl::ModelParams& p, const std::string& mode) {
              return qsl::coefficients(t, p, mode_arg(mode));
          },
          py::arg("t"), py::arg("params"), py::arg("mode") = "oracle-validated");

    m.def("evolve_analytic",
          [](const ComplexArray& rho0, double t, const qsl::ModelParams& p,
             const std::string& mode) {
              return mat_to_array(
                  qsl::evolve_analytic(density_from_array(rho0, 1e-9), t, p,
                                       mode_arg(mode))
                      .mat());
          },
          py::arg("rho0"), py::arg("t"), py::arg("params"),
          py::arg("mode") = "oracle-validated");

    m.def("integrate",
          [](const ComplexArray& rho0, double t_final, double dt,
             const qsl::ModelParams& p) {
              const qsl::Trajectory traj =
                  qsl::integrate(density_from_array(rho0, 1e-9), t_final, dt, p);
              const auto n = static_cast<py::ssize_t>(traj.times.size());
              py::array_t<double> times(n);
              py::array_t<cplx> states({n, py::ssize_t(2), py::ssize_t(2)});
              auto tr = times.mutable_unchecked<1>();
              auto sr = states.mutable_unchecked<3>();
              for (py::ssize_t i = 0; i < n; ++i) {
                  tr(i) = traj.times[static_cast<std::size_t>(i)];
                  const qsl::Mat2& s = traj.states[static_cast<std::size_t>(i)].mat();
                  sr(i, 0, 0) = s.m00;
                  sr(i, 0, 1) = s.m01;
                  sr(i, 1, 0) = s.m10;
                  sr(i, 1, 1) = s.m11;
              }
              return py::make_tuple(times, states);
          },
          py::arg("rho0"), py::arg("t_final"), py::arg("dt"), py::arg("params"),
          "Fixed-step RK4 trajectory; returns (times, states)");

    m.def("relative_purity",
          [](const ComplexArray& rho_tau, const ComplexArray& rho_target) {
              return qsl::relative_purity(density_from_array(rho_tau, 1e-9),
                                          density_from_array(rho_target, 1e-9));
          },
          py::arg("rho_tau"), py::arg("rho_target"));

    m.def("closed_system_qslt", &qsl::closed_system_qslt, py::arg("delta_e"),
          py::arg("mean_e"));

    m.def("generator_spectrum_terms",
          [](const ComplexArray& rho_t, const ComplexArray& rho_tau,
             const qsl::ModelParams& p) {
              return qsl::generator_spectrum_terms(density_from_array(rho_t, 1e-9),
                                                   density_from_array(rho_tau, 1e-9), p);
          },
          py::arg("rho_t"), py::arg("rho_tau"), py::arg("params"));

    m.def("qslt_open", &qslt_open_py, py::arg("params"), py::arg("tau"),
          py::arg("tau_d"), py::arg("n_quad") = 2000, py::arg("engine") = "analytic",
          py::arg("mode") = "oracle-validated", py::arg("oracle_dt") = 1e-4,
          "Combined quantum-speed-limit-time bound over [tau, tau + tau_d]");

    m.def("resolve_preset", &qsl::resolve_preset, py::arg("name"),
          "Sweep configuration for fig1/fig2/fig3");

    m.def("run_sweep", &qsl::run_sweep_to_file, py::arg("config"),
          "Run the sweep and write the CSV to config.output_path");

    m.def("parse_angle", &qsl::parse_angle, py::arg("token"),
          "Parse decimal radians or 'pi/4'-style tokens");
}
