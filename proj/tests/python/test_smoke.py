"""Smoke tests for the python bindings."""

import math

import numpy as np
import pytest

import qsltsim as q


def test_version():
    assert q.__version__ == "0.1.0"


def test_params_validation():
    p = q.ModelParams(omega=10.0, gamma=0.1, lambda_fb=0.1, alpha=0.0,
                      theta=math.pi / 4, chi=0.0)
    assert p.omega == 10.0
    with pytest.raises(ValueError):
        q.ModelParams(omega=-1.0)
    with pytest.raises(ValueError):
        q.ModelParams(alpha=4.0)


def test_initial_state_is_pure():
    rho = q.initial_state(math.pi / 4, 0.0)
    assert rho.shape == (2, 2)
    np.testing.assert_allclose(rho, 0.5 * np.ones((2, 2)), atol=1e-15)
    assert abs(np.trace(rho @ rho).real - 1.0) < 1e-12


def test_operators():
    f = q.feedback_hamiltonian(0.5, 0.0)
    np.testing.assert_allclose(f, 0.5 * q.pauli_y(), atol=1e-15)
    p = q.ModelParams(omega=10.0, gamma=0.1, lambda_fb=0.0)
    h = q.effective_hamiltonian(p)
    np.testing.assert_allclose(h, np.diag([5.0, -5.0]), atol=1e-15)
    c = q.jump_operator(p)
    np.testing.assert_allclose(c, math.sqrt(0.1) * np.array([[0, 0], [1, 0]]),
                               atol=1e-15)


def test_lindblad_rhs_trace_free():
    p = q.ModelParams(omega=10.0, gamma=0.1, lambda_fb=0.3, alpha=math.pi / 4)
    rho = q.initial_state(math.pi / 4, 0.0)
    out = q.lindblad_rhs(rho, p)
    assert abs(np.trace(out)) < 1e-12
    np.testing.assert_allclose(out, out.conj().T, atol=1e-12)


def test_evolve_matches_integrate():
    p = q.ModelParams(omega=10.0, gamma=0.1, lambda_fb=0.3, alpha=math.pi / 4,
                      theta=math.pi / 4, chi=0.0)
    rho0 = q.initial_state(p.theta, p.chi)
    times, states = q.integrate(rho0, 2.0, 1e-3, p)
    assert times[-1] == 2.0
    analytic = q.evolve_analytic(rho0, 2.0, p)
    np.testing.assert_allclose(analytic, states[-1], atol=1e-8)


def test_coefficients_identity_at_zero():
    p = q.ModelParams(omega=10.0, gamma=0.1, lambda_fb=0.3, alpha=0.3)
    k = q.coefficients(0.0, p)
    assert k.mu == 1.0 and k.nu == 0.0
    assert k.xi == 1.0 and k.eta == 0.0
    assert k.big_gamma > 0.0


def test_qslt_open_invariants():
    p = q.ModelParams(omega=10.0, gamma=0.1, lambda_fb=0.0, alpha=0.0,
                      theta=math.pi / 4, chi=0.0)
    r = q.qslt_open(p, tau=0.0, tau_d=1.0, n_quad=2000)
    assert abs(r.tau_qsl - 0.1843367079703927) < 1e-5
    assert r.bound_ml >= r.bound_mt
    assert abs(r.bound_ml - math.sqrt(2.0) * r.bound_mt) < 1e-9
    assert 0.0 <= r.tau_qsl <= r.tau_d + 1e-9


def test_relative_purity():
    rho = q.initial_state(math.pi / 4, 0.0)
    assert q.relative_purity(rho, rho) == 1.0
    mixed = 0.5 * np.eye(2, dtype=complex)
    assert abs(q.relative_purity(np.diag([1.0, 0.0]).astype(complex), mixed) - 0.5) < 1e-12


def test_closed_system_bound():
    assert abs(q.closed_system_qslt(1.0, 1.0) - math.pi / 2) < 1e-15
    with pytest.raises(ValueError):
        q.closed_system_qslt(0.0, 1.0)


def test_sweep_roundtrip(tmp_path):
    cfg = q.resolve_preset("fig1")
    cfg.tau_steps = 3
    cfg.tau_end = 1.0
    cfg.n_quad = 100
    cfg.lambda_values = [0.0, 0.3]
    cfg.output_path = str(tmp_path / "a.csv")
    q.run_sweep(cfg)
    first = (tmp_path / "a.csv").read_bytes()
    cfg.output_path = str(tmp_path / "b.csv")
    q.run_sweep(cfg)
    second = (tmp_path / "b.csv").read_bytes()
    assert first == second
    rows = [l for l in first.decode().splitlines() if l and not l.startswith("#")]
    assert rows[0].startswith("alpha,lambda,tau,")
    assert len(rows) == 1 + 2 * 3


def test_parse_angle():
    assert q.parse_angle("pi/4") == math.pi / 4
    assert q.parse_angle("0.25") == 0.25
    with pytest.raises(ValueError):
        q.parse_angle("nope")


def test_invalid_density_matrix_rejected():
    p = q.ModelParams()
    with pytest.raises(ValueError):
        q.lindblad_rhs(np.array([[1.0, 0.5], [0.4, 0.0]], dtype=complex), p)
