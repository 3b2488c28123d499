"""Two-level-atom homodyne-feedback dynamics and quantum-speed-limit-time bounds.

The compiled extension carries all functionality; this package re-exports it.
"""

from ._core import (
    ModelParams,
    PropagatorCoeffs,
    QsltResult,
    SweepConfig,
    __version__,
    closed_system_qslt,
    coefficients,
    effective_hamiltonian,
    evolve_analytic,
    feedback_hamiltonian,
    generator_spectrum_terms,
    initial_state,
    integrate,
    jump_operator,
    lindblad_rhs,
    parse_angle,
    pauli_x,
    pauli_y,
    pauli_z,
    qslt_open,
    relative_purity,
    resolve_preset,
    run_sweep,
)

__all__ = [
    "ModelParams",
    "PropagatorCoeffs",
    "QsltResult",
    "SweepConfig",
    "__version__",
    "closed_system_qslt",
    "coefficients",
    "effective_hamiltonian",
    "evolve_analytic",
    "feedback_hamiltonian",
    "generator_spectrum_terms",
    "initial_state",
    "integrate",
    "jump_operator",
    "lindblad_rhs",
    "parse_angle",
    "pauli_x",
    "pauli_y",
    "pauli_z",
    "qslt_open",
    "relative_purity",
    "resolve_preset",
    "run_sweep",
]
