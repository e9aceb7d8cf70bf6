"""Continuous-state inverse reinforcement learning."""

from ._core import (
    DivergenceError,
    DomainError,
    IRLProblem,
    IrlInfeasible,
    PolyTransition,
    classify_reward,
    compute_F,
    continuous_irl,
    covering_set,
    estimate_Z,
    estimate_beta,
    eval_basis,
    eval_basis_deriv,
    eval_phi_vector,
    exact_F,
    exact_Z,
    fourier_rho,
    gen_problem,
    min_truncation_k,
    moment_integral,
    quadrature_Z,
    required_samples,
    required_samples_irl,
    run_experiment,
    sample_next,
    truncation_error_bound,
)

__all__ = [name for name in dir() if not name.startswith("_")]
