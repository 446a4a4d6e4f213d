from apsumma._core import (  # noqa: F401
    APFunction,
    Term,
    best_approx_bracket,
    block_strong_mean,
    bohr_coefficient,
    check_omega_membership,
    classify,
    exact_coefficient,
    fit_modulus,
    fixture_corpus,
    geometric_sine_sum_closed,
    geometric_sine_sum_direct,
    kernel_partial_sum,
    kernel_threshold_estimate,
    omega_modulus,
    psi,
    psi_k,
    stepanov_norm,
    strong_mean,
    sweep,
    threshold_partial_sum,
    w_x_modulus,
)

__all__ = [
    "APFunction",
    "Term",
    "best_approx_bracket",
    "block_strong_mean",
    "bohr_coefficient",
    "check_omega_membership",
    "classify",
    "exact_coefficient",
    "fit_modulus",
    "fixture_corpus",
    "geometric_sine_sum_closed",
    "geometric_sine_sum_direct",
    "kernel_partial_sum",
    "kernel_threshold_estimate",
    "omega_modulus",
    "psi",
    "psi_k",
    "stepanov_norm",
    "strong_mean",
    "sweep",
    "threshold_partial_sum",
    "w_x_modulus",
]
