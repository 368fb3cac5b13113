"""Generalized Stieltjes / Cesaro operator toolkit (pybind11 core)."""

from ._core import (  # noqa: F401
    ConvergenceError,
    CutError,
    IntegrabilityError,
    PoleError,
    QuadratureConfig,
    TestFunction,
    UnboundedOperatorError,
    adjoint_params,
    beta,
    cesaro_apply,
    cesaro_norm,
    cesaro_spectrum_sample,
    compose_stieltjes,
    curve_sample,
    d_plus,
    digamma,
    function,
    gamma,
    hilbert_line,
    hilbert_norm,
    hilbert_plus,
    hyp2f1,
    log_gamma,
    pairing,
    phi,
    phi_conv_phi,
    phi_conv_psi,
    phi_fourier,
    phi_lp_norm,
    phi_sup_norm,
    psi,
    psi_fourier,
    psi_lp_norm,
    psi_sup_norm,
    run_suite,
    self_adjoint_interval,
    sobolev_norm,
    stieltjes_apply,
    stieltjes_line_apply,
    stieltjes_norm,
    stieltjes_of_otimes,
    stieltjes_subordinated,
    weyl_derivative,
    weyl_integral,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
