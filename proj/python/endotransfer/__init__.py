"""Endoscopic transfer factors for real Lie algebras and the Fourier transform identity."""

from ._core import (
    DEFAULT_TOLERANCE,
    REPORT_VERSION,
    CohomologyError,
    EndoscopyError,
    NonRegularError,
    Problem,
    RootDataError,
    RunReport,
    Scenario,
    ScenarioError,
    TransferFactor,
    build_problem,
    d_gh,
    d_tilde_gh,
    emit_report,
    h1_divisors,
    load_scenario,
    matching_h_orbits,
    parse_report,
    parse_scenario,
    rossmann_kernel,
    run_verify,
    stable_orbit_representatives,
    transfer_factor,
    verify_identity,
    weyl_order,
)

__all__ = [name for name in dir() if not name.startswith("_")]
