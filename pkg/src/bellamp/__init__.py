"""Fock-space simulator and analysis toolkit for phase estimation with a
mode-squeezed path-entangled probe.

The package simulates the full two-mode interferometer (probe preparation,
phase acquisition, closing beam splitter, parity readout) on a truncated
photon-number grid, implements the matching closed-form metrology
(signal, slopes, quantum Fisher information, error bounds), and provides a
Monte Carlo harness that checks the predicted sensitivity empirically.
"""

from .elements import (
    JMoments,
    SqueezeParams,
    beam_splitter,
    j_moments,
    mode_swap_with_sign,
    parity_expectation,
    phase_shift,
    squeezed_one_photon,
    squeezed_vacuum,
)
from .errors import (
    CutoffError,
    DegeneratePointError,
    DimensionMismatchError,
    DomainError,
)
from .estimation import (
    EstimationRun,
    PhaseEstimate,
    invert_estimate,
    outcome_probabilities,
    run_experiment,
    sample_parities,
)
from .fock import (
    EPS_NORM,
    ModeCutoff,
    SingleModeState,
    TwoModeState,
    inner,
    make_fock,
    product_state,
    tail_mass,
)
from .metrology import (
    MetrologyReport,
    ProbeSpec,
    SignalBranch,
    crb_closed,
    delta_phi_parity,
    delta_phi_parity_closed,
    heisenberg_limit,
    linear_approx,
    metrology_report,
    nbar_closed,
    nbar_numeric,
    parity_signal,
    prepare_probe,
    qfi_closed,
    qfi_finite_difference,
    qfi_variance,
    r_from_nbar,
    resolve_cutoff,
    shot_noise_limit,
    signal_branch,
    signal_bruteforce,
    signal_bruteforce_sweep,
    signal_closed,
    signal_derivative_closed,
    slope_at_origin_closed,
)

__version__ = "0.1.0"

__all__ = [
    "EPS_NORM",
    "CutoffError",
    "DegeneratePointError",
    "DimensionMismatchError",
    "DomainError",
    "EstimationRun",
    "JMoments",
    "MetrologyReport",
    "ModeCutoff",
    "PhaseEstimate",
    "ProbeSpec",
    "SignalBranch",
    "SingleModeState",
    "SqueezeParams",
    "TwoModeState",
    "beam_splitter",
    "crb_closed",
    "delta_phi_parity",
    "delta_phi_parity_closed",
    "heisenberg_limit",
    "inner",
    "invert_estimate",
    "j_moments",
    "linear_approx",
    "make_fock",
    "metrology_report",
    "mode_swap_with_sign",
    "nbar_closed",
    "nbar_numeric",
    "outcome_probabilities",
    "parity_expectation",
    "parity_signal",
    "phase_shift",
    "prepare_probe",
    "product_state",
    "qfi_closed",
    "qfi_finite_difference",
    "qfi_variance",
    "r_from_nbar",
    "resolve_cutoff",
    "run_experiment",
    "sample_parities",
    "shot_noise_limit",
    "signal_branch",
    "signal_bruteforce",
    "signal_bruteforce_sweep",
    "signal_closed",
    "signal_derivative_closed",
    "slope_at_origin_closed",
    "squeezed_one_photon",
    "squeezed_vacuum",
    "tail_mass",
]
