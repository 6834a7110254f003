"""Monte Carlo simulation of parity-based phase estimation.

Each measurement yields +1 or -1; the mean over many shots estimates the
signal, and inverting the signal on its central monotone branch yields a
phase estimate (method of moments -- exactly the estimator whose
linearized error the error-propagation formula describes).

Randomness comes from numpy's PCG64 via ``default_rng``; trial streams are
split deterministically with ``SeedSequence(seed).spawn(trials)``, so a
run is reproducible bit for bit across platforms regardless of how trials
are scheduled.

Predicted errors use the standard single-shot sensitivity scaled by
``1/sqrt(shots)``; reports label the scaling explicitly.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
from scipy.optimize import brentq

from .errors import DomainError
from .metrology import delta_phi_parity, signal_branch, signal_closed

# Tolerance on |S| slightly above 1 before outcome probabilities error out.
_S_SLACK = 1e-12


def outcome_probabilities(s_value: float) -> tuple[float, float]:
    """Probabilities of the +1 and -1 parity outcomes for signal ``s_value``:
    ``((1 + S)/2, (1 - S)/2)``."""
    if abs(s_value) > 1.0 + _S_SLACK:
        raise DomainError(f"signal value {s_value} outside [-1, 1]")
    p_plus = min(1.0, max(0.0, 0.5 * (1.0 + s_value)))
    return p_plus, 1.0 - p_plus


def sample_parities(r: float, phi: float, shots: int, seed) -> float:
    """Mean of ``shots`` independent parity outcomes at the closed-form
    signal value; deterministic given ``seed`` (PCG64 stream)."""
    if shots < 1:
        raise DomainError(f"shots must be >= 1, got {shots}")
    p_plus, _ = outcome_probabilities(signal_closed(r, phi))
    rng = np.random.default_rng(seed)
    n_plus = int(np.count_nonzero(rng.random(shots) < p_plus))
    return (2.0 * n_plus - shots) / shots


class PhaseEstimate(NamedTuple):
    """Inverted phase estimate; ``clamped`` flags a mean parity outside the
    branch's signal range (estimate pinned to the branch endpoint)."""

    phi: float
    clamped: bool


def invert_estimate(mean_parity: float, r: float) -> PhaseEstimate:
    """Invert the mean parity to a phase on the central monotone branch.

    Solves ``signal_closed(r, phi) = mean_parity`` by bracketing bisection
    (brentq, |phi| resolved to ~1e-13); monotone in ``mean_parity``.
    """
    branch = signal_branch(r)
    if abs(mean_parity) >= branch.s_max:
        return PhaseEstimate(phi=math.copysign(branch.phi_max, mean_parity), clamped=True)
    if mean_parity == 0.0:
        return PhaseEstimate(phi=0.0, clamped=False)
    root = brentq(
        lambda phi: signal_closed(r, phi) - mean_parity,
        -branch.phi_max,
        branch.phi_max,
        xtol=1e-13,
        rtol=8.9e-16,
    )
    return PhaseEstimate(phi=float(root), clamped=False)


@dataclass(frozen=True)
class EstimationRun:
    """Record of one Monte Carlo experiment."""

    r: float
    phi_true: float
    shots_per_trial: int
    trials: int
    seed: int
    estimates: np.ndarray
    empirical_rmse: float
    predicted_rmse: float
    clamped_trials: int = 0

    def __post_init__(self) -> None:
        if len(self.estimates) != self.trials:
            raise ValueError(
                f"{len(self.estimates)} estimates for {self.trials} trials"
            )


def run_experiment(
    r: float, phi_true: float, shots: int, trials: int, seed: int
) -> EstimationRun:
    """Repeat the sample-and-invert experiment and compare the empirical
    RMSE against the predicted single-shot error over sqrt(shots).

    ``phi_true`` must lie inside the central monotone branch.  Per-trial
    RNG streams are ``SeedSequence(seed).spawn(trials)``.
    """
    if shots < 1 or trials < 1:
        raise DomainError(f"shots and trials must be >= 1, got {shots}, {trials}")
    branch = signal_branch(r)
    if abs(phi_true) >= branch.phi_max:
        raise DomainError(
            f"phi_true={phi_true} outside the inversion branch "
            f"(-{branch.phi_max:.6g}, {branch.phi_max:.6g})"
        )
    if shots < 100:
        warnings.warn(
            f"shots={shots} is below 100; the linearized error model may not apply",
            stacklevel=2,
        )
    if trials == 1:
        warnings.warn("trials=1 gives a degenerate RMSE estimate", stacklevel=2)

    p_plus, _ = outcome_probabilities(signal_closed(r, phi_true))
    estimates = np.empty(trials, dtype=float)
    clamped = 0
    for i, child_seed in enumerate(np.random.SeedSequence(seed).spawn(trials)):
        rng = np.random.default_rng(child_seed)
        n_plus = int(np.count_nonzero(rng.random(shots) < p_plus))
        mean = (2.0 * n_plus - shots) / shots
        est = invert_estimate(mean, r)
        estimates[i] = est.phi
        clamped += est.clamped
    estimates.setflags(write=False)

    empirical = float(np.sqrt(np.mean((estimates - phi_true) ** 2)))
    predicted = delta_phi_parity(r, phi_true) / math.sqrt(shots)
    return EstimationRun(
        r=r,
        phi_true=phi_true,
        shots_per_trial=shots,
        trials=trials,
        seed=seed,
        estimates=estimates,
        empirical_rmse=empirical,
        predicted_rmse=predicted,
        clamped_trials=clamped,
    )
