"""Closed-form metrology results and their brute-force counterparts.

The probe is a path-entangled single photon whose two modes are then
squeezed separately:

    |probe> = (|P1>|P0> + i |P0>|P1>) / sqrt(2)

with ``P0``/``P1`` the squeezed vacuum and squeezed single photon.  Its
mean photon number is ``nbar = 1 + 4 sinh(r)**2``, so squeezing strength
may be given as either ``r`` or ``nbar``.

Phase-axis convention (the one place a silent sign error can hide): the
measurement signal ``S(r, phi)`` is the parity expectation on mode b after
the closing beam splitter, evaluated at differential phase ``phi + pi/2``.
The extra ``pi/2`` puts the steep zero crossing at ``phi = 0``, and both
:func:`signal_closed` and :func:`signal_bruteforce` share this axis.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import NamedTuple

import numpy as np

from . import sectors
from .elements import (
    SqueezeParams,
    beam_splitter,
    j_moments,
    parity_expectation,
    phase_shift,
    squeezed_one_photon,
    squeezed_vacuum,
)
from .errors import DegeneratePointError, DomainError
from .fock import ModeCutoff, TwoModeState, tail_mass

# Adaptive cutoff search: geometric growth between these bounds.
_CUTOFF_START = 8
_CUTOFF_LIMIT = 1 << 14

# Below this slope magnitude the error-propagation ratio is treated as
# degenerate (a signal extremum).
_SLOPE_FLOOR = 1e-12


@dataclass(frozen=True)
class ProbeSpec:
    """Probe configuration: squeezing, truncation tolerance, and (after
    adaptive selection) the per-mode cutoff actually used."""

    r: float
    theta: float = 0.0
    epsilon_tail: float = 1e-10
    resolved_cutoff: ModeCutoff | None = None

    def __post_init__(self) -> None:
        if self.r < 0:
            raise DomainError(f"squeezing strength must be >= 0, got {self.r}")
        if not (0.0 < self.epsilon_tail <= 1e-4):
            raise DomainError(
                f"epsilon_tail must lie in (0, 1e-4], got {self.epsilon_tail}"
            )


@dataclass(frozen=True)
class MetrologyReport:
    """Closed-form and numeric figures of merit for one probe configuration."""

    r: float
    nbar: float
    nbar_numeric: float
    qfi: float
    qfi_finite_diff: float
    crb_delta_phi: float
    slope_at_origin: float
    delta_phi_parity: float
    tail_mass: float
    resolved_cutoff: int

    def __post_init__(self) -> None:
        if self.nbar < 1.0:
            raise ValueError(f"probe mean photon number {self.nbar} below 1")
        if self.crb_delta_phi > self.delta_phi_parity * (1 + 1e-9):
            raise ValueError(
                "Cramer-Rao bound exceeds the parity sensitivity: "
                f"{self.crb_delta_phi} > {self.delta_phi_parity}"
            )


# ---------------------------------------------------------------------------
# closed forms
# ---------------------------------------------------------------------------


def nbar_closed(r: float) -> float:
    """Mean photon number of the probe, ``1 + 4 sinh(r)**2``."""
    if r < 0:
        raise DomainError(f"squeezing strength must be >= 0, got {r}")
    return 1.0 + 4.0 * math.sinh(r) ** 2


def r_from_nbar(nbar: float) -> float:
    """Inverse of :func:`nbar_closed`: ``asinh(sqrt((nbar - 1)/4))``."""
    if nbar < 1.0:
        raise DomainError(f"nbar must be >= 1 (probe carries the seed photon), got {nbar}")
    return math.asinh(math.sqrt((nbar - 1.0) / 4.0))


def crb_closed(nbar: float) -> float:
    """Cramer-Rao phase-error floor of this probe, ``2/sqrt(3 nbar**2 + 6 nbar - 5)``."""
    if nbar < 1.0:
        raise DomainError(f"nbar must be >= 1, got {nbar}")
    return 2.0 / math.sqrt(3.0 * nbar**2 + 6.0 * nbar - 5.0)


def signal_closed(r: float, phi: float) -> float:
    """Parity signal S(r, phi): odd and 2*pi-periodic in ``phi``.

    ``S = sin(phi) cosh(2r) sech(r)**6 / (1 - 2 cos(2 phi) tanh(r)**2
    + tanh(r)**4)**1.5``; reduces to ``sin(phi)`` at ``r = 0``.
    """
    t_sq = math.tanh(r) ** 2
    denom = 1.0 - 2.0 * math.cos(2.0 * phi) * t_sq + t_sq * t_sq
    amp = math.cosh(2.0 * r) / math.cosh(r) ** 6
    return math.sin(phi) * amp / denom**1.5


def signal_derivative_closed(r: float, phi: float) -> float:
    """Analytic d S / d phi (hand-derived quotient rule, no finite
    differences, so no noise amplification near the operating points)."""
    t_sq = math.tanh(r) ** 2
    denom = 1.0 - 2.0 * math.cos(2.0 * phi) * t_sq + t_sq * t_sq
    d_denom = 4.0 * math.sin(2.0 * phi) * t_sq
    amp = math.cosh(2.0 * r) / math.cosh(r) ** 6
    return amp * (math.cos(phi) * denom - 1.5 * math.sin(phi) * d_denom) / denom**2.5


def slope_at_origin_closed(r: float) -> float:
    """Signal slope at the operating point, ``(nbar + 1)/2`` (= cosh 2r)."""
    return 0.5 * (nbar_closed(r) + 1.0)


def linear_approx(r: float, phi: float, k: int = 0) -> float:
    """First-order signal model near the k-th zero crossing:
    ``((nbar + 1)/2) (phi - k pi)``."""
    return slope_at_origin_closed(r) * (phi - k * math.pi)


def delta_phi_parity_closed(nbar: float) -> float:
    """Single-shot phase error of the parity readout at the operating
    point, ``2/(nbar + 1)``."""
    if nbar < 1.0:
        raise DomainError(f"nbar must be >= 1, got {nbar}")
    return 2.0 / (nbar + 1.0)


def delta_phi_parity(r: float, phi: float) -> float:
    """Error-propagation phase error ``sqrt(1 - S**2)/|dS/dphi|``.

    Parity squares to the identity, so the signal variance is exactly
    ``1 - S**2``.  Raises :class:`DegeneratePointError` at signal extrema
    where the slope vanishes and the ratio diverges.
    """
    slope = signal_derivative_closed(r, phi)
    if abs(slope) < _SLOPE_FLOOR:
        raise DegeneratePointError(
            f"signal slope {slope:.3e} at phi={phi} is below {_SLOPE_FLOOR}; "
            "error propagation diverges at a signal extremum"
        )
    s_val = signal_closed(r, phi)
    return math.sqrt(max(0.0, 1.0 - s_val * s_val)) / abs(slope)


def shot_noise_limit(nbar: float) -> float:
    """Classical-light floor ``1/sqrt(nbar)``."""
    if nbar <= 0:
        raise DomainError(f"nbar must be > 0, got {nbar}")
    return 1.0 / math.sqrt(nbar)


def heisenberg_limit(n: float) -> float:
    """Linear-interaction quantum floor ``1/n``."""
    if n <= 0:
        raise DomainError(f"photon number must be > 0, got {n}")
    return 1.0 / n


class SignalBranch(NamedTuple):
    """Central monotone branch of the signal: first extremum and its height."""

    phi_max: float
    s_max: float


def signal_branch(r: float) -> SignalBranch:
    """Extent of the monotone branch around ``phi = 0``.

    The slope factors as ``cos(phi) ((1-t**2)**2 - 8 t**2 sin(phi)**2)``
    with ``t = tanh(r)``, so the first extremum sits at
    ``asin((1-t**2)/(2 sqrt(2) t))`` once that argument drops below 1,
    and at ``pi/2`` otherwise.
    """
    t = math.tanh(r)
    if t > 0.0:
        arg = (1.0 - t * t) / (2.0 * math.sqrt(2.0) * t)
        phi_max = math.asin(arg) if arg < 1.0 else math.pi / 2.0
    else:
        phi_max = math.pi / 2.0
    return SignalBranch(phi_max=phi_max, s_max=signal_closed(r, phi_max))


# ---------------------------------------------------------------------------
# brute-force state evolution
# ---------------------------------------------------------------------------


def resolve_cutoff(spec: ProbeSpec) -> ProbeSpec:
    """Pick the per-mode cutoff adaptively: grow geometrically until the
    probe's truncation tail drops below ``spec.epsilon_tail``."""
    if spec.resolved_cutoff is not None:
        return spec
    params = SqueezeParams(spec.r, spec.theta)
    n_max = _CUTOFF_START
    while n_max <= _CUTOFF_LIMIT:
        cutoff = ModeCutoff(n_max)
        t0 = tail_mass(squeezed_vacuum(params, cutoff))
        t1 = tail_mass(squeezed_one_photon(params, cutoff))
        probe_tail = 1.0 - (1.0 - t0) * (1.0 - t1)
        if probe_tail < spec.epsilon_tail:
            return replace(spec, resolved_cutoff=cutoff)
        n_max *= 2
    raise DomainError(
        f"cutoff above {_CUTOFF_LIMIT} needed for r={spec.r}, "
        f"epsilon_tail={spec.epsilon_tail}; use the closed forms at this scale"
    )


def prepare_probe(spec: ProbeSpec) -> TwoModeState:
    """Assemble the probe from the squeezed-mode coefficient series.

    Equivalent to sending |1, 0> through the opening beam splitter and
    squeezing each output mode; the two constructions agree to 1e-10 and
    the pipeline route is exercised by the verification suite.
    """
    spec = resolve_cutoff(spec)
    params = SqueezeParams(spec.r, spec.theta)
    phi0 = squeezed_vacuum(params, spec.resolved_cutoff).amps
    phi1 = squeezed_one_photon(params, spec.resolved_cutoff).amps
    grid = (np.outer(phi1, phi0) + 1j * np.outer(phi0, phi1)) / math.sqrt(2.0)
    return TwoModeState(spec.resolved_cutoff, grid)


def nbar_numeric(probe: TwoModeState) -> float:
    """Number-operator expectation ``<n_a + n_b>`` on the retained grid."""
    return 2.0 * j_moments(probe).j0


def parity_signal(probe: TwoModeState, phi: float, sum_phase: float = 0.0) -> float:
    """Run the measurement pipeline on a prepared probe.

    Applies the differential phase ``phi + pi/2`` (the signal's phase-axis
    convention) split symmetrically across the modes, closes the
    interferometer with the beam splitter, and returns the mode-b parity.
    The result depends only on the differential phase; ``sum_phase`` exists
    to exercise that invariance.
    """
    diff = phi + math.pi / 2.0
    shifted = phase_shift(probe, 0.5 * (sum_phase + diff), 0.5 * (sum_phase - diff))
    return parity_expectation(beam_splitter(shifted), mode="b")


def signal_bruteforce(
    r: float,
    phi: float,
    spec: ProbeSpec | None = None,
    probe: TwoModeState | None = None,
) -> float:
    """Parity signal by full state evolution; must reproduce
    :func:`signal_closed` within the truncation budget.

    Pass a prepared ``probe`` when sweeping many phases so the probe and
    the cached beam-splitter sectors are reused.
    """
    if probe is None:
        if spec is None:
            spec = ProbeSpec(r=r)
        elif spec.r != r:
            raise ValueError(f"spec.r={spec.r} does not match r={r}")
        probe = prepare_probe(spec)
    return parity_signal(probe, phi)


def signal_bruteforce_sweep(
    r: float,
    phis: np.ndarray,
    spec: ProbeSpec | None = None,
) -> np.ndarray:
    """Brute-force parity signal over a whole phase grid in one sector sweep.

    Equivalent to mapping :func:`signal_bruteforce` over ``phis`` but the
    probe's beam-splitter sectors are traversed once, with all phase
    points stacked per sector.  This is what makes large-cutoff sweeps
    (mean photon numbers of tens) tractable without caching gigabyte-scale
    unitary tables.
    """
    if spec is None:
        spec = ProbeSpec(r=r)
    elif spec.r != r:
        raise ValueError(f"spec.r={spec.r} does not match r={r}")
    probe = prepare_probe(spec)
    n_max = probe.cutoff.n_max
    phis = np.asarray(phis, dtype=float)
    # Differential phase phi + pi/2 split symmetrically (sum phase 0).
    half_diff = 0.5 * (phis + math.pi / 2.0)

    table = sectors.bs_sector_table(n_max)
    sector_iter = table if table is not None else sectors.iter_bs_sectors(n_max)
    signal = np.zeros(phis.shape, dtype=float)
    for total, unitary in enumerate(sector_iter):
        lo, hi = sectors.sector_bounds(total, n_max)
        ns = np.arange(lo, hi + 1)
        ms = total - ns
        base = probe.amps[ns, ms]
        # e^{i(phi_a n + phi_b m)} with phi_a = +half_diff, phi_b = -half_diff
        phases = np.exp(1j * np.outer(ns - ms, half_diff))
        stacked = unitary @ (base[:, None] * phases)
        signs = 1.0 - 2.0 * (ms % 2)
        signal += signs @ (np.abs(stacked) ** 2)
    return signal


# ---------------------------------------------------------------------------
# quantum Fisher information
# ---------------------------------------------------------------------------


def qfi_variance(probe: TwoModeState) -> float:
    """QFI of the differential phase via the generator variance,
    ``4 (  <J3**2> - <J3>**2 )``."""
    moments = j_moments(probe)
    return 4.0 * (moments.j3_sq - moments.j3**2)


def qfi_finite_difference(probe: TwoModeState, h: float = 1e-4, phi: float = 0.0) -> float:
    """QFI from the overlap definition with a central-difference state
    derivative: ``4 (<dpsi|dpsi> - |<dpsi|psi>|**2)``.

    The result is independent of the evaluation phase ``phi``; exposing it
    lets tests check exactly that.
    """
    if not (1e-6 <= h <= 1e-2):
        raise DomainError(f"step h must lie in [1e-6, 1e-2], got {h}")

    def at(x: float) -> np.ndarray:
        return phase_shift(probe, 0.5 * x, -0.5 * x).amps

    psi = at(phi)
    dpsi = (at(phi + 0.5 * h) - at(phi - 0.5 * h)) / h
    grad_sq = float(np.sum(np.abs(dpsi) ** 2))
    overlap = complex(np.vdot(dpsi, psi))
    return 4.0 * (grad_sq - abs(overlap) ** 2)


def qfi_closed(nbar: float) -> float:
    """Closed-form QFI ``(3 nbar**2 + 6 nbar - 5)/4`` (inverse squared CRB)."""
    if nbar < 1.0:
        raise DomainError(f"nbar must be >= 1, got {nbar}")
    return (3.0 * nbar**2 + 6.0 * nbar - 5.0) / 4.0


# ---------------------------------------------------------------------------
# report
# ---------------------------------------------------------------------------


def metrology_report(spec: ProbeSpec) -> MetrologyReport:
    """Build the full figure-of-merit report for one probe configuration."""
    spec = resolve_cutoff(spec)
    probe = prepare_probe(spec)
    nbar = nbar_closed(spec.r)
    return MetrologyReport(
        r=spec.r,
        nbar=nbar,
        nbar_numeric=nbar_numeric(probe),
        qfi=qfi_variance(probe),
        qfi_finite_diff=qfi_finite_difference(probe),
        crb_delta_phi=crb_closed(nbar),
        slope_at_origin=slope_at_origin_closed(spec.r),
        delta_phi_parity=delta_phi_parity_closed(nbar),
        tail_mass=tail_mass(probe),
        resolved_cutoff=spec.resolved_cutoff.n_max,
    )
