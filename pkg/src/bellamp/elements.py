"""Building blocks of the interferometer.

Squeezers are realized as explicit photon-number coefficient series (a
ratio recurrence, so no factorial ever overflows), the beam splitter as
per-sector SU(2) rotations, phase shifts and the parity observable as
diagonal operations, and the signed mode swap as the permutation identity
used to reduce the measurement pipeline.

All operations are pure functions on immutable states.  Sector sweeps run
in a fixed ascending order, so results do not depend on scheduling.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal, NamedTuple

import numpy as np

from . import sectors
from .errors import DomainError
from .fock import ModeCutoff, SingleModeState, TwoModeState, as_cutoff

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class SqueezeParams:
    """Single-mode squeezer parameters: strength ``r >= 0`` and phase
    ``theta``, normalized to ``[0, 2*pi)``."""

    r: float
    theta: float = 0.0

    def __post_init__(self) -> None:
        if self.r < 0:
            raise DomainError(f"squeezing strength must be >= 0, got {self.r}")
        object.__setattr__(self, "r", float(self.r))
        object.__setattr__(self, "theta", float(self.theta) % TWO_PI)


def _even_coefficients(p: SqueezeParams, n_pairs: int) -> np.ndarray:
    """Coefficients C_0..C_{n_pairs} of the squeezed vacuum on |2n>.

    Built by the ratio recurrence
    ``C_{n+1}/C_n = -exp(i theta) tanh(r) sqrt(2n+1)/sqrt(2n+2)``,
    whose magnitude strictly decreases, so it is stable at any ``r``.
    """
    coeffs = np.zeros(n_pairs + 1, dtype=np.complex128)
    coeffs[0] = math.sqrt(1.0 / math.cosh(p.r))
    if n_pairs == 0:
        return coeffs
    n = np.arange(n_pairs, dtype=float)
    ratio = -np.exp(1j * p.theta) * math.tanh(p.r) * np.sqrt(
        (2.0 * n + 1.0) / (2.0 * n + 2.0)
    )
    coeffs[1:] = coeffs[0] * np.cumprod(ratio)
    return coeffs


def squeezed_vacuum(p: SqueezeParams, cutoff: ModeCutoff | int) -> SingleModeState:
    """Squeezed vacuum: support on even photon numbers only."""
    cutoff = as_cutoff(cutoff)
    amps = np.zeros(cutoff.dim, dtype=np.complex128)
    n_pairs = cutoff.n_max // 2
    amps[0 : 2 * n_pairs + 1 : 2] = _even_coefficients(p, n_pairs)
    return SingleModeState(cutoff, amps)


def squeezed_one_photon(p: SqueezeParams, cutoff: ModeCutoff | int) -> SingleModeState:
    """Squeezed single photon: support on odd photon numbers only,
    amplitude ``sech(r) sqrt(2m+1) C_m`` on ``|2m+1>``."""
    cutoff = as_cutoff(cutoff)
    amps = np.zeros(cutoff.dim, dtype=np.complex128)
    n_pairs = (cutoff.n_max - 1) // 2
    m = np.arange(n_pairs + 1, dtype=float)
    amps[1 : 2 * n_pairs + 2 : 2] = (
        (1.0 / math.cosh(p.r)) * np.sqrt(2.0 * m + 1.0) * _even_coefficients(p, n_pairs)
    )
    return SingleModeState(cutoff, amps)


def beam_splitter(s: TwoModeState) -> TwoModeState:
    """50:50 beam splitter, generator ``(pi/4)(a+ b + b+ a)``.

    Acts as an exact SU(2) rotation within each complete total-photon
    sector; corner sectors use the cutoff-restricted generator, so the
    operation is exactly unitary on the truncated grid (see
    :mod:`bellamp.sectors`).
    """
    return TwoModeState(s.cutoff, sectors.apply_bs(s.amps))


def phase_shift(s: TwoModeState, phi_a: float, phi_b: float) -> TwoModeState:
    """Per-mode phase shifts: ``c_nm -> exp(i(phi_a n + phi_b m)) c_nm``."""
    n = np.arange(s.cutoff.dim, dtype=float)
    phases = np.exp(1j * phi_a * n)[:, None] * np.exp(1j * phi_b * n)[None, :]
    return TwoModeState(s.cutoff, s.amps * phases)


def parity_expectation(s: TwoModeState, mode: Literal["a", "b"] = "b") -> float:
    """Expectation of ``(-1)^n`` on one mode.

    Computed on the retained amplitudes; for truncated states the result
    is biased by at most the tail mass, which callers should report
    alongside (see :func:`bellamp.fock.tail_mass`).
    """
    if mode not in ("a", "b"):
        raise ValueError(f"mode must be 'a' or 'b', got {mode!r}")
    signs = 1.0 - 2.0 * (np.arange(s.cutoff.dim) % 2)
    probs = s.probabilities
    if mode == "a":
        return float(np.sum(signs[:, None] * probs))
    return float(np.sum(signs[None, :] * probs))


class JMoments(NamedTuple):
    """Diagonal Schwinger-operator expectations of a two-mode state."""

    j3: float
    j3_sq: float
    j0: float


def j_moments(s: TwoModeState) -> JMoments:
    """Expectations of J3 = (n_a - n_b)/2, J3**2, and J0 = (n_a + n_b)/2."""
    n = np.arange(s.cutoff.dim, dtype=float)
    half_diff = 0.5 * (n[:, None] - n[None, :])
    half_sum = 0.5 * (n[:, None] + n[None, :])
    probs = s.probabilities
    return JMoments(
        j3=float(np.sum(half_diff * probs)),
        j3_sq=float(np.sum(half_diff**2 * probs)),
        j0=float(np.sum(half_sum * probs)),
    )


def mode_swap_with_sign(s: TwoModeState) -> TwoModeState:
    """Signed mode swap ``|n, m> -> (-1)^n |m, n>`` (equivalently
    ``c_nm <- (-1)^m c_mn``); exactly unitary on the square grid."""
    signs = 1.0 - 2.0 * (np.arange(s.cutoff.dim) % 2)
    return TwoModeState(s.cutoff, s.amps.T * signs[None, :])
