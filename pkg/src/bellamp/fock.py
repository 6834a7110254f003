"""Truncated Fock-space state containers for one and two optical modes.

Amplitudes are stored dense (squeezed probes occupy every other photon
number, so sparsity buys little) and states are immutable after
construction: every operation returns a new state, so values can be shared
freely between threads.

Truncation is never hidden by renormalizing.  The squared norm of a valid
state lies in ``(0, 1 + EPS_NORM]`` and the deficit ``1 - norm**2`` is the
tail mass lost to the cutoff; :func:`tail_mass` reports it so callers can
budget the error of downstream expectation values.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import CutoffError, DimensionMismatchError

# Slack allowed above exact normalization before a state is rejected.
EPS_NORM = 1e-12


@dataclass(frozen=True)
class ModeCutoff:
    """Maximum photon number retained per mode; a state keeps ``n_max + 1``
    amplitudes along each mode dimension."""

    n_max: int

    def __post_init__(self) -> None:
        if not isinstance(self.n_max, (int, np.integer)) or isinstance(self.n_max, bool):
            raise TypeError(f"n_max must be an integer, got {self.n_max!r}")
        if self.n_max < 1:
            raise ValueError(f"n_max must be >= 1, got {self.n_max}")
        object.__setattr__(self, "n_max", int(self.n_max))

    @property
    def dim(self) -> int:
        return self.n_max + 1


def as_cutoff(cutoff: ModeCutoff | int) -> ModeCutoff:
    """Coerce an integer to a :class:`ModeCutoff`."""
    return cutoff if isinstance(cutoff, ModeCutoff) else ModeCutoff(cutoff)


def _validated_amps(amps, shape: tuple[int, ...]) -> np.ndarray:
    arr = np.asarray(amps, dtype=np.complex128)
    if arr.shape != shape:
        raise DimensionMismatchError(
            f"amplitude array has shape {arr.shape}, expected {shape}"
        )
    norm_sq = float(np.sum(np.abs(arr) ** 2))
    if not norm_sq > 0.0:
        raise ValueError("state has zero norm")
    if norm_sq > 1.0 + EPS_NORM:
        raise ValueError(f"squared norm {norm_sq} exceeds 1 + {EPS_NORM}")
    arr = arr.copy()
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class SingleModeState:
    """Complex amplitudes over photon numbers ``0..n_max`` of one mode."""

    cutoff: ModeCutoff
    amps: np.ndarray

    def __post_init__(self) -> None:
        cutoff = as_cutoff(self.cutoff)
        object.__setattr__(self, "cutoff", cutoff)
        object.__setattr__(self, "amps", _validated_amps(self.amps, (cutoff.dim,)))

    @property
    def norm_sq(self) -> float:
        return float(np.sum(np.abs(self.amps) ** 2))


@dataclass(frozen=True)
class TwoModeState:
    """Complex amplitude grid over photon-number pairs ``(n, m)``.

    Index ``n`` counts photons in mode a (first axis), ``m`` photons in
    mode b (second axis); both axes share one cutoff.
    """

    cutoff: ModeCutoff
    amps: np.ndarray

    def __post_init__(self) -> None:
        cutoff = as_cutoff(self.cutoff)
        object.__setattr__(self, "cutoff", cutoff)
        object.__setattr__(
            self, "amps", _validated_amps(self.amps, (cutoff.dim, cutoff.dim))
        )

    @property
    def norm_sq(self) -> float:
        return float(np.sum(np.abs(self.amps) ** 2))

    @property
    def probabilities(self) -> np.ndarray:
        """Photon-number pair probabilities ``|c_nm|**2`` (no renormalizing)."""
        return np.abs(self.amps) ** 2


def make_fock(n: int, m: int, cutoff: ModeCutoff | int) -> TwoModeState:
    """Basis state with ``n`` photons in mode a and ``m`` in mode b.

    Raises
    ------
    CutoffError
        If ``n`` or ``m`` exceeds the cutoff.
    """
    cutoff = as_cutoff(cutoff)
    if not (0 <= n <= cutoff.n_max) or not (0 <= m <= cutoff.n_max):
        raise CutoffError(
            f"photon pair ({n}, {m}) outside cutoff n_max={cutoff.n_max}"
        )
    amps = np.zeros((cutoff.dim, cutoff.dim), dtype=np.complex128)
    amps[n, m] = 1.0
    return TwoModeState(cutoff, amps)


def product_state(sa: SingleModeState, sb: SingleModeState) -> TwoModeState:
    """Tensor product ``c_nm = sa[n] * sb[m]`` of two single-mode states."""
    if sa.cutoff != sb.cutoff:
        raise DimensionMismatchError(
            f"cutoffs differ: {sa.cutoff.n_max} vs {sb.cutoff.n_max}"
        )
    return TwoModeState(sa.cutoff, np.outer(sa.amps, sb.amps))


def inner(x: TwoModeState, y: TwoModeState) -> complex:
    """Inner product ``sum conj(x_nm) * y_nm``; conjugate-symmetric."""
    if x.cutoff != y.cutoff:
        raise DimensionMismatchError(
            f"cutoffs differ: {x.cutoff.n_max} vs {y.cutoff.n_max}"
        )
    return complex(np.vdot(x.amps, y.amps))


def tail_mass(s: SingleModeState | TwoModeState) -> float:
    """Probability weight lost to truncation: ``1 - norm**2``, clamped at 0."""
    return max(0.0, 1.0 - s.norm_sq)
