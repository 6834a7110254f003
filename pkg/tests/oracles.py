"""Independent reference computations for the test suite.

Everything here is built from first principles (ladder operators, exact
factorial series, dense matrix exponentials) without touching the
package's own sector or coefficient machinery, so agreement is a real
cross-check and not a tautology.
"""

from __future__ import annotations

import math

import numpy as np
from scipy.linalg import expm


def squeezed_vacuum_coeff(r: float, n: int, theta: float = 0.0) -> complex:
    """Exact series coefficient on |2n>: sqrt(sech r) sqrt((2n)!)
    (-e^{i theta} tanh r)^n / (2^n n!), evaluated with exact factorials."""
    mag = (
        math.sqrt(1.0 / math.cosh(r))
        * math.sqrt(math.factorial(2 * n))
        * math.tanh(r) ** n
        / (2**n * math.factorial(n))
    )
    return mag * (-np.exp(1j * theta)) ** n


def squeezed_one_photon_amp(r: float, m: int, theta: float = 0.0) -> complex:
    """Exact series amplitude on |2m+1>: sech(r) sqrt(2m+1) C_m."""
    return (1.0 / math.cosh(r)) * math.sqrt(2 * m + 1) * squeezed_vacuum_coeff(r, m, theta)


def ladder(dim: int) -> np.ndarray:
    """Annihilation operator on a single truncated mode."""
    mat = np.zeros((dim, dim), dtype=np.complex128)
    n = np.arange(1, dim)
    mat[n - 1, n] = np.sqrt(n)
    return mat


def two_mode_ops(n_max: int) -> tuple[np.ndarray, np.ndarray]:
    """Dense annihilation operators (a, b) on the flattened two-mode grid,
    index ordering c[n, m] -> n * dim + m."""
    dim = n_max + 1
    eye = np.eye(dim, dtype=np.complex128)
    a = np.kron(ladder(dim), eye)
    b = np.kron(eye, ladder(dim))
    return a, b


def dense_bs_unitary(n_max: int) -> np.ndarray:
    """exp(i (pi/4)(a+ b + b+ a)) on the flattened truncated grid."""
    a, b = two_mode_ops(n_max)
    gen = a.conj().T @ b + b.conj().T @ a
    return expm(1j * (np.pi / 4.0) * gen)


def dense_j_matrices(n_max: int) -> dict[str, np.ndarray]:
    """Dense Schwinger operators on the flattened truncated grid."""
    a, b = two_mode_ops(n_max)
    ad, bd = a.conj().T, b.conj().T
    return {
        "j1": 0.5 * (ad @ b + bd @ a),
        "j2": -0.5j * (ad @ b - bd @ a),
        "j3": 0.5 * (ad @ a - bd @ b),
        "j0": 0.5 * (ad @ a + bd @ b),
    }


def sector_indices(total: int, n_max: int) -> np.ndarray:
    """Flattened-grid indices of sector ``total``, ordered by mode-a count."""
    dim = n_max + 1
    ns = np.arange(max(0, total - n_max), min(total, n_max) + 1)
    return ns * dim + (total - ns)


def sector_block(op: np.ndarray, total: int, n_max: int) -> np.ndarray:
    """Extract the sector block of a dense flattened-grid operator."""
    idx = sector_indices(total, n_max)
    return op[np.ix_(idx, idx)]


def random_two_mode_grid(n_max: int, seed: int) -> np.ndarray:
    """Normalized random complex grid."""
    rng = np.random.default_rng(seed)
    grid = rng.normal(size=(n_max + 1, n_max + 1)) + 1j * rng.normal(
        size=(n_max + 1, n_max + 1)
    )
    return grid / np.linalg.norm(grid)
