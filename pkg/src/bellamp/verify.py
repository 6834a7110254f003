"""Self-verification suites: every module invariant as a named check.

Each check measures a maximum error against a pinned tolerance and the
whole run is deterministic, so repeated invocations produce identical
reports.  Three levels trade coverage for runtime:

* ``fast``  -- small squeezing and sectors, seconds.
* ``full``  -- the default validation ranges (squeezing up to 1.5).
* ``long``  -- adds the brute-force signal check at nbar = 60, which
  simulates grids of ~1000 photons per mode and runs for minutes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.linalg import expm

from . import elements, estimation, metrology, sectors
from .fock import ModeCutoff, TwoModeState, make_fock, tail_mass

LEVELS = ("fast", "full", "long")


@dataclass(frozen=True)
class CheckResult:
    group: str
    max_error: float
    tolerance: float
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.max_error <= self.tolerance


def _random_states(count: int, n_max: int, seed: int) -> list[TwoModeState]:
    rng = np.random.default_rng(seed)
    states = []
    for _ in range(count):
        grid = rng.normal(size=(n_max + 1, n_max + 1)) + 1j * rng.normal(
            size=(n_max + 1, n_max + 1)
        )
        grid /= np.linalg.norm(grid)
        states.append(TwoModeState(ModeCutoff(n_max), grid))
    return states


def check_su2_algebra(max_sector: int) -> CheckResult:
    """[J1,J2] = iJ3 and cyclic permutations; J0 commutes with all."""
    err = 0.0
    for total in range(1, max_sector + 1):
        j1 = sectors.j1_sector(total)
        j2 = sectors.j2_sector(total)
        j3 = sectors.j3_sector(total)
        j0 = sectors.j0_sector(total)
        for a, b, c in ((j1, j2, j3), (j2, j3, j1), (j3, j1, j2)):
            err = max(err, float(np.abs(a @ b - b @ a - 1j * c).max()))
        for j in (j1, j2, j3):
            err = max(err, float(np.abs(j0 @ j - j @ j0).max()))
    return CheckResult("su2-algebra", err, 1e-12, f"sectors <= {max_sector}")


def check_conjugation_identity(max_sector: int) -> CheckResult:
    """exp(-i pi/2 J1) J3 exp(i pi/2 J1) = -J2, and the pi-rotation variant
    exp(-i pi/2 J1) exp(-i pi J3) exp(i pi/2 J1) = exp(i pi J2)."""
    err = 0.0
    for total in range(1, max_sector + 1):
        bs = sectors.bs_sector_spectral(total, 0, total)
        j3 = sectors.j3_sector(total)
        j2 = sectors.j2_sector(total)
        err = max(err, float(np.abs(bs.conj().T @ j3 @ bs + j2).max()))
        rot = bs.conj().T @ np.diag(np.exp(-1j * np.pi * np.diag(j3))) @ bs
        err = max(err, float(np.abs(rot - expm(1j * np.pi * j2)).max()))
    return CheckResult("conjugation-identity", err, 1e-10, f"sectors <= {max_sector}")


def check_swap_relation(max_sector: int) -> CheckResult:
    """The signed mode swap equals exp(i pi J2) on every sector."""
    err = 0.0
    for total in range(max_sector + 1):
        err = max(
            err,
            float(
                np.abs(
                    sectors.swap_sign_sector(total)
                    - expm(1j * np.pi * sectors.j2_sector(total))
                ).max()
            ),
        )
    return CheckResult("swap-relation", err, 1e-10, f"sectors <= {max_sector}")


def check_bs_builders(max_sector: int) -> CheckResult:
    """Spectral sector unitaries vs the exact combinatorial build and vs
    the dense generator exponential."""
    err = 0.0
    for total in range(max_sector + 1):
        spectral = sectors.bs_sector_spectral(total, 0, total)
        err = max(err, float(np.abs(spectral - sectors.bs_sector_exact(total)).max()))
        err = max(err, float(np.abs(spectral - expm(1j * (np.pi / 2.0) * sectors.j1_sector(total))).max()))
    return CheckResult("bs-builders", err, 1e-10, f"sectors <= {max_sector}")


def check_bell_state(n_max: int) -> CheckResult:
    """Opening beam splitter on |1,0> yields (|1,0> + i|0,1>)/sqrt(2)."""
    out = elements.beam_splitter(make_fock(1, 0, n_max))
    expected = np.zeros((n_max + 1, n_max + 1), dtype=complex)
    expected[1, 0] = 1.0 / math.sqrt(2.0)
    expected[0, 1] = 1j / math.sqrt(2.0)
    err = float(np.abs(out.amps - expected).max())
    return CheckResult("bs-bell-state", err, 1e-12)


def check_norm_preservation(n_max: int, count: int, seed: int) -> CheckResult:
    """Beam splitter, phase shift, and signed swap preserve the squared
    norm of random grid states."""
    err = 0.0
    for state in _random_states(count, n_max, seed):
        for out in (
            elements.beam_splitter(state),
            elements.phase_shift(state, 0.37, -1.1),
            elements.mode_swap_with_sign(state),
        ):
            err = max(err, abs(out.norm_sq - state.norm_sq) / state.norm_sq)
    return CheckResult("norm-preservation", err, 1e-12, f"{count} states, cutoff {n_max}")


def check_probe_construction(r_values: tuple[float, ...], epsilon_tail: float) -> CheckResult:
    """Coefficient-series probe equals the pipeline route: opening beam
    splitter on |1,0>, then squeezing each mode."""
    err = 0.0
    for r in r_values:
        spec = metrology.resolve_cutoff(
            metrology.ProbeSpec(r=r, epsilon_tail=epsilon_tail)
        )
        probe = metrology.prepare_probe(spec)
        cutoff = spec.resolved_cutoff
        params = elements.SqueezeParams(r)
        phi0 = elements.squeezed_vacuum(params, cutoff).amps
        phi1 = elements.squeezed_one_photon(params, cutoff).amps
        bell = elements.beam_splitter(make_fock(1, 0, cutoff))
        # S_a (x) S_b acting on the two basis components of the Bell state
        grid = bell.amps[1, 0] * np.outer(phi1, phi0) + bell.amps[0, 1] * np.outer(
            phi0, phi1
        )
        err = max(err, float(np.abs(probe.amps - grid).max()))
    return CheckResult("probe-construction", err, 1e-10, f"r in {sorted(r_values)}")


def check_mean_photon_number(r_values: tuple[float, ...]) -> CheckResult:
    """Numeric number-operator expectation vs 1 + 4 sinh(r)^2."""
    err = 0.0
    for r in r_values:
        probe = metrology.prepare_probe(metrology.ProbeSpec(r=r))
        closed = metrology.nbar_closed(r)
        err = max(err, abs(metrology.nbar_numeric(probe) - closed) / closed)
    return CheckResult("mean-photon-number", err, 1e-8, f"r in {sorted(r_values)}")


def check_probe_variance(r_values: tuple[float, ...]) -> CheckResult:
    """Generator variance of the probe vs (3 nbar^2 + 6 nbar - 5)/16.

    Runs at a tightened tail (1e-12): the second moment weights the
    truncation tail by the squared photon number, so the default tail
    budget would show up here as apparent disagreement.
    """
    err = 0.0
    for r in r_values:
        probe = metrology.prepare_probe(metrology.ProbeSpec(r=r, epsilon_tail=1e-12))
        moments = elements.j_moments(probe)
        var = moments.j3_sq - moments.j3**2
        nbar = metrology.nbar_closed(r)
        expected = (3.0 * nbar**2 + 6.0 * nbar - 5.0) / 16.0
        err = max(err, abs(var - expected) / expected)
    return CheckResult("probe-variance", err, 1e-8, f"r in {sorted(r_values)}")


def check_qfi(r_values: tuple[float, ...]) -> list[CheckResult]:
    """Generator-variance QFI vs the closed form, and the overlap-based
    finite-difference QFI vs the variance route."""
    err_closed = 0.0
    err_fd = 0.0
    for r in r_values:
        probe = metrology.prepare_probe(metrology.ProbeSpec(r=r))
        variance = metrology.qfi_variance(probe)
        closed = metrology.qfi_closed(metrology.nbar_closed(r))
        err_closed = max(err_closed, abs(variance - closed) / closed)
        err_fd = max(err_fd, abs(metrology.qfi_finite_difference(probe) - variance) / variance)
    detail = f"r in {sorted(r_values)}"
    return [
        CheckResult("qfi-closed-form", err_closed, 1e-6, detail),
        CheckResult("qfi-finite-difference", err_fd, 1e-4, detail),
    ]


def check_signal_agreement(
    r_values: tuple[float, ...], n_phi: int, epsilon_tail: float, tol: float
) -> CheckResult:
    """Brute-force pipeline signal vs the closed form on a phase grid."""
    phis = np.linspace(-math.pi, math.pi, n_phi, endpoint=False)
    err = 0.0
    for r in r_values:
        spec = metrology.ProbeSpec(r=r, epsilon_tail=epsilon_tail)
        sim = metrology.signal_bruteforce_sweep(r, phis, spec)
        closed = np.array([metrology.signal_closed(r, p) for p in phis])
        err = max(err, float(np.abs(sim - closed).max()))
    return CheckResult(
        "signal-agreement", err, tol, f"r in {sorted(r_values)}, {n_phi} phases"
    )


def check_sum_phase_invariance(r: float) -> CheckResult:
    """Pipeline signal depends only on the differential phase."""
    probe = metrology.prepare_probe(metrology.ProbeSpec(r=r))
    err = 0.0
    for phi in (0.0, 0.3, 1.7):
        base = metrology.parity_signal(probe, phi, sum_phase=0.0)
        for sum_phase in (0.9, -2.4):
            err = max(err, abs(metrology.parity_signal(probe, phi, sum_phase=sum_phase) - base))
    return CheckResult("sum-phase-invariance", err, 1e-12, f"r = {r}")


def check_slope(nbars: tuple[float, ...]) -> CheckResult:
    """Central-difference slope of the closed-form signal at the origin
    vs (nbar + 1)/2."""
    err = 0.0
    h = 1e-5
    for nbar in nbars:
        r = metrology.r_from_nbar(nbar)
        fd = (metrology.signal_closed(r, h) - metrology.signal_closed(r, -h)) / (2 * h)
        closed = metrology.slope_at_origin_closed(r)
        err = max(err, abs(fd - closed) / closed)
    return CheckResult("slope-at-origin", err, 1e-6, f"nbar in {sorted(nbars)}")


def check_sensitivity_ordering() -> CheckResult:
    """crb <= parity delta-phi <= shot noise on a log grid nbar in [3, 1e4],
    and the parity/shot-noise ratio falls toward zero."""
    nbars = np.logspace(math.log10(3.0), 4.0, 60)
    worst = 0.0
    for nbar in nbars:
        crb = metrology.crb_closed(nbar)
        parity = metrology.delta_phi_parity_closed(nbar)
        shot = metrology.shot_noise_limit(nbar)
        worst = max(worst, crb - parity, parity - shot)
    ratios = [
        metrology.delta_phi_parity_closed(n) / metrology.shot_noise_limit(n) for n in nbars
    ]
    if not all(ratios[i + 1] < ratios[i] for i in range(len(ratios) - 1)):
        worst = max(worst, 1.0)
    if ratios[-1] > 0.05:
        worst = max(worst, ratios[-1])
    return CheckResult("sensitivity-ordering", max(worst, 0.0), 0.0, "nbar in [3, 1e4]")


def check_estimator_rmse(nbars: tuple[float, ...], shots: int, trials: int, seed: int) -> CheckResult:
    """Monte Carlo RMSE over predicted RMSE stays within 15 percent."""
    err = 0.0
    for nbar in nbars:
        r = metrology.r_from_nbar(nbar)
        run = estimation.run_experiment(r, 0.0, shots, trials, seed)
        err = max(err, abs(run.empirical_rmse / run.predicted_rmse - 1.0))
    return CheckResult(
        "estimator-rmse", err, 0.15, f"nbar in {sorted(nbars)}, {shots} shots x {trials} trials"
    )


def check_tail_accounting(r: float) -> CheckResult:
    """Tail mass decreases with the cutoff and the resolved cutoff meets
    the requested tolerance."""
    params = elements.SqueezeParams(r)
    tails = [
        tail_mass(elements.squeezed_vacuum(params, ModeCutoff(n))) for n in (4, 8, 16, 32, 64)
    ]
    err = 0.0
    for earlier, later in zip(tails, tails[1:]):
        err = max(err, later - earlier)
    spec = metrology.resolve_cutoff(metrology.ProbeSpec(r=r))
    probe = metrology.prepare_probe(spec)
    if tail_mass(probe) >= spec.epsilon_tail:
        err = max(err, tail_mass(probe))
    return CheckResult("tail-accounting", err, 0.0, f"r = {r}")


def run_checks(level: str) -> list[CheckResult]:
    """Run the invariant suite at the given level ('fast', 'full', 'long')."""
    if level not in LEVELS:
        raise ValueError(f"level must be one of {LEVELS}, got {level!r}")
    fast = level == "fast"
    max_sector = 6 if fast else 10
    r_values = (0.0, 0.25, 0.5) if fast else (0.0, 0.25, 0.5, 1.0, 1.5)
    n_phi = 16 if fast else 64

    results = [
        check_su2_algebra(max_sector),
        check_conjugation_identity(max_sector),
        check_swap_relation(max_sector),
        check_bs_builders(12 if fast else 20),
        check_bell_state(4),
        check_norm_preservation(n_max=24 if fast else 64, count=3, seed=20240814),
        check_probe_construction(r_values, epsilon_tail=1e-10),
        check_mean_photon_number(r_values),
        check_probe_variance(r_values),
        *check_qfi(r_values),
        check_signal_agreement(r_values, n_phi, epsilon_tail=1e-10, tol=1e-7),
        check_sum_phase_invariance(r=0.5),
        check_slope((1.0, 6.0, 60.0)),
        check_sensitivity_ordering(),
        check_tail_accounting(r=1.0 if not fast else 0.5),
    ]
    if not fast:
        results.append(
            check_estimator_rmse((1.0, 6.0), shots=10_000, trials=200, seed=7)
        )
    if level == "long":
        r60 = metrology.r_from_nbar(60.0)
        results.append(
            check_signal_agreement((r60,), n_phi=16, epsilon_tail=1e-10, tol=1e-7)
        )
    return results


def format_report(results: list[CheckResult]) -> str:
    """Deterministic plain-text report, one line per invariant group."""
    width = max(len(res.group) for res in results)
    lines = []
    for res in results:
        status = "PASS" if res.passed else "FAIL"
        line = (
            f"{status}  {res.group:<{width}}  max error {res.max_error:.3e}"
            f"  tolerance {res.tolerance:.1e}"
        )
        if res.detail:
            line += f"  [{res.detail}]"
        lines.append(line)
    failed = [res.group for res in results if not res.passed]
    lines.append(
        f"{len(results) - len(failed)}/{len(results)} invariant groups passed"
        + (f"; FAILED: {', '.join(failed)}" if failed else "")
    )
    return "\n".join(lines)
