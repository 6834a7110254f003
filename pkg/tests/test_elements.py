"""Tests for squeezers, beam splitter, phases, parity, and the mode swap."""

import math

import numpy as np
import pytest
from scipy.linalg import expm

from bellamp import sectors
from bellamp.elements import (
    SqueezeParams,
    beam_splitter,
    j_moments,
    mode_swap_with_sign,
    parity_expectation,
    phase_shift,
    squeezed_one_photon,
    squeezed_vacuum,
)
from bellamp.errors import DomainError
from bellamp.fock import ModeCutoff, TwoModeState, make_fock, tail_mass
from bellamp.metrology import ProbeSpec, nbar_closed, prepare_probe, qfi_closed

from oracles import (
    dense_bs_unitary,
    dense_j_matrices,
    random_two_mode_grid,
    sector_block,
    squeezed_one_photon_amp,
    squeezed_vacuum_coeff,
)

SQRT2 = math.sqrt(2.0)


# --- squeezers -------------------------------------------------------------


def test_squeeze_params_validation():
    with pytest.raises(DomainError):
        SqueezeParams(-0.1)
    assert SqueezeParams(0.5, theta=2 * math.pi + 0.3).theta == pytest.approx(0.3)


def test_squeezed_vacuum_r_zero_is_vacuum():
    state = squeezed_vacuum(SqueezeParams(0.0), 6)
    assert state.amps[0] == 1.0
    assert np.count_nonzero(state.amps) == 1


def test_squeezed_vacuum_leading_coefficient():
    state = squeezed_vacuum(SqueezeParams(0.5), 10)
    assert abs(state.amps[0]) ** 2 == pytest.approx(1.0 / math.cosh(0.5), abs=1e-12)


@pytest.mark.parametrize("r", [0.3, 1.0, 2.5])
def test_squeezed_vacuum_matches_series(r):
    state = squeezed_vacuum(SqueezeParams(r), 40)
    for n in range(21):
        assert state.amps[2 * n] == pytest.approx(
            squeezed_vacuum_coeff(r, n), rel=1e-12, abs=1e-300
        )
    assert np.all(state.amps[1::2] == 0.0)


def test_squeezed_vacuum_theta_phase():
    theta = 1.1
    state = squeezed_vacuum(SqueezeParams(0.8, theta=theta), 20)
    for n in range(11):
        assert state.amps[2 * n] == pytest.approx(
            squeezed_vacuum_coeff(0.8, n, theta=theta), rel=1e-12
        )


def test_squeezed_vacuum_mean_photon_number():
    # oracle: standard squeezed-vacuum mean photon number sinh(r)^2
    state = squeezed_vacuum(SqueezeParams(1.0), 128)
    n = np.arange(129)
    mean = float(np.sum(n * np.abs(state.amps) ** 2))
    assert mean == pytest.approx(math.sinh(1.0) ** 2, abs=1e-8)


def test_squeezed_one_photon_r_zero():
    state = squeezed_one_photon(SqueezeParams(0.0), 6)
    assert state.amps[1] == 1.0
    assert np.count_nonzero(state.amps) == 1


def test_squeezed_one_photon_matches_series():
    state = squeezed_one_photon(SqueezeParams(0.8), 40)
    for m in range(20):
        assert state.amps[2 * m + 1] == pytest.approx(
            squeezed_one_photon_amp(0.8, m), rel=1e-12, abs=1e-300
        )
    assert np.all(state.amps[0::2] == 0.0)


def test_squeezed_one_photon_mean_photon_number():
    # oracle: total probe mean 1 + 4 sinh^2 splits as sinh^2 (vacuum mode)
    # plus 1 + 3 sinh^2 (seeded mode)
    state = squeezed_one_photon(SqueezeParams(0.8), 128)
    n = np.arange(129)
    mean = float(np.sum(n * np.abs(state.amps) ** 2))
    assert mean == pytest.approx(1.0 + 3.0 * math.sinh(0.8) ** 2, abs=1e-8)


@pytest.mark.parametrize("r", [0.4, 1.2])
def test_squeezed_one_photon_norm_approaches_one(r):
    norms = [squeezed_one_photon(SqueezeParams(r), n_max).norm_sq for n_max in (16, 64, 256)]
    assert all(b >= a for a, b in zip(norms, norms[1:]))
    assert norms[-1] == pytest.approx(1.0, abs=1e-12)


# --- beam splitter ---------------------------------------------------------


def test_beam_splitter_single_photon_bell_state():
    out = beam_splitter(make_fock(1, 0, 4))
    assert out.amps[1, 0] == pytest.approx(1 / SQRT2, abs=1e-14)
    assert out.amps[0, 1] == pytest.approx(1j / SQRT2, abs=1e-14)
    others = np.abs(out.amps).sum() - abs(out.amps[1, 0]) - abs(out.amps[0, 1])
    assert others == pytest.approx(0.0, abs=1e-14)


def test_beam_splitter_vacuum_invariant():
    out = beam_splitter(make_fock(0, 0, 3))
    assert np.array_equal(out.amps, make_fock(0, 0, 3).amps)


def test_beam_splitter_hong_ou_mandel():
    # oracle: dense exponential of the N = 2 sector generator
    out = beam_splitter(make_fock(1, 1, 4))
    sector = expm(1j * (np.pi / 2.0) * sectors.j1_sector(2))
    expected = sector @ np.array([0.0, 1.0, 0.0])
    assert out.amps[0, 2] == pytest.approx(expected[0], abs=1e-12)
    assert out.amps[1, 1] == pytest.approx(expected[1], abs=1e-12)
    assert out.amps[2, 0] == pytest.approx(expected[2], abs=1e-12)
    # which is the photon-bunching state i(|2,0> + |0,2>)/sqrt(2)
    assert out.amps[2, 0] == pytest.approx(1j / SQRT2, abs=1e-12)
    assert out.amps[0, 2] == pytest.approx(1j / SQRT2, abs=1e-12)
    assert out.amps[1, 1] == pytest.approx(0.0, abs=1e-12)


@pytest.mark.parametrize("seed", [0, 1])
def test_beam_splitter_matches_dense_truncated_exponential(seed):
    # oracle: expm of the dense truncated generator on the whole grid;
    # covers corner sectors, where the restricted-generator semantics apply
    n_max = 5
    grid = random_two_mode_grid(n_max, seed=seed)
    state = TwoModeState(ModeCutoff(n_max), grid)
    dense = dense_bs_unitary(n_max) @ grid.reshape(-1)
    out = beam_splitter(state)
    assert np.abs(out.amps.reshape(-1) - dense).max() < 1e-12


def test_beam_splitter_norm_preservation_random_states():
    for seed in range(3):
        state = TwoModeState(ModeCutoff(40), random_two_mode_grid(40, seed=seed))
        out = beam_splitter(state)
        assert abs(out.norm_sq - state.norm_sq) < 1e-12 * state.norm_sq


def test_beam_splitter_applied_twice_is_pi_rotation():
    # B^2 = exp(i pi J1); on |1,0> that gives i|0,1>
    out = beam_splitter(beam_splitter(make_fock(1, 0, 4)))
    assert out.amps[0, 1] == pytest.approx(1j, abs=1e-13)
    assert abs(out.amps[1, 0]) == pytest.approx(0.0, abs=1e-13)


def test_bs_builders_agree_small_sectors():
    # spectral exponentiation vs exact combinatorial build, sectors <= 20
    for total in range(21):
        spectral = sectors.bs_sector_spectral(total, 0, total)
        exact = sectors.bs_sector_exact(total)
        assert np.abs(spectral - exact).max() < 1e-10


def test_bs_sector_unitaries_are_unitary():
    for total, lo, hi in ((7, 0, 7), (30, 10, 20), (64, 0, 64)):
        u = sectors.bs_sector_spectral(total, lo, hi)
        eye = np.eye(hi - lo + 1)
        assert np.abs(u.conj().T @ u - eye).max() < 1e-13


# --- phase shift -----------------------------------------------------------


def test_phase_shift_identity():
    state = TwoModeState(ModeCutoff(4), random_two_mode_grid(4, seed=5))
    out = phase_shift(state, 0.0, 0.0)
    assert np.array_equal(out.amps, state.amps)


def test_phase_shift_pi_on_single_photon():
    out = phase_shift(make_fock(1, 0, 2), math.pi, 0.0)
    assert out.amps[1, 0] == pytest.approx(-1.0, abs=1e-15)


def test_phase_shift_elementwise_action():
    state = TwoModeState(ModeCutoff(3), random_two_mode_grid(3, seed=9))
    phi_a, phi_b = 0.7, -1.3
    out = phase_shift(state, phi_a, phi_b)
    n = np.arange(4)
    expected = state.amps * np.exp(1j * (phi_a * n[:, None] + phi_b * n[None, :]))
    assert np.abs(out.amps - expected).max() < 1e-15
    assert abs(out.norm_sq - state.norm_sq) < 1e-14


# --- parity ----------------------------------------------------------------


def test_parity_expectation_basis_states():
    assert parity_expectation(make_fock(0, 0, 3), "b") == 1.0
    assert parity_expectation(make_fock(0, 1, 3), "b") == -1.0
    assert parity_expectation(make_fock(0, 1, 3), "a") == 1.0
    assert parity_expectation(make_fock(3, 0, 3), "a") == -1.0


def test_parity_expectation_bell_state():
    bell = beam_splitter(make_fock(1, 0, 2))
    assert parity_expectation(bell, "b") == pytest.approx(0.0, abs=1e-14)


def test_parity_expectation_bad_mode():
    with pytest.raises(ValueError):
        parity_expectation(make_fock(0, 0, 2), "c")


# --- Schwinger moments -----------------------------------------------------


def test_j_moments_single_photon():
    moments = j_moments(make_fock(1, 0, 3))
    assert moments == (0.5, 0.25, 0.5)


def test_j_moments_bell_state():
    moments = j_moments(beam_splitter(make_fock(1, 0, 3)))
    assert moments.j3 == pytest.approx(0.0, abs=1e-14)
    assert moments.j3_sq == pytest.approx(0.25, abs=1e-14)
    assert moments.j0 == pytest.approx(0.5, abs=1e-14)


def test_j_moments_probe_variance_closed_form():
    # oracle: scheme CRB inverted, var(J3) = (3 nbar^2 + 6 nbar - 5)/16;
    # tail tightened to 1e-12 because the second moment weights the tail
    # by the squared photon number
    probe = prepare_probe(ProbeSpec(r=0.5, epsilon_tail=1e-12))
    nbar = nbar_closed(0.5)
    moments = j_moments(probe)
    var = moments.j3_sq - moments.j3**2
    expected = (3.0 * nbar**2 + 6.0 * nbar - 5.0) / 16.0
    assert var == pytest.approx(expected, rel=1e-8)


def test_j_moments_match_dense_operators():
    n_max = 4
    grid = random_two_mode_grid(n_max, seed=21)
    state = TwoModeState(ModeCutoff(n_max), grid)
    dense = dense_j_matrices(n_max)
    vec = grid.reshape(-1)
    moments = j_moments(state)
    assert moments.j3 == pytest.approx((vec.conj() @ dense["j3"] @ vec).real, abs=1e-13)
    assert moments.j3_sq == pytest.approx(
        (vec.conj() @ dense["j3"] @ dense["j3"] @ vec).real, abs=1e-13
    )
    assert moments.j0 == pytest.approx((vec.conj() @ dense["j0"] @ vec).real, abs=1e-13)


# --- mode swap -------------------------------------------------------------


def test_mode_swap_single_photon_sign():
    out = mode_swap_with_sign(make_fock(1, 0, 3))
    assert out.amps[0, 1] == pytest.approx(-1.0, abs=0)
    assert np.count_nonzero(out.amps) == 1


def test_mode_swap_vacuum():
    out = mode_swap_with_sign(make_fock(0, 0, 3))
    assert out.amps[0, 0] == 1.0


def test_mode_swap_matches_sector_exponential():
    # oracle: dense exponential of the J2 generator, sectors <= 10
    for total in range(11):
        swap = sectors.swap_sign_sector(total)
        dense = expm(1j * np.pi * sectors.j2_sector(total))
        assert np.abs(swap - dense).max() < 1e-10


def test_mode_swap_norm_and_grid_action():
    state = TwoModeState(ModeCutoff(6), random_two_mode_grid(6, seed=33))
    out = mode_swap_with_sign(state)
    assert abs(out.norm_sq - state.norm_sq) < 1e-14
    m = np.arange(7)
    expected = state.amps.T * ((-1.0) ** m)[None, :]
    assert np.array_equal(out.amps, expected)


# --- truncation interplay --------------------------------------------------


def test_probe_tail_reported_alongside_parity():
    spec = ProbeSpec(r=0.6, epsilon_tail=1e-8)
    probe = prepare_probe(spec)
    assert 0.0 <= tail_mass(probe) < 1e-8
    value = parity_expectation(beam_splitter(probe), "b")
    assert -1.0 - 1e-8 <= value <= 1.0 + 1e-8
