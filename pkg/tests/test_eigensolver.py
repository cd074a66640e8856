"""Tridiagonal solves, spectrum guarantees, and ground-state extraction."""

import numpy as np
import pytest

from kerrqgt import (
    ModelParams,
    build_hamiltonian,
    dense_eigenvalues,
    eig_tridiagonal,
    ground_state,
    parity_blocks,
    sector_spectra,
    squeezed_vacuum_fock,
)
from kerrqgt.model import TridiagonalBlock


def make_block(diag, off):
    diag = np.asarray(diag, dtype=float)
    off = np.asarray(off, dtype=float)
    return TridiagonalBlock(parity="even", size=len(diag), diag=diag, offdiag=off,
                            index_map=np.arange(0, 2 * len(diag), 2))


def test_diagonal_case():
    spec = eig_tridiagonal(make_block([0.0, 2.0, 4.0], [0.0, 0.0]))
    np.testing.assert_allclose(spec.eigenvalues, [0.0, 2.0, 4.0])
    np.testing.assert_allclose(np.abs(spec.eigenvectors), np.eye(3), atol=1e-14)


def test_two_by_two_closed_form():
    spec = eig_tridiagonal(make_block([0.0, 2.0], [-1.0]))
    np.testing.assert_allclose(spec.eigenvalues,
                               [1.0 - np.sqrt(2.0), 1.0 + np.sqrt(2.0)], atol=1e-14)


def test_no_drive_eigenvalues_are_diagonal():
    even, _ = parity_blocks(ModelParams(delta=1.0, kerr=0.01, eps=0.0, n_cut=20))
    spec = eig_tridiagonal(even)
    n = np.arange(0, 21, 2, dtype=float)
    np.testing.assert_allclose(spec.eigenvalues, 0.01 * n * (n - 1) + n, atol=1e-13)


def test_spectrum_bounds_hold():
    even, odd = parity_blocks(ModelParams(delta=1.0, kerr=1.0 / 400.0, eps=1.02, n_cut=800))
    for block in (even, odd):
        spec = eig_tridiagonal(block)
        scale = max(1.0, np.max(np.abs(spec.eigenvalues)))
        assert spec.max_residual <= 1e-10 * scale
        assert spec.max_orthogonality_defect <= 1e-10
        assert np.all(np.diff(spec.eigenvalues) >= 0.0)


def test_blocks_match_dense_debug_path():
    rng = np.random.default_rng(42)
    for _ in range(5):
        p = ModelParams(delta=float(rng.uniform(0.5, 2.0)),
                        kerr=float(rng.uniform(0.0, 0.1)),
                        eps=float(rng.uniform(0.0, 1.5)),
                        phi=float(rng.uniform(0.0, 2 * np.pi)),
                        n_cut=int(rng.integers(12, 65)))
        even_spec, odd_spec = sector_spectra(p)
        merged = np.sort(np.concatenate([even_spec.eigenvalues, odd_spec.eigenvalues]))
        np.testing.assert_allclose(merged, dense_eigenvalues(p), atol=1e-9)


def test_variational_bound():
    p = ModelParams(delta=1.0, kerr=0.02, eps=0.9, phi=0.3, n_cut=48)
    h = build_hamiltonian(p)
    e0 = ground_state(p).energy
    rng = np.random.default_rng(5)
    for _ in range(100):
        v = rng.normal(size=p.dim) + 1j * rng.normal(size=p.dim)
        v /= np.linalg.norm(v)
        assert e0 <= np.real(np.vdot(v, h.apply(v))) + 1e-12


def test_ground_state_vacuum():
    p = ModelParams(delta=1.0, kerr=0.01, eps=0.0, n_cut=24)
    gs = ground_state(p)
    assert gs.energy == pytest.approx(0.0, abs=1e-14)
    assert gs.parity == "even"
    assert abs(gs.fock_vector[0]) == pytest.approx(1.0)
    assert gs.gap == pytest.approx(2.0 + 2 * 0.01)  # 2 delta + 2 K within the even sector


def test_ground_state_normal_phase_is_even():
    for eps in (0.2, 0.5, 0.9):
        gs = ground_state(ModelParams.from_size(200, eps, n_cut=400))
        assert gs.parity == "even"
        assert gs.sector_energies[0] < gs.sector_energies[1]


def test_normal_phase_matches_squeezed_vacuum():
    p = ModelParams.from_size(500, 0.6, n_cut=800)
    gs = ground_state(p)
    target = squeezed_vacuum_fock(0.25 * np.log(0.4 / 1.6), 800)
    assert abs(np.vdot(target, gs.fock_vector)) > 0.999


def test_degenerate_sectors_above_transition():
    # Two symmetry-broken branches: sector minima split only by tunneling,
    # far below any resolvable scale at this size.
    p = ModelParams.from_size(500, 1.5, n_cut=800)
    gs = ground_state(p)
    e_even, e_odd = gs.sector_energies
    scale = max(1.0, abs(e_even))
    assert abs(e_even - e_odd) < 1e-10 * scale
    assert gs.parity == "even"
    # both sector ground states carry the same condensate density ~ (eps-1)/2
    even_spec, odd_spec = sector_spectra(p)
    even_blk, odd_blk = parity_blocks(p)
    for spec, blk in ((even_spec, even_blk), (odd_spec, odd_blk)):
        w = spec.eigenvectors[:, 0] ** 2
        dens = float(np.sum(blk.index_map * w)) / p.effective_size
        assert dens == pytest.approx(0.25, rel=0.10)


def test_ground_state_gauge_phase():
    p0 = ModelParams.from_size(300, 0.8, n_cut=400)
    p1 = p0.replace(phi=1.1)
    g0, g1 = ground_state(p0), ground_state(p1)
    n = np.arange(p0.dim)
    mapped = g0.fock_vector * np.exp(-0.5j * n * 1.1)
    assert abs(np.vdot(mapped, g1.fock_vector)) == pytest.approx(1.0, abs=1e-12)


def test_cutoff_warning_fires_when_truncated():
    gs = ground_state(ModelParams.from_size(200, 1.8, n_cut=60))
    assert gs.cutoff_warning
