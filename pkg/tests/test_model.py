"""Hamiltonian assembly, parity blocks, gauge phases, basic observables."""

import numpy as np
import pytest

from kerrqgt import (
    ModelParams,
    apply_gauge_phases,
    build_hamiltonian,
    mean_photon,
    parity_blocks,
    photon_variance,
    rho,
    tail_weight,
)
from kerrqgt.eigensolver import ground_state


def test_params_validation():
    with pytest.raises(ValueError):
        ModelParams(delta=0.0, kerr=0.0, eps=1.0)
    with pytest.raises(ValueError):
        ModelParams(delta=1.0, kerr=-0.1, eps=1.0)
    with pytest.raises(ValueError):
        ModelParams(delta=1.0, kerr=0.0, eps=-0.5)
    with pytest.raises(ValueError):
        ModelParams(delta=1.0, kerr=0.0, eps=1.0, n_cut=3)


def test_effective_size():
    p = ModelParams(delta=1.0, kerr=0.002, eps=0.5)
    assert p.effective_size == pytest.approx(500.0)
    with pytest.raises(ValueError):
        _ = ModelParams(delta=1.0, kerr=0.0, eps=0.5).effective_size
    q = ModelParams.from_size(250, 0.5)
    assert q.kerr == pytest.approx(1.0 / 250.0)


def test_diagonal_entries():
    h = build_hamiltonian(ModelParams(delta=1.0, kerr=0.01, eps=1.0, n_cut=16))
    assert h.diag[0] == 0.0
    assert h.diag[4] == pytest.approx(0.01 * 12 + 4.0)  # K n(n-1) + delta n at n=4


def test_band_entries_no_kerr():
    h = build_hamiltonian(ModelParams(delta=1.0, kerr=0.0, eps=1.0, n_cut=16))
    assert h.band2[0] == pytest.approx(-np.sqrt(2.0) / 2.0)
    assert h.band2[2] == pytest.approx(-np.sqrt(12.0) / 2.0)


def test_dense_hermitian_exactly():
    h = build_hamiltonian(ModelParams(delta=1.3, kerr=0.02, eps=0.8, phi=0.9, n_cut=24))
    dense = h.to_dense()
    assert np.max(np.abs(dense - dense.conj().T)) == 0.0


def test_banded_apply_matches_dense():
    p = ModelParams(delta=1.1, kerr=0.03, eps=0.7, phi=1.1, n_cut=20)
    h = build_hamiltonian(p)
    rng = np.random.default_rng(7)
    v = rng.normal(size=p.dim) + 1j * rng.normal(size=p.dim)
    np.testing.assert_allclose(h.apply(v), h.to_dense() @ v, atol=1e-12)


def test_parity_blocks_small():
    even, odd = parity_blocks(ModelParams(delta=1.0, kerr=0.0, eps=1.0, n_cut=4))
    assert even.size == 3 and odd.size == 2
    np.testing.assert_allclose(even.diag, [0.0, 2.0, 4.0])
    np.testing.assert_allclose(even.offdiag, [-np.sqrt(2.0) / 2.0, -np.sqrt(3.0)])
    np.testing.assert_array_equal(even.index_map, [0, 2, 4])
    np.testing.assert_array_equal(odd.index_map, [1, 3])


def test_parity_blocks_no_drive_diagonal():
    even, odd = parity_blocks(ModelParams(delta=1.0, kerr=0.05, eps=0.0, n_cut=12))
    assert np.all(even.offdiag == 0.0)
    assert np.all(odd.offdiag == 0.0)


def test_blocks_independent_of_phi():
    base = ModelParams(delta=1.0, kerr=0.01, eps=0.9, n_cut=30)
    ref = parity_blocks(base)
    for phi in (np.pi / 4, np.pi):
        blocks = parity_blocks(base.replace(phi=phi))
        for a, b in zip(ref, blocks):
            np.testing.assert_array_equal(a.diag, b.diag)
            np.testing.assert_array_equal(a.offdiag, b.offdiag)


def test_spectrum_independent_of_phi():
    # The gauge rotation with phases e^{i n phi / 2} conjugates H(eps, phi)
    # into H(eps, 0), so the dense spectra must coincide.
    base = ModelParams(delta=1.0, kerr=0.02, eps=0.8, n_cut=40)
    ref = np.linalg.eigvalsh(build_hamiltonian(base).to_dense())
    scale = np.max(np.abs(ref))
    for phi in (np.pi / 4, np.pi, 2.3):
        ev = np.linalg.eigvalsh(build_hamiltonian(base.replace(phi=phi)).to_dense())
        assert np.max(np.abs(ev - ref)) <= 1e-10 * scale


def test_block_spectra_match_dense():
    p = ModelParams(delta=1.0, kerr=0.02, eps=0.8, phi=0.7, n_cut=40)
    even, odd = parity_blocks(p)
    import scipy.linalg
    ev_blocks = np.sort(np.concatenate([
        scipy.linalg.eigvalsh_tridiagonal(even.diag, even.offdiag),
        scipy.linalg.eigvalsh_tridiagonal(odd.diag, odd.offdiag),
    ]))
    ev_dense = np.linalg.eigvalsh(build_hamiltonian(p).to_dense())
    np.testing.assert_allclose(ev_blocks, ev_dense, atol=1e-10)


def test_even_state_stays_even():
    p = ModelParams(delta=1.0, kerr=0.01, eps=1.2, phi=0.4, n_cut=30)
    dense = build_hamiltonian(p).to_dense()
    rng = np.random.default_rng(3)
    for _ in range(5):
        v = np.zeros(p.dim, dtype=complex)
        v[::2] = rng.normal(size=len(v[::2])) + 1j * rng.normal(size=len(v[::2]))
        v /= np.linalg.norm(v)
        out = dense @ v
        assert np.max(np.abs(out[1::2])) == 0.0


def test_gauge_phases():
    state = np.zeros(8)
    state[2] = 1.0
    np.testing.assert_array_equal(apply_gauge_phases(state, 0.0), state.astype(complex))
    assert apply_gauge_phases(state, np.pi)[2] == pytest.approx(-1.0)
    rng = np.random.default_rng(11)
    v = rng.normal(size=16) + 1j * rng.normal(size=16)
    assert np.linalg.norm(apply_gauge_phases(v, 1.7)) == pytest.approx(np.linalg.norm(v))


def test_gauge_phases_map_eigenvectors():
    p0 = ModelParams(delta=1.0, kerr=0.02, eps=0.7, phi=0.0, n_cut=36)
    p1 = p0.replace(phi=1.3)
    w0, v0 = np.linalg.eigh(build_hamiltonian(p0).to_dense())
    h1 = build_hamiltonian(p1).to_dense()
    mapped = apply_gauge_phases(v0[:, 0], 1.3)
    resid = h1 @ mapped - w0[0] * mapped
    assert np.linalg.norm(resid) < 1e-10


def test_mean_photon():
    vac = np.zeros(10)
    vac[0] = 1.0
    assert mean_photon(vac) == 0.0
    mix = np.zeros(10)
    mix[0] = mix[2] = 1.0 / np.sqrt(2.0)
    assert mean_photon(mix) == pytest.approx(1.0)
    with pytest.raises(ValueError):
        mean_photon(2.0 * vac)


def test_photon_variance():
    mix = np.zeros(10)
    mix[0] = mix[2] = 1.0 / np.sqrt(2.0)
    assert photon_variance(mix) == pytest.approx(1.0)


def test_rho_against_displacement_amplitude():
    # In the symmetry-broken regime <n>/L approaches (eps - 1) / 2.
    p = ModelParams(delta=1.0, kerr=1.0 / 2000.0, eps=1.3, n_cut=800)
    gs = ground_state(p)
    value = rho(gs.fock_vector, p.effective_size)
    assert value == pytest.approx(0.15, rel=0.05)
    assert not gs.cutoff_warning


def test_tail_weight():
    v = np.zeros(100)
    v[0] = 1.0
    assert tail_weight(v) == 0.0
    v2 = np.zeros(100)
    v2[-1] = 1.0
    assert tail_weight(v2) == 1.0
