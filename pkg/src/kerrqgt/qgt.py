"""Ground-state quantum geometric tensor over the drive coordinates (eps, phi).

Three independent routes are provided and must agree:

* a spectral sum over the full even-sector eigenbasis,
* overlap finite differences for the metric (with Richardson refinement),
* a plaquette overlap product for the Berry curvature.

The even sector carries the ground state throughout (exactly in the normal
phase, by the parity tie-break in the symmetry-broken regime), and both drive
derivatives conserve parity, so all sums stay inside that sector.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._fd import curvature_fd, metric_fd, susceptibility_fd
from .eigensolver import eig_tridiagonal, embed_sector_vector
from .model import (
    ModelParams,
    pair_coupling,
    parity_blocks,
    tail_weight,
    TAIL_TOLERANCE,
)

GAP_FLOOR = 1e-12
PSD_TOLERANCE = 1e-9

DEFAULT_STEP_EPS = 1e-4
DEFAULT_STEP_PHI = 1e-3


@dataclass(frozen=True)
class PerturbationOps:
    """Drive derivatives of the Hamiltonian as offset-2 banded Hermitian operators.

    band_eps[n] = <n+2| dH/deps |n> = -(delta/2) e^{-i phi} sqrt((n+1)(n+2))
    band_phi[n] = <n+2| dH/dphi |n> = (i delta eps / 2) e^{-i phi} sqrt((n+1)(n+2))

    Both couple n <-> n+2 only, hence conserve parity.
    """

    dim: int
    band_eps: np.ndarray
    band_phi: np.ndarray

    @classmethod
    def for_params(cls, params: ModelParams) -> "PerturbationOps":
        p = pair_coupling(np.arange(params.dim - 2))
        phase = np.exp(-1j * params.phi)
        return cls(
            dim=params.dim,
            band_eps=-(params.delta / 2.0) * phase * p,
            band_phi=(0.5j * params.delta * params.eps) * phase * p,
        )

    @staticmethod
    def _apply(band: np.ndarray, state: np.ndarray) -> np.ndarray:
        out = np.zeros(len(state), dtype=complex)
        out[2:] += band * state[:-2]
        out[:-2] += np.conj(band) * state[2:]
        return out

    def apply_eps(self, state: np.ndarray) -> np.ndarray:
        return self._apply(self.band_eps, state)

    def apply_phi(self, state: np.ndarray) -> np.ndarray:
        return self._apply(self.band_phi, state)

    def dense_eps(self) -> np.ndarray:
        return self._dense(self.band_eps)

    def dense_phi(self) -> np.ndarray:
        return self._dense(self.band_phi)

    def _dense(self, band: np.ndarray) -> np.ndarray:
        h = np.zeros((self.dim, self.dim), dtype=complex)
        idx = np.arange(self.dim - 2)
        h[idx + 2, idx] = band
        h[idx, idx + 2] = np.conj(band)
        return h


@dataclass(frozen=True)
class QGTResult:
    """2x2 geometric tensor over ordered coordinates (eps, phi) plus context.

    g (metric) is the real part, berry_f the -2 Im view; both diagonals of
    berry_f vanish identically because q has an exactly real diagonal.
    """

    q: np.ndarray
    gap: float
    method: str
    params: ModelParams
    mean_n: float
    var_n: float
    tail_weight: float
    cutoff_warning: bool

    def __post_init__(self):
        if self.q.shape != (2, 2):
            raise ValueError("q must be 2x2")
        if not np.allclose(self.q, self.q.conj().T, rtol=0, atol=0):
            raise ValueError("q is not Hermitian")
        if self.q[0, 0].imag != 0.0 or self.q[1, 1].imag != 0.0:
            raise ValueError("diagonal of q must be exactly real")
        g = self.q.real
        eigmin = min(np.linalg.eigvalsh(g))
        if eigmin < -PSD_TOLERANCE * max(1.0, float(np.trace(g))):
            raise ValueError(f"metric is not positive semidefinite: eigmin = {eigmin:.3e}")

    @property
    def g(self) -> np.ndarray:
        return self.q.real.copy()

    @property
    def berry_f(self) -> np.ndarray:
        return -2.0 * self.q.imag

    @property
    def g_ee(self) -> float:
        return float(self.q[0, 0].real)

    @property
    def g_pp(self) -> float:
        return float(self.q[1, 1].real)

    @property
    def g_ep(self) -> float:
        return float(self.q[0, 1].real)

    @property
    def f_ep(self) -> float:
        return float(-2.0 * self.q[0, 1].imag)


def _even_solution(params: ModelParams):
    even, _ = parity_blocks(params)
    return even, eig_tridiagonal(even)


def qgt_spectral(params: ModelParams) -> QGTResult:
    """Geometric tensor from the spectral sum over the even-sector eigenbasis.

    Q_jk = sum_{n>0} <u0|dH_j|u_n><u_n|dH_k|u0> / (E_n - E_0)^2, assembled from
    the gauge-phased eigenvectors at the requested phi.
    """
    block, spec = _even_solution(params)
    lam, vec = spec.eigenvalues, spec.eigenvectors
    scale = max(1.0, float(np.max(np.abs(lam))))
    gap = float(lam[1] - lam[0])
    if gap <= GAP_FLOOR * scale:
        raise ValueError(f"sector gap {gap:.3e} is too small for the spectral sum")

    levels = block.index_map
    u0_full = embed_sector_vector(vec[:, 0], levels, params.dim, params.phi)
    ops = PerturbationOps.for_params(params)
    phase_conj = np.exp(0.5j * levels * params.phi)
    m_eps = vec.T @ (phase_conj * ops.apply_eps(u0_full)[levels])
    m_phi = vec.T @ (phase_conj * ops.apply_phi(u0_full)[levels])

    de2 = (lam[1:] - lam[0]) ** 2
    q_ee = float(np.sum(np.abs(m_eps[1:]) ** 2 / de2))
    q_pp = float(np.sum(np.abs(m_phi[1:]) ** 2 / de2))
    q_ep = complex(np.sum(np.conj(m_eps[1:]) * m_phi[1:] / de2))
    q = np.array([[q_ee, q_ep], [np.conj(q_ep), q_pp]])

    weights = vec[:, 0] ** 2
    mean_n = float(np.sum(levels * weights))
    var_n = float(np.sum(levels.astype(float) ** 2 * weights)) - mean_n**2
    tail = tail_weight(u0_full)
    return QGTResult(q=q, gap=gap, method="spectral", params=params,
                     mean_n=mean_n, var_n=var_n, tail_weight=tail,
                     cutoff_warning=bool(tail > TAIL_TOLERANCE))


def _even_ground_family(params: ModelParams):
    """State map (eps, phi) -> even ground vector, caching the eps solves."""
    cache: dict[float, tuple[np.ndarray, np.ndarray]] = {}

    def state(eps: float, phi: float) -> np.ndarray:
        key = float(eps)
        if key not in cache:
            block, spec = _even_solution(params.replace(eps=key, phi=0.0))
            cache[key] = (spec.eigenvectors[:, 0], block.index_map)
        vec, levels = cache[key]
        return embed_sector_vector(vec, levels, params.dim, phi)

    return state


def metric_overlap(params: ModelParams, step_eps: float = DEFAULT_STEP_EPS,
                   step_phi: float = DEFAULT_STEP_PHI) -> np.ndarray:
    """2x2 quantum metric from gauge-invariant overlap finite differences."""
    return metric_fd(_even_ground_family(params), params.eps, params.phi,
                     step_eps, step_phi)


def berry_plaquette(params: ModelParams, step_eps: float = DEFAULT_STEP_EPS,
                    step_phi: float = DEFAULT_STEP_PHI) -> float:
    """Berry curvature F_{eps,phi} from the overlap product around one plaquette."""
    return curvature_fd(_even_ground_family(params), params.eps, params.phi,
                        step_eps, step_phi)


def fidelity_susceptibility(params: ModelParams,
                            step_eps: float = DEFAULT_STEP_EPS) -> float:
    """chi_F = -2 ln F / h^2 under an eps shift; equals the g_ee metric entry."""
    return susceptibility_fd(_even_ground_family(params), params.eps, params.phi,
                             step_eps)


def gphiphi_variance(params: ModelParams) -> float:
    """Var(n)/4 on the ground state; the phase generator form of g_pp."""
    block, spec = _even_solution(params)
    weights = spec.eigenvectors[:, 0] ** 2
    levels = block.index_map.astype(float)
    mean_n = float(np.sum(levels * weights))
    return (float(np.sum(levels**2 * weights)) - mean_n**2) / 4.0
