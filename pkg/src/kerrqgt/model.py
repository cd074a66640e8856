"""Truncated Fock-space model of a parametrically driven Kerr resonator.

The Hamiltonian (hbar = 1) is

    H = K adag^2 a^2 + delta adag a - (delta*eps/2) (e^{-i phi} adag^2 + e^{i phi} a^2),

kept on the truncated basis {|0>, ..., |n_cut>}.  The two-photon drive only
couples Fock levels n and n+2, so the matrix is pentadiagonal with an empty
first off-diagonal and splits into even/odd parity blocks.  A diagonal gauge
rotation with phases e^{i n phi / 2} removes the drive phase, leaving real
symmetric tridiagonal blocks whose off-diagonal entries are non-positive.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

# Tail-weight gate: total ground-state weight allowed on the last few levels
# before a truncation is considered inadequate.
TAIL_LEVELS = 10
TAIL_TOLERANCE = 1e-12

NORM_TOLERANCE = 1e-10


@dataclass(frozen=True)
class ModelParams:
    """Physical parameters of one model instance.

    delta : drive detuning (sets the overall frequency scale), > 0.
    kerr  : Kerr nonlinearity K >= 0 in the same units as delta.
    eps   : dimensionless two-photon drive amplitude, >= 0.
    phi   : drive phase in radians (conventionally in [0, 2*pi)).
    n_cut : highest retained Fock level; the basis dimension is n_cut + 1.
    """

    delta: float
    kerr: float
    eps: float
    phi: float = 0.0
    n_cut: int = 800

    def __post_init__(self):
        if not np.isfinite(self.delta) or self.delta <= 0:
            raise ValueError(f"delta must be positive, got {self.delta}")
        if not np.isfinite(self.kerr) or self.kerr < 0:
            raise ValueError(f"kerr must be >= 0, got {self.kerr}")
        if not np.isfinite(self.eps) or self.eps < 0:
            raise ValueError(f"eps must be >= 0, got {self.eps}")
        if not np.isfinite(self.phi):
            raise ValueError("phi must be finite")
        if int(self.n_cut) != self.n_cut or self.n_cut < 4:
            raise ValueError(f"n_cut must be an integer >= 4, got {self.n_cut}")

    @property
    def dim(self) -> int:
        return int(self.n_cut) + 1

    @property
    def effective_size(self) -> float:
        """Effective system size delta / K; the thermodynamic limit is reached as it grows."""
        if self.kerr == 0:
            raise ValueError("effective size is undefined for kerr = 0")
        return self.delta / self.kerr

    @classmethod
    def from_size(cls, size: float, eps: float, phi: float = 0.0,
                  n_cut: int = 800, delta: float = 1.0) -> "ModelParams":
        """Build parameters at a given effective size L = delta / K."""
        if size <= 0:
            raise ValueError(f"size must be positive, got {size}")
        return cls(delta=delta, kerr=delta / size, eps=eps, phi=phi, n_cut=n_cut)

    def replace(self, **kw) -> "ModelParams":
        fields = dict(delta=self.delta, kerr=self.kerr, eps=self.eps,
                      phi=self.phi, n_cut=self.n_cut)
        fields.update(kw)
        return ModelParams(**fields)


def pair_coupling(n):
    """Two-photon matrix element sqrt((n+1)(n+2)) for |n> -> |n+2>."""
    n = np.asarray(n, dtype=float)
    return np.sqrt((n + 1.0) * (n + 2.0))


@dataclass(frozen=True)
class BandedHermitian:
    """Hermitian matrix stored as main diagonal plus the offset-2 band.

    band2[n] is the element <n+2|H|n>; Hermiticity fixes <n|H|n+2> to its
    conjugate.  All other off-diagonal entries are identically zero.
    """

    dim: int
    diag: np.ndarray
    band2: np.ndarray

    def __post_init__(self):
        if self.diag.shape != (self.dim,) or self.band2.shape != (self.dim - 2,):
            raise ValueError("inconsistent band shapes")

    def apply(self, state: np.ndarray) -> np.ndarray:
        out = self.diag * state
        out = out.astype(np.result_type(out, self.band2, state))
        out[2:] += self.band2 * state[:-2]
        out[:-2] += np.conj(self.band2) * state[2:]
        return out

    def to_dense(self) -> np.ndarray:
        """Dense realization; debug/cross-validation path only."""
        h = np.zeros((self.dim, self.dim), dtype=complex)
        h[np.arange(self.dim), np.arange(self.dim)] = self.diag
        idx = np.arange(self.dim - 2)
        h[idx + 2, idx] = self.band2
        h[idx, idx + 2] = np.conj(self.band2)
        return h


@dataclass(frozen=True)
class TridiagonalBlock:
    """One parity sector after the gauge rotation: real symmetric tridiagonal.

    index_map[m] is the Fock level represented by sector index m (2m for the
    even block, 2m+1 for the odd one).  offdiag entries are <= 0 for eps > 0.
    """

    parity: str
    size: int
    diag: np.ndarray
    offdiag: np.ndarray
    index_map: np.ndarray

    def __post_init__(self):
        if self.parity not in ("even", "odd"):
            raise ValueError(f"parity must be 'even' or 'odd', got {self.parity}")
        if self.diag.shape != (self.size,) or self.offdiag.shape != (self.size - 1,):
            raise ValueError("inconsistent block shapes")


def build_hamiltonian(params: ModelParams) -> BandedHermitian:
    """Assemble the banded Hamiltonian on the truncated Fock basis."""
    n = np.arange(params.dim, dtype=float)
    diag = params.kerr * n * (n - 1.0) + params.delta * n
    amp = -(params.delta * params.eps / 2.0) * np.exp(-1j * params.phi)
    band2 = amp * pair_coupling(n[:-2])
    return BandedHermitian(dim=params.dim, diag=diag, band2=band2)


def parity_blocks(params: ModelParams) -> tuple[TridiagonalBlock, TridiagonalBlock]:
    """Gauge-rotated parity sectors of the Hamiltonian.

    The returned blocks are independent of phi: the diagonal unitary with
    phases e^{i n phi / 2} maps H(eps, phi) to H(eps, 0), whose sectors are
    real tridiagonal with off-diagonal -(delta*eps/2) sqrt((n+1)(n+2)).
    """
    blocks = []
    for parity, start in (("even", 0), ("odd", 1)):
        levels = np.arange(start, params.n_cut + 1, 2, dtype=float)
        diag = params.kerr * levels * (levels - 1.0) + params.delta * levels
        off = -(params.delta * params.eps / 2.0) * pair_coupling(levels[:-1])
        blocks.append(TridiagonalBlock(parity=parity, size=len(levels), diag=diag,
                                       offdiag=off, index_map=levels.astype(int)))
    return blocks[0], blocks[1]


def apply_gauge_phases(state: np.ndarray, phi: float) -> np.ndarray:
    """Multiply component n by e^{-i n phi / 2}.

    Maps eigenvectors of H(eps, 0) to eigenvectors of H(eps, phi); a diagonal
    unitary, so norms are preserved.
    """
    n = np.arange(len(state))
    return np.asarray(state, dtype=complex) * np.exp(-0.5j * n * phi)


def _check_normalized(state: np.ndarray) -> np.ndarray:
    state = np.asarray(state)
    norm = float(np.linalg.norm(state))
    if abs(norm - 1.0) > NORM_TOLERANCE:
        raise ValueError(f"state is not normalized: |norm - 1| = {abs(norm - 1.0):.3e}")
    return state


def mean_photon(state: np.ndarray) -> float:
    """<n> of a normalized Fock-basis state."""
    state = _check_normalized(state)
    n = np.arange(len(state))
    return float(np.sum(n * np.abs(state) ** 2))


def photon_variance(state: np.ndarray) -> float:
    """Var(n) of a normalized Fock-basis state."""
    state = _check_normalized(state)
    n = np.arange(len(state))
    p = np.abs(state) ** 2
    m = float(np.sum(n * p))
    return float(np.sum(n * n * p)) - m * m


def rho(state: np.ndarray, size: float) -> float:
    """Rescaled photon number <n>/L, the order parameter of the transition."""
    if size <= 0:
        raise ValueError(f"size must be positive, got {size}")
    return mean_photon(state) / size


def tail_weight(state: np.ndarray, n_last: int = TAIL_LEVELS) -> float:
    """Probability weight on the highest n_last retained levels."""
    return float(np.sum(np.abs(np.asarray(state)[-n_last:]) ** 2))
