"""Ground-state geometry of a parametrically driven Kerr resonator.

Exact diagonalization in the truncated Fock basis, the quantum geometric
tensor over the drive coordinates by spectral sums and gauge-invariant
finite differences, closed-form oracles in both phases, and the full
finite-size-scaling analysis (critical point, exponents, data collapse,
cutoff scaling at zero nonlinearity).
"""

__version__ = "0.1.0"

from .errors import (
    BracketError,
    CutoffError,
    EigenConvergenceError,
    FitError,
    SchemaError,
    StepSizeError,
    WindowError,
)
from .model import (
    BandedHermitian,
    ModelParams,
    TridiagonalBlock,
    apply_gauge_phases,
    build_hamiltonian,
    mean_photon,
    pair_coupling,
    parity_blocks,
    photon_variance,
    rho,
    tail_weight,
)
from .eigensolver import (
    GroundState,
    Spectrum,
    dense_eigenvalues,
    eig_tridiagonal,
    ground_state,
    sector_spectra,
)
from .oracle import (
    NormalPhaseSolution,
    SuperradiantSolution,
    displaced_squeezed_cat,
    displaced_squeezed_fock,
    normal_phase,
    normal_phase_qgt_limit,
    squeezed_vacuum_fock,
    superradiant_phase,
)
from .qgt import (
    PerturbationOps,
    QGTResult,
    berry_plaquette,
    fidelity_susceptibility,
    gphiphi_variance,
    metric_overlap,
    qgt_spectral,
)
from .scaling import (
    CollapseOptimum,
    CurveFamily,
    K0Report,
    PowerLawFit,
    ScalingReport,
    ShiftedPowerFit,
    collapse_objective,
    extrapolate_critical_point,
    fit_power_law,
    k0_pipeline,
    locate_peak,
    nu_convergence,
    optimize_collapse,
    pair_slopes,
    perturbation_dimensions,
    scaling_pipeline,
)

__all__ = [
    "__version__",
    "BandedHermitian", "ModelParams", "TridiagonalBlock",
    "apply_gauge_phases", "build_hamiltonian", "mean_photon", "pair_coupling",
    "parity_blocks", "photon_variance", "rho", "tail_weight",
    "GroundState", "Spectrum", "dense_eigenvalues", "eig_tridiagonal",
    "ground_state", "sector_spectra",
    "NormalPhaseSolution", "SuperradiantSolution", "displaced_squeezed_cat",
    "displaced_squeezed_fock", "normal_phase", "normal_phase_qgt_limit",
    "squeezed_vacuum_fock", "superradiant_phase",
    "PerturbationOps", "QGTResult", "berry_plaquette", "fidelity_susceptibility",
    "gphiphi_variance", "metric_overlap", "qgt_spectral",
    "CollapseOptimum", "CurveFamily", "K0Report", "PowerLawFit", "ScalingReport",
    "ShiftedPowerFit", "collapse_objective", "extrapolate_critical_point",
    "fit_power_law", "k0_pipeline", "locate_peak", "nu_convergence",
    "optimize_collapse", "pair_slopes", "perturbation_dimensions",
    "scaling_pipeline",
    "BracketError", "CutoffError", "EigenConvergenceError", "FitError",
    "SchemaError", "StepSizeError", "WindowError",
]
