"""Numerical laboratory for GMRES convergence bounds.

Computes, for small dense matrices, the actual GMRES residual curve, the
worst-case GMRES value over initial residuals, and the ideal GMRES value
(polynomial norm minimization), together with field-of-values data, and
checks the classical convergence bounds against all three.
"""

from .bounds import (
    DEFAULT_SLACKS,
    BoundsReport,
    ChainSlacks,
    Verdict,
    elman_bound,
    starke_bound,
    verify_chain,
)
from .dense_core import (
    DEFAULT_TOLERANCES,
    EigenSpectrum,
    KernelTolerances,
    eig_hermitian,
    evaluate_residual_polynomial,
    hermitian_part,
    matrix_inverse,
    solve_linear,
    spectral_norm,
)
from .errors import (
    BudgetExceeded,
    DegenerateImage,
    FileError,
    InvalidSpec,
    LabError,
    NoConvergence,
    NotHermitian,
    ParseError,
    SingularMatrix,
    UnsupportedFormat,
    ZeroVector,
)
from .experiment import ExperimentConfig, load_config, run_experiment
from .fov import (
    FovBoundary,
    FovSummary,
    NuResult,
    fov_boundary,
    fov_summary,
    nu_fov,
    nu_fov_inverse,
    rayleigh,
    support_extremes,
)
from .krylov import (
    ArnoldiDecomposition,
    ProblemInstance,
    ResidualCurve,
    arnoldi,
    gmres_residuals,
    min_residual_over_polys,
    optimal_alpha,
)
from .matrices import MatrixSpec, generate_matrix
from .minimax import (
    MinimaxResult,
    OneStepIdealResult,
    SolverOptions,
    ideal_gmres,
    one_step_ideal,
    scalar_minimax_oracle,
    worst_case_gmres,
)
from .mmio import read_matrix_market, write_matrix_market

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # errors
    "LabError",
    "ZeroVector",
    "NotHermitian",
    "NoConvergence",
    "SingularMatrix",
    "DegenerateImage",
    "BudgetExceeded",
    "InvalidSpec",
    "ParseError",
    "UnsupportedFormat",
    "FileError",
    # dense kernels
    "KernelTolerances",
    "DEFAULT_TOLERANCES",
    "EigenSpectrum",
    "hermitian_part",
    "eig_hermitian",
    "spectral_norm",
    "solve_linear",
    "matrix_inverse",
    "evaluate_residual_polynomial",
    # field of values
    "FovBoundary",
    "FovSummary",
    "NuResult",
    "rayleigh",
    "support_extremes",
    "fov_boundary",
    "nu_fov",
    "nu_fov_inverse",
    "fov_summary",
    # Krylov / GMRES
    "ProblemInstance",
    "ArnoldiDecomposition",
    "ResidualCurve",
    "arnoldi",
    "gmres_residuals",
    "min_residual_over_polys",
    "optimal_alpha",
    # minimization
    "SolverOptions",
    "MinimaxResult",
    "OneStepIdealResult",
    "ideal_gmres",
    "worst_case_gmres",
    "one_step_ideal",
    "scalar_minimax_oracle",
    # bounds
    "ChainSlacks",
    "DEFAULT_SLACKS",
    "Verdict",
    "BoundsReport",
    "elman_bound",
    "starke_bound",
    "verify_chain",
    # matrices and I/O
    "MatrixSpec",
    "generate_matrix",
    "read_matrix_market",
    "write_matrix_market",
    # experiments
    "ExperimentConfig",
    "load_config",
    "run_experiment",
]
