"""Dense complex linear algebra kernels for small matrices.

Everything here operates on square ``complex128`` NumPy arrays at sizes
where dense O(n^3) work is instantaneous (n up to a few hundred).  Real
input is accepted everywhere and is promoted to complex storage; there is
no separate real code path.  The inner product convention is
``<x, y> = y^H x`` (conjugate-linear in the second argument) throughout
the package.

All tolerances are relative to a natural scale of the operand and live in
one configuration record, :class:`KernelTolerances`.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NoConvergence, NotHermitian, SingularMatrix

__all__ = [
    "KernelTolerances",
    "DEFAULT_TOLERANCES",
    "EigenSpectrum",
    "as_matrix",
    "hermitian_part",
    "eig_hermitian",
    "spectral_norm",
    "top_singular_triple",
    "solve_linear",
    "matrix_inverse",
    "evaluate_residual_polynomial",
]


@dataclass(frozen=True)
class KernelTolerances:
    """Relative tolerances shared by the dense kernels.

    hermitian_check
        Symmetry gate of :func:`eig_hermitian`: the defect ``||M - M^H||_F``
        may not exceed ``hermitian_check * ||M||_F``.
    pivot_floor
        Pivot magnitude below which :func:`solve_linear` declares the matrix
        numerically singular, relative to ``||A||_inf``.
    breakdown
        Arnoldi basis-vector floor used by the Krylov layer, relative to
        ``||A||_2``.  Kept here so every tolerance lives in one record.
    """

    hermitian_check: float = 1e-12
    pivot_floor: float = 1e-14
    breakdown: float = 1e-13


DEFAULT_TOLERANCES = KernelTolerances()


@dataclass(frozen=True)
class EigenSpectrum:
    """Eigendecomposition of a Hermitian matrix.

    ``values`` are real and ascending; column ``vectors[:, i]`` is a unit
    eigenvector paired with ``values[i]``.
    """

    values: np.ndarray
    vectors: np.ndarray


def as_matrix(a) -> np.ndarray:
    """Validate and promote ``a`` to a square ``complex128`` array."""
    m = np.asarray(a, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    if not (np.all(np.isfinite(m.real)) and np.all(np.isfinite(m.imag))):
        raise ValueError("matrix entries must be finite")
    return m


def hermitian_part(a) -> np.ndarray:
    """Return ``(A + A^H) / 2``.

    The result is Hermitian by construction; storage is symmetrized so the
    output passes the symmetry gate of :func:`eig_hermitian` exactly.
    """
    m = as_matrix(a)
    return 0.5 * (m + m.conj().T)


def eig_hermitian(m, tol: KernelTolerances = DEFAULT_TOLERANCES) -> EigenSpectrum:
    """Full eigendecomposition of a Hermitian matrix.

    Parameters
    ----------
    m : array_like
        Square matrix, Hermitian up to ``tol.hermitian_check`` relative to
        its Frobenius norm.
    tol : KernelTolerances

    Returns
    -------
    EigenSpectrum
        Real ascending eigenvalues and orthonormal eigenvector columns.

    Raises
    ------
    NotHermitian
        If the symmetry defect exceeds the gate.
    NoConvergence
        If the underlying LAPACK driver fails to converge.
    """
    a = as_matrix(m)
    scale = float(np.linalg.norm(a, "fro"))
    defect = float(np.linalg.norm(a - a.conj().T, "fro"))
    if defect > tol.hermitian_check * max(scale, np.finfo(float).tiny):
        raise NotHermitian(
            f"symmetry defect {defect:.3e} exceeds {tol.hermitian_check:.1e} * ||M||_F"
        )
    # Symmetrize storage so the tolerated skew part cannot leak into the result.
    a = 0.5 * (a + a.conj().T)
    try:
        values, vectors = np.linalg.eigh(a)
    except np.linalg.LinAlgError as exc:
        raise NoConvergence(f"Hermitian eigensolver did not converge: {exc}") from exc
    return EigenSpectrum(values, vectors)


def spectral_norm(a, tol: KernelTolerances = DEFAULT_TOLERANCES) -> float:
    """Spectral norm ``||A||_2 = sqrt(lambda_max(A^H A))``."""
    m = as_matrix(a)
    gram = m.conj().T @ m
    spectrum = eig_hermitian(gram, tol)
    return float(np.sqrt(max(float(spectrum.values[-1]), 0.0)))


def top_singular_triple(a, tol: KernelTolerances = DEFAULT_TOLERANCES):
    """Dominant singular triple ``(sigma, u, w)`` with ``A w = sigma u``.

    Computed from the eigendecomposition of ``A^H A``, consistent with
    :func:`spectral_norm`.  When ``sigma`` vanishes the left vector ``u``
    defaults to the first coordinate direction.
    """
    m = as_matrix(a)
    gram = m.conj().T @ m
    spectrum = eig_hermitian(gram, tol)
    w = spectrum.vectors[:, -1]
    z = m @ w
    sigma = float(np.linalg.norm(z))
    if sigma > 0.0:
        u = z / sigma
    else:
        u = np.zeros_like(w)
        u[0] = 1.0
    return sigma, u, w


def solve_linear(a, b, tol: KernelTolerances = DEFAULT_TOLERANCES) -> np.ndarray:
    """Solve ``A x = b`` by Gaussian elimination with partial pivoting.

    ``b`` may be a vector or a matrix of stacked right-hand sides; the
    result has the same shape.  A pivot of magnitude at most
    ``tol.pivot_floor * ||A||_inf`` raises :class:`SingularMatrix`.
    """
    m = as_matrix(a)
    rhs = np.asarray(b, dtype=np.complex128)
    vector_input = rhs.ndim == 1
    if vector_input:
        rhs = rhs[:, None]
    if rhs.ndim != 2 or rhs.shape[0] != m.shape[0]:
        raise ValueError(
            f"right-hand side shape {rhs.shape} does not match matrix order {m.shape[0]}"
        )
    n = m.shape[0]
    scale = float(np.linalg.norm(m, np.inf)) if n else 0.0
    floor = tol.pivot_floor * scale
    lu = m.copy()
    x = rhs.copy()
    for col in range(n):
        p = col + int(np.argmax(np.abs(lu[col:, col])))
        if abs(lu[p, col]) <= floor:
            raise SingularMatrix(
                f"pivot {abs(lu[p, col]):.3e} at column {col} is below "
                f"{tol.pivot_floor:.1e} * ||A||_inf"
            )
        if p != col:
            lu[[col, p]] = lu[[p, col]]
            x[[col, p]] = x[[p, col]]
        factors = lu[col + 1 :, col] / lu[col, col]
        lu[col + 1 :, col:] -= factors[:, None] * lu[col, col:]
        x[col + 1 :] -= factors[:, None] * x[col]
    for col in range(n - 1, -1, -1):
        x[col] = (x[col] - lu[col, col + 1 :] @ x[col + 1 :]) / lu[col, col]
    return x[:, 0] if vector_input else x


def matrix_inverse(a, tol: KernelTolerances = DEFAULT_TOLERANCES) -> np.ndarray:
    """Explicit inverse via :func:`solve_linear` on the identity."""
    m = as_matrix(a)
    return solve_linear(m, np.eye(m.shape[0], dtype=np.complex128), tol)


def evaluate_residual_polynomial(a, coefficients) -> np.ndarray:
    """Evaluate ``p(A) = I + c_1 A + ... + c_k A^k`` by Horner recurrence.

    ``coefficients`` holds ``c_1 .. c_k``; an empty list gives the identity.
    The constant term is pinned to one, which is the normalization
    ``p(0) = 1`` shared by every residual polynomial in this package.
    """
    m = as_matrix(a)
    c = np.asarray(coefficients, dtype=np.complex128).ravel()
    n = m.shape[0]
    eye = np.eye(n, dtype=np.complex128)
    if c.size == 0:
        return eye
    if c.size > 8:
        raise ValueError("monomial-basis evaluation is limited to degree 8")
    q = c[-1] * eye
    for cj in c[-2::-1]:
        q = cj * eye + m @ q
    return eye + m @ q
