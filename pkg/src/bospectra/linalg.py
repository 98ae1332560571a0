"""Dense Hermitian eigenvalues and complex linear solves.

Thin, contract-checked wrappers over LAPACK (via numpy/scipy).  The
contracts matter more than the factorizations behind them: eigenvalues come
back sorted descending with residuals at the machine-precision scale of the
matrix norm, solves use row pivoting and refuse numerically singular input.
"""

from __future__ import annotations

import warnings

import numpy as np
import scipy.linalg

HERMITIAN_TOL = 1e-12
SINGULAR_PIVOT_TOL = 1e-14


class NonHermitianError(ValueError):
    """Input matrix is not Hermitian within tolerance."""


class SingularMatrixError(ValueError):
    """Pivot collapsed during elimination; carries the pivot magnitude."""

    def __init__(self, pivot: float, scale: float):
        self.pivot = pivot
        self.scale = scale
        super().__init__(
            f"numerically singular matrix: pivot {pivot:.3e} below "
            f"{SINGULAR_PIVOT_TOL:.0e} * norm {scale:.3e}"
        )


class EigenSolveError(RuntimeError):
    """Eigenvalue iteration failed to converge."""


def validate_hermitian(a: np.ndarray, tol: float = HERMITIAN_TOL) -> None:
    a = np.asarray(a)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise NonHermitianError(f"expected a square matrix, got shape {a.shape}")
    scale = np.abs(a).max() if a.size else 0.0
    dev = np.abs(a - a.conj().T).max() if a.size else 0.0
    if dev > tol * max(scale, 1e-300):
        raise NonHermitianError(
            f"matrix deviates from Hermitian by {dev:.3e} "
            f"(allowed {tol:.0e} * {scale:.3e})"
        )


def hermitian_eigenvalues(a: np.ndarray) -> np.ndarray:
    """All eigenvalues of a Hermitian matrix, sorted descending.

    Deterministic for identical input.  Real symmetric input takes the real
    LAPACK path; complex Hermitian input the complex one.
    """
    a = np.asarray(a)
    validate_hermitian(a)
    if np.iscomplexobj(a) and np.abs(a.imag).max() == 0.0:
        a = a.real
    try:
        vals = np.linalg.eigvalsh(a)
    except np.linalg.LinAlgError as exc:
        raise EigenSolveError(
            f"eigenvalue iteration failed for dim {a.shape[0]} matrix with "
            f"max entry {np.abs(a).max():.3e}: {exc}"
        ) from exc
    return vals[::-1].copy()


def complex_solve(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Solve A x = b by LU with partial (row) pivoting.

    Raises :class:`SingularMatrixError` when the smallest pivot falls below
    ``SINGULAR_PIVOT_TOL`` times the 1-norm of A.
    """
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if b.shape[0] != a.shape[0]:
        raise ValueError(f"right-hand side length {b.shape[0]} does not match "
                         f"matrix dimension {a.shape[0]}")
    with warnings.catch_warnings():
        # the pivot check below raises on the condition scipy warns about
        warnings.simplefilter("ignore", scipy.linalg.LinAlgWarning)
        lu, piv = scipy.linalg.lu_factor(a, check_finite=False)
    scale = np.linalg.norm(a, 1)
    pivot = np.abs(np.diag(lu)).min() if a.size else 0.0
    if pivot < SINGULAR_PIVOT_TOL * max(scale, 1e-300):
        raise SingularMatrixError(float(pivot), float(scale))
    return scipy.linalg.lu_solve((lu, piv), b, check_finite=False)
