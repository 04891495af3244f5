"""Symmetric-matrix spectral machinery.

Everything else in the package is built on the operations here:
eigendecomposition, inertia counting, the signature involution with the
kernel signed ``+1``, fractional moduli ``|A|^p``, Moore-Penrose powers
``|A|^{[-p]}``, range-inclusion factorization, Loewner-order comparison,
and a small kit of orthonormal-subspace helpers.

All functions are pure: they accept plain ``numpy`` arrays (or array
likes), never mutate their arguments, and return fresh arrays.  Matrices
are real; the adjoint is the transpose.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, EigenSolverError, InvalidInput
from .tolerances import ToleranceProfile, resolve

__all__ = [
    "Inertia",
    "SpectralDecomposition",
    "as_matrix",
    "as_symmetric",
    "symmetrize",
    "norm2",
    "spectral_decompose",
    "inertia_of",
    "inertia_from_eigenvalues",
    "negativity",
    "signature_of",
    "modulus_power",
    "moore_penrose_power",
    "pinv_symmetric",
    "range_factor",
    "loewner_leq",
    "orthonormal_columns",
    "complement_basis",
    "nullspace_basis",
    "rank_of",
    "projector",
    "subspace_distance",
    "subspaces_equal",
    "intersect_subspaces",
    "signed_eigenbases",
]


@dataclass(frozen=True)
class Inertia:
    """Counts of positive, negative, and zero eigenvalues.

    ``n_inf`` is the dimension of the multivalued part; it is zero for
    matrices and only nonzero for linear relations.
    """

    n_plus: int
    n_minus: int
    n_zero: int
    n_inf: int = 0


@dataclass(frozen=True)
class SpectralDecomposition:
    """Eigenvalues (ascending) and an orthonormal eigenvector matrix."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def reconstruct(self) -> np.ndarray:
        v = self.eigenvectors
        return v @ np.diag(self.eigenvalues) @ v.T


def as_matrix(a) -> np.ndarray:
    """Coerce to a finite 2-D float array."""
    arr = np.asarray(a, dtype=float)
    if arr.ndim != 2:
        raise InvalidInput(f"expected a 2-D matrix, got ndim={arr.ndim}")
    if arr.size and not np.all(np.isfinite(arr)):
        raise InvalidInput("matrix has non-finite entries")
    return arr


def as_symmetric(a, tol: ToleranceProfile | None = None) -> np.ndarray:
    """Coerce to a symmetric matrix, symmetrizing within tolerance.

    The asymmetry ``max|A - A^T|`` must not exceed
    ``residual * (1 + max|A|)``; larger defects are rejected rather than
    silently averaged away.
    """
    tol = resolve(tol)
    arr = as_matrix(a)
    n, m = arr.shape
    if n != m:
        raise InvalidInput(f"expected a square matrix, got shape {arr.shape}")
    if n == 0:
        return arr
    gap = float(np.max(np.abs(arr - arr.T)))
    scale = 1.0 + float(np.max(np.abs(arr)))
    if gap > tol.residual * scale:
        raise InvalidInput(f"matrix is not symmetric: max asymmetry {gap:.3e}")
    return (arr + arr.T) / 2.0


def symmetrize(a) -> np.ndarray:
    """Average away roundoff asymmetry without validation."""
    arr = np.asarray(a, dtype=float)
    return (arr + arr.T) / 2.0


def norm2(a) -> float:
    """Spectral norm; zero for empty matrices."""
    arr = np.asarray(a, dtype=float)
    if arr.size == 0:
        return 0.0
    return float(np.linalg.norm(arr, 2))


def spectral_decompose(a, tol: ToleranceProfile | None = None) -> SpectralDecomposition:
    """Eigendecomposition of a symmetric matrix.

    Raises :class:`EigenSolverError` if the solver fails to converge.
    """
    sym = as_symmetric(a, tol)
    try:
        w, v = np.linalg.eigh(sym)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - pathological input
        raise EigenSolverError(str(exc)) from exc
    return SpectralDecomposition(w, v)


def _zero_threshold(eigenvalues: np.ndarray, tol: ToleranceProfile, floor: float = 0.0) -> float:
    """Zero-classification threshold, relative to the spectrum with an optional floor.

    The floor guards constructions whose result is an exact zero matrix up
    to roundoff (defect forms at theorem boundaries): there the spectrum
    itself carries no scale and the caller supplies one.
    """
    if eigenvalues.size == 0:
        return 0.0
    scale = max(float(np.max(np.abs(eigenvalues))), floor)
    return tol.zero * eigenvalues.size * scale


def inertia_from_eigenvalues(
    eigenvalues, tol: ToleranceProfile | None = None, floor: float = 0.0
) -> Inertia:
    tol = resolve(tol)
    w = np.asarray(eigenvalues, dtype=float)
    thr = _zero_threshold(w, tol, floor)
    n_minus = int(np.count_nonzero(w < -thr))
    n_plus = int(np.count_nonzero(w > thr))
    return Inertia(n_plus, n_minus, w.size - n_plus - n_minus, 0)


def inertia_of(a, tol: ToleranceProfile | None = None, floor: float = 0.0) -> Inertia:
    """Inertia of a symmetric matrix.

    Eigenvalues with ``|lambda| <= zero * dim * norm`` classify as zero; a
    positive ``floor`` replaces the norm when the matrix itself is smaller.
    """
    return inertia_from_eigenvalues(spectral_decompose(a, tol).eigenvalues, tol, floor)


def negativity(a, tol: ToleranceProfile | None = None, floor: float = 0.0) -> int:
    """Number of negative eigenvalues (the negative index)."""
    return inertia_of(a, tol, floor).n_minus


def signature_of(a, tol: ToleranceProfile | None = None, floor: float = 0.0) -> np.ndarray:
    """Signature involution ``J`` with the kernel signed ``+1``.

    ``J`` is orthogonal, ``J^2 = I``, and ``J |A| = A`` up to the zero
    classification threshold.
    """
    tol = resolve(tol)
    dec = spectral_decompose(a, tol)
    thr = _zero_threshold(dec.eigenvalues, tol, floor)
    signs = np.where(dec.eigenvalues >= -thr, 1.0, -1.0)
    v = dec.eigenvectors
    return symmetrize(v @ np.diag(signs) @ v.T)


def modulus_power(a, p: float, tol: ToleranceProfile | None = None, floor: float = 0.0) -> np.ndarray:
    """Return ``|A|^p`` through the eigendecomposition; requires ``p >= 0``.

    With the default ``floor`` the eigenvalues are powered exactly.  A
    positive ``floor`` zeroes eigenvalues below the floored threshold
    first, so a matrix that is zero up to roundoff at the caller's scale
    has an exactly vanishing power (fractional powers amplify noise
    otherwise).
    """
    if p < 0:
        raise InvalidInput(f"modulus power requires p >= 0, got {p}")
    tol = resolve(tol)
    dec = spectral_decompose(a, tol)
    w = dec.eigenvalues
    if floor > 0.0:
        thr = _zero_threshold(w, tol, floor)
        w = np.where(np.abs(w) > thr, w, 0.0)
    vals = np.abs(w) ** p
    v = dec.eigenvectors
    return symmetrize(v @ np.diag(vals) @ v.T)


def moore_penrose_power(
    a, p: float, tol: ToleranceProfile | None = None, floor: float = 0.0
) -> np.ndarray:
    """Return ``|A|^{[-p]}``, the Moore-Penrose inverse of ``|A|^p``.

    Eigenvalues at or below the zero threshold map to zero, so the result
    vanishes on the kernel of ``A`` and maps into its range.
    """
    if p <= 0:
        raise InvalidInput(f"Moore-Penrose power requires p > 0, got {p}")
    tol = resolve(tol)
    dec = spectral_decompose(a, tol)
    thr = _zero_threshold(dec.eigenvalues, tol, floor)
    absw = np.abs(dec.eigenvalues)
    safe = np.where(absw > thr, absw, 1.0)
    vals = np.where(absw > thr, safe ** (-p), 0.0)
    v = dec.eigenvectors
    return symmetrize(v @ np.diag(vals) @ v.T)


def pinv_symmetric(a, tol: ToleranceProfile | None = None, floor: float = 0.0) -> np.ndarray:
    """Sign-respecting Moore-Penrose inverse of a symmetric matrix."""
    tol = resolve(tol)
    dec = spectral_decompose(a, tol)
    thr = _zero_threshold(dec.eigenvalues, tol, floor)
    w = dec.eigenvalues
    safe = np.where(np.abs(w) > thr, w, 1.0)
    vals = np.where(np.abs(w) > thr, 1.0 / safe, 0.0)
    v = dec.eigenvectors
    return symmetrize(v @ np.diag(vals) @ v.T)


def range_factor(m, b, tol: ToleranceProfile | None = None) -> np.ndarray | None:
    """Solve ``M S = B`` when the columns of ``B`` lie in ``ran M``.

    ``M`` is symmetric (in practice a nonnegative half power).  Returns the
    Moore-Penrose solution ``S`` with ``ran S`` inside ``ran M``, or ``None``
    when the inclusion fails, decided by the least-squares residual
    ``|M S - B| <= residual * (1 + |B|)``.
    """
    tol = resolve(tol)
    m_sym = as_symmetric(m, tol)
    b_arr = as_matrix(b)
    if b_arr.shape[0] != m_sym.shape[0]:
        raise DimensionMismatch(
            f"row count of B ({b_arr.shape[0]}) must equal dim of M ({m_sym.shape[0]})"
        )
    s = pinv_symmetric(m_sym, tol) @ b_arr
    residual = norm2(m_sym @ s - b_arr)
    if residual > tol.residual * (1.0 + norm2(b_arr)):
        return None
    return s


def range_factor_residual(m, b, tol: ToleranceProfile | None = None) -> float:
    """Least-squares residual of the best range factor (for diagnostics)."""
    tol = resolve(tol)
    m_sym = as_symmetric(m, tol)
    b_arr = as_matrix(b)
    s = pinv_symmetric(m_sym, tol) @ b_arr
    return norm2(m_sym @ s - b_arr)


def loewner_leq(a, b, tol: ToleranceProfile | None = None) -> bool:
    """Loewner order test ``A <= B`` with relative slack.

    True iff the minimal eigenvalue of ``B - A`` is at least
    ``-psd * (1 + |A| + |B|)``.
    """
    tol = resolve(tol)
    a_sym = as_symmetric(a, tol)
    b_sym = as_symmetric(b, tol)
    if a_sym.shape != b_sym.shape:
        raise DimensionMismatch(f"shapes {a_sym.shape} and {b_sym.shape} differ")
    if a_sym.shape[0] == 0:
        return True
    diff = np.linalg.eigvalsh(symmetrize(b_sym - a_sym))
    slack = tol.psd * (1.0 + norm2(a_sym) + norm2(b_sym))
    return bool(diff[0] >= -slack)


# ---------------------------------------------------------------------------
# subspace helpers


def orthonormal_columns(m, tol: ToleranceProfile | None = None, floor: float = 0.0) -> np.ndarray:
    """Orthonormal basis of the column span, via SVD with relative cutoff."""
    tol = resolve(tol)
    arr = as_matrix(m)
    if arr.shape[1] == 0 or norm2(arr) == 0.0:
        return np.zeros((arr.shape[0], 0))
    u, s, _ = np.linalg.svd(arr, full_matrices=False)
    thr = tol.zero * max(arr.shape) * max(s[0], floor)
    return u[:, s > thr]


def complement_basis(q, n: int | None = None) -> np.ndarray:
    """Orthonormal basis of the orthogonal complement of orthonormal ``q``."""
    arr = as_matrix(q)
    dim = arr.shape[0] if n is None else n
    if arr.shape[1] == 0:
        return np.eye(dim)
    u, _, _ = np.linalg.svd(arr, full_matrices=True)
    return u[:, arr.shape[1]:]


def nullspace_basis(m, tol: ToleranceProfile | None = None) -> np.ndarray:
    """Orthonormal basis of the kernel of a general matrix."""
    tol = resolve(tol)
    arr = as_matrix(m)
    cols = arr.shape[1]
    if cols == 0:
        return np.zeros((0, 0))
    if arr.shape[0] == 0 or norm2(arr) == 0.0:
        return np.eye(cols)
    _, s, vt = np.linalg.svd(arr, full_matrices=True)
    thr = tol.zero * max(arr.shape) * s[0]
    rank = int(np.count_nonzero(s > thr))
    return vt.T[:, rank:]


def rank_of(m, tol: ToleranceProfile | None = None) -> int:
    tol = resolve(tol)
    arr = as_matrix(m)
    if arr.size == 0 or norm2(arr) == 0.0:
        return 0
    s = np.linalg.svd(arr, compute_uv=False)
    thr = tol.zero * max(arr.shape) * s[0]
    return int(np.count_nonzero(s > thr))


def projector(q) -> np.ndarray:
    """Orthogonal projector onto the span of orthonormal columns."""
    arr = as_matrix(q)
    return arr @ arr.T


def subspace_distance(q1, q2) -> float:
    """Spectral-norm distance between the orthogonal projectors."""
    return norm2(projector(q1) - projector(q2))


def subspaces_equal(q1, q2, tol: ToleranceProfile | None = None) -> bool:
    tol = resolve(tol)
    return subspace_distance(q1, q2) <= tol.subspace


def intersect_subspaces(q1, q2, tol: ToleranceProfile | None = None) -> np.ndarray:
    """Orthonormal basis of the intersection of two spans.

    Inputs are orthonormal bases; intersection directions are the near-null
    right-singular vectors of ``[Q1, -Q2]``.
    """
    tol = resolve(tol)
    b1 = as_matrix(q1)
    b2 = as_matrix(q2)
    n = b1.shape[0]
    if b1.shape[1] == 0 or b2.shape[1] == 0:
        return np.zeros((n, 0))
    stacked = np.hstack([b1, -b2])
    _, s, vt = np.linalg.svd(stacked, full_matrices=True)
    k = vt.shape[0]
    small = np.zeros(k, dtype=bool)
    small[s.size:] = True
    small[: s.size] = s <= tol.subspace
    coeff = vt.T[:, small]
    if coeff.shape[1] == 0:
        return np.zeros((n, 0))
    return orthonormal_columns(b1 @ coeff[: b1.shape[1], :], tol)


def signed_eigenbases(a, tol: ToleranceProfile | None = None, floor: float = 0.0):
    """Orthonormal bases of the positive, negative, and zero eigenspaces."""
    tol = resolve(tol)
    dec = spectral_decompose(a, tol)
    thr = _zero_threshold(dec.eigenvalues, tol, floor)
    w, v = dec.eigenvalues, dec.eigenvectors
    return v[:, w > thr], v[:, w < -thr], v[:, np.abs(w) <= thr]
