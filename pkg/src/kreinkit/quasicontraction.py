"""Extremal selfadjoint extensions of a symmetric column quasi-contraction.

A symmetric column ``T1 = [T11; T21]`` with ``nu_-(I - T11^2)`` finite
admits selfadjoint extensions ``T`` preserving that negative index exactly
when ``nu_-(I - T11^2) = nu_-(I - T1^T T1)``.  In the solvable case there
are two extreme extensions ``t_min <= T <= t_max`` that characterize the
whole solution set as an operator interval, and the gap
``t_max - t_min = diag(0, 2(I - V J V^T))`` vanishes exactly when the
factor ``V^T`` is J-isometric (the uniqueness criterion).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    ConsistencyError,
    DimensionMismatch,
    NotAnExtension,
    NotSolvable,
)
from .factor import JSpace
from .lifting import defect_data, j_isometry_test
from .spectral import (
    as_matrix,
    as_symmetric,
    loewner_leq,
    modulus_power,
    moore_penrose_power,
    negativity,
    norm2,
    range_factor_residual,
    signature_of,
    symmetrize,
)
from .tolerances import ToleranceProfile, resolve

__all__ = [
    "SymmetricColumn",
    "ExtremalPair",
    "split_counts",
    "solvable",
    "extremal_extensions",
    "is_member",
    "uniqueness_gap",
    "krein_uniqueness_criterion",
]


@dataclass(frozen=True)
class SymmetricColumn:
    """Column data ``t11`` (symmetric head) and ``t21`` (coupling block)."""

    t11: np.ndarray
    t21: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "t11", as_symmetric(self.t11))
        object.__setattr__(self, "t21", as_matrix(self.t21))
        if self.t21.shape[1] != self.t11.shape[0]:
            raise DimensionMismatch(
                f"t21 has {self.t21.shape[1]} columns but t11 has dim {self.t11.shape[0]}"
            )

    @property
    def dim1(self) -> int:
        return self.t11.shape[0]

    @property
    def dim2(self) -> int:
        return self.t21.shape[0]

    def stacked(self) -> np.ndarray:
        return np.vstack([self.t11, self.t21])

    def negated(self) -> "SymmetricColumn":
        return SymmetricColumn(-self.t11, -self.t21)


@dataclass(frozen=True)
class ExtremalPair:
    """Extreme extensions with their construction data.

    ``v`` is the factor with ``t21 = v D`` and kernel containing the defect
    kernel; ``j`` the signature of ``I - t11^2``; ``kappa_minus`` and
    ``kappa_plus`` count eigenvalues of any member below ``-1`` and above
    ``+1``.
    """

    t_min: np.ndarray
    t_max: np.ndarray
    v: np.ndarray
    j: np.ndarray
    kappa: int
    kappa_plus: int
    kappa_minus: int

    @property
    def dim1(self) -> int:
        return self.v.shape[1]

    @property
    def dim2(self) -> int:
        return self.v.shape[0]


def split_counts(t, tol: ToleranceProfile | None = None) -> tuple[int, int]:
    """Counts ``(nu_-(I + T), nu_-(I - T))`` for symmetric ``T``.

    Their sum equals ``nu_-(I - T^2)`` (spectral mapping); the integer
    identity is asserted.
    """
    tol = resolve(tol)
    t_sym = as_symmetric(t, tol)
    eye = np.eye(t_sym.shape[0])
    floor = (1.0 + norm2(t_sym)) ** 2
    minus = negativity(symmetrize(eye + t_sym), tol, floor=floor)
    plus = negativity(symmetrize(eye - t_sym), tol, floor=floor)
    total = negativity(symmetrize(eye - t_sym @ t_sym), tol, floor=floor)
    if minus + plus != total:
        raise ConsistencyError(
            f"split counts {minus} + {plus} do not add up to nu_-(I - T^2) = {total}"
        )
    return minus, plus


def solvable(col: SymmetricColumn, tol: ToleranceProfile | None = None) -> bool:
    """Minimal-index solvability: ``nu_-(I - T11^2) == nu_-(I - T1^T T1)``."""
    tol = resolve(tol)
    eye = np.eye(col.dim1)
    t1 = col.stacked()
    floor = (1.0 + norm2(t1)) ** 2
    head = negativity(symmetrize(eye - col.t11 @ col.t11), tol, floor=floor)
    full = negativity(symmetrize(eye - t1.T @ t1), tol, floor=floor)
    return head == full


def _extremal_blocks(t11: np.ndarray, t21: np.ndarray, tol: ToleranceProfile):
    """Assemble the two extreme extensions from the column data."""
    n1 = t11.shape[0]
    n2 = t21.shape[0]
    eye1 = np.eye(n1)
    floor = (1.0 + norm2(t11)) ** 2
    defect_sq = symmetrize(eye1 - t11 @ t11)
    d = modulus_power(defect_sq, 0.5, tol, floor=floor)
    j = signature_of(defect_sq, tol, floor=floor)
    v = t21 @ moore_penrose_power(defect_sq, 0.5, tol, floor=floor)
    coupling = d @ v.T
    eye2 = np.eye(n2)
    corner_min = symmetrize(-eye2 + v @ (eye1 - t11) @ j @ v.T)
    corner_max = symmetrize(eye2 - v @ (eye1 + t11) @ j @ v.T)
    t_min = np.vstack([np.hstack([t11, coupling]), np.hstack([coupling.T, corner_min])])
    t_max = np.vstack([np.hstack([t11, coupling]), np.hstack([coupling.T, corner_max])])
    return symmetrize(t_min), symmetrize(t_max), v, j, d


def extremal_extensions(col: SymmetricColumn, tol: ToleranceProfile | None = None) -> ExtremalPair:
    """Construct the extreme extensions ``t_min`` and ``t_max``.

    Raises :class:`NotSolvable` when the index criterion fails.  The
    construction is verified: the coupling range inclusion, the preserved
    negative index of both extremes, and the negation duality
    ``(-T)_min = -T_max`` (checked by direct reassembly).
    """
    tol = resolve(tol)
    if not solvable(col, tol):
        eye = np.eye(col.dim1)
        t1 = col.stacked()
        floor = (1.0 + norm2(t1)) ** 2
        head = negativity(symmetrize(eye - col.t11 @ col.t11), tol, floor=floor)
        full = negativity(symmetrize(eye - t1.T @ t1), tol, floor=floor)
        raise NotSolvable(
            f"nu_-(I - T11^2) = {head} differs from nu_-(I - T1^T T1) = {full}"
        )
    eye1 = np.eye(col.dim1)
    head_floor = (1.0 + norm2(col.t11)) ** 2
    defect_sq = symmetrize(eye1 - col.t11 @ col.t11)
    d = modulus_power(defect_sq, 0.5, tol, floor=head_floor)
    inclusion_residual = range_factor_residual(d, col.t21.T, tol)
    if inclusion_residual > tol.residual * (1.0 + norm2(col.t21)):
        raise ConsistencyError(
            f"coupling rows leave the defect range (residual {inclusion_residual:.3e}) "
            "although the index criterion holds"
        )
    t_min, t_max, v, j, _ = _extremal_blocks(col.t11, col.t21, tol)
    kappa = negativity(symmetrize(eye1 - col.t11 @ col.t11), tol, floor=head_floor)
    kappa_minus = negativity(symmetrize(eye1 + col.t11), tol, floor=head_floor)
    kappa_plus = negativity(symmetrize(eye1 - col.t11), tol, floor=head_floor)
    eye = np.eye(col.dim1 + col.dim2)
    # the extended counts are verified through the split form: at the
    # boundary of the solution interval I - T^2 is singular and its own
    # scale collapses, while I + T and I - T stay well conditioned
    for name, ext in (("t_min", t_min), ("t_max", t_max)):
        ext_floor = (1.0 + norm2(ext)) ** 2
        below = negativity(symmetrize(eye + ext), tol, floor=ext_floor)
        above = negativity(symmetrize(eye - ext), tol, floor=ext_floor)
        if (below, above) != (kappa_minus, kappa_plus):
            raise ConsistencyError(
                f"{name} has boundary counts ({below}, {above}), "
                f"expected ({kappa_minus}, {kappa_plus})"
            )
    neg_min, neg_max, _, _, _ = _extremal_blocks(-col.t11, -col.t21, tol)
    scale = 1.0 + norm2(t_min) + norm2(t_max)
    if norm2(neg_min + t_max) > tol.residual * scale or norm2(neg_max + t_min) > tol.residual * scale:
        raise ConsistencyError("negation duality of the extreme extensions failed")
    return ExtremalPair(
        t_min=t_min,
        t_max=t_max,
        v=v,
        j=j,
        kappa=kappa,
        kappa_plus=kappa_plus,
        kappa_minus=kappa_minus,
    )


def is_member(pair: ExtremalPair, t, tol: ToleranceProfile | None = None) -> bool:
    """Order-interval membership ``t_min <= T <= t_max``.

    ``T`` must be a symmetric extension of the column (its first block
    column must match), otherwise :class:`NotAnExtension` is raised.
    """
    tol = resolve(tol)
    t_sym = as_symmetric(t, tol)
    n = pair.dim1 + pair.dim2
    if t_sym.shape[0] != n:
        raise DimensionMismatch(f"T has dim {t_sym.shape[0]}, expected {n}")
    column = pair.t_min[:, : pair.dim1]
    gap = norm2(t_sym[:, : pair.dim1] - column)
    if gap > tol.residual * (1.0 + norm2(column)):
        raise NotAnExtension(f"first block column differs by {gap:.3e}")
    return loewner_leq(pair.t_min, t_sym, tol) and loewner_leq(t_sym, pair.t_max, tol)


def uniqueness_gap(pair: ExtremalPair, tol: ToleranceProfile | None = None) -> np.ndarray:
    """Gap ``t_max - t_min``; equals ``diag(0, 2(I - V J V^T))``.

    The block formula is verified, and the zero-gap verdict is
    cross-checked against the J-isometry of ``V^T``.
    """
    tol = resolve(tol)
    gap = symmetrize(pair.t_max - pair.t_min)
    n1, n2 = pair.dim1, pair.dim2
    predicted = np.zeros_like(gap)
    predicted[n1:, n1:] = 2.0 * (np.eye(n2) - pair.v @ pair.j @ pair.v.T)
    scale = 1.0 + norm2(pair.t_min) + norm2(pair.t_max)
    if norm2(gap - symmetrize(predicted)) > tol.residual * scale:
        raise ConsistencyError("gap formula violated")
    gap_zero = norm2(gap) <= tol.residual * scale
    if n2 > 0 and n1 > 0:
        data = defect_data(pair.v.T, JSpace.identity(n2), JSpace.from_matrix(pair.j), tol)
        report = j_isometry_test(data, tol)
        if report.isometric != gap_zero:
            raise ConsistencyError(
                "zero-gap verdict disagrees with the J-isometry of V^T"
            )
    return gap


def krein_uniqueness_criterion(col: SymmetricColumn, tol: ToleranceProfile | None = None) -> bool:
    """Uniqueness of the minimal-index extension: ``t_min == t_max``.

    Decided algebraically through ``I - V J V^T = 0``; the sup-of-ratio
    form of the criterion is exercised in the test suite only.
    """
    tol = resolve(tol)
    pair = extremal_extensions(col, tol)
    defect = np.eye(pair.dim2) - pair.v @ pair.j @ pair.v.T
    return norm2(defect) <= tol.residual * (1.0 + norm2(pair.v) ** 2)
