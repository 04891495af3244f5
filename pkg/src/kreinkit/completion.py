"""Completion of incomplete symmetric 2x2 blocks with minimal negative index.

Given the data ``(A11, A12)`` with the lower-right corner unknown, the
block admits a symmetric completion whose negative index equals that of
``A11`` exactly when ``ran A12`` lies inside ``ran |A11|^{1/2}``.  In that
case ``S = |A11|^{[-1/2]} A12`` is well defined, ``S^T J S`` (with
``J = sign(A11)``) is the smallest admissible corner, and the solution set
is the semibounded interval ``{S^T J S + Y : Y >= 0}``.  The negative index
of any corner choice splits additively through the generalized Schur
complement.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, NotCompletable
from .spectral import (
    Inertia,
    as_matrix,
    as_symmetric,
    inertia_of,
    loewner_leq,
    modulus_power,
    negativity,
    norm2,
    range_factor,
    range_factor_residual,
    signature_of,
    symmetrize,
)
from .tolerances import ToleranceProfile, default_tolerances, resolve

__all__ = [
    "IncompleteBlock",
    "CompletionSolution",
    "completable",
    "minimal_completion",
    "is_solution",
    "assemble",
    "schur_inertia",
    "reconstruction",
]


@dataclass(frozen=True)
class IncompleteBlock:
    """Upper-left corner ``a11`` and coupling ``a12``; ``a21`` is ``a12^T``."""

    a11: np.ndarray
    a12: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "a11", as_symmetric(self.a11))
        object.__setattr__(self, "a12", as_matrix(self.a12))
        if self.a12.shape[0] != self.a11.shape[0]:
            raise DimensionMismatch(
                f"a12 has {self.a12.shape[0]} rows but a11 has dim {self.a11.shape[0]}"
            )

    @property
    def dim1(self) -> int:
        return self.a11.shape[0]

    @property
    def dim2(self) -> int:
        return self.a12.shape[1]


@dataclass(frozen=True)
class CompletionSolution:
    """Factor ``s``, signature ``j``, smallest corner ``a22_min``, index ``kappa``."""

    s: np.ndarray
    j: np.ndarray
    a22_min: np.ndarray
    kappa: int


def _half_power(a11: np.ndarray, tol: ToleranceProfile) -> np.ndarray:
    """``|a11|^{1/2}`` with the kernel zero-classified at the data scale.

    The fractional power would otherwise turn roundoff kernel eigenvalues
    into square-root-of-roundoff singular values, polluting every range
    test downstream; the floor reproduces exactly the classification
    ``inertia_of`` applies to ``a11`` itself.
    """
    return modulus_power(a11, 0.5, tol, floor=norm2(a11))


def completable(blk: IncompleteBlock, tol: ToleranceProfile | None = None) -> bool:
    """Range-inclusion criterion: ``ran a12`` inside ``ran |a11|^{1/2}``."""
    tol = resolve(tol)
    half = _half_power(blk.a11, tol)
    return range_factor(half, blk.a12, tol) is not None


def minimal_completion(blk: IncompleteBlock, tol: ToleranceProfile | None = None) -> CompletionSolution:
    """Smallest corner completing the block at the minimal negative index.

    Raises :class:`NotCompletable` (with the best least-squares residual
    attached) when the range inclusion fails.
    """
    tol = resolve(tol)
    half = _half_power(blk.a11, tol)
    s = range_factor(half, blk.a12, tol)
    if s is None:
        residual = range_factor_residual(half, blk.a12, tol)
        raise NotCompletable(
            f"ran a12 is not contained in ran |a11|^(1/2); best residual {residual:.3e}",
            residual=residual,
        )
    j = signature_of(blk.a11, tol)
    a22_min = symmetrize(s.T @ j @ s)
    return CompletionSolution(s=s, j=j, a22_min=a22_min, kappa=negativity(blk.a11, tol))


def is_solution(blk: IncompleteBlock, a22, tol: ToleranceProfile | None = None) -> bool:
    """Interval membership test: ``a22`` is admissible iff ``a22 >= a22_min``."""
    tol = resolve(tol)
    sol = minimal_completion(blk, tol)
    a22_sym = as_symmetric(a22, tol)
    if a22_sym.shape[0] != blk.dim2:
        raise DimensionMismatch(
            f"a22 has dim {a22_sym.shape[0]} but the block needs {blk.dim2}"
        )
    return loewner_leq(sol.a22_min, a22_sym, tol)


def assemble(blk: IncompleteBlock, a22) -> np.ndarray:
    """Assemble the full symmetric block matrix with corner ``a22``."""
    a22_sym = as_symmetric(a22)
    if a22_sym.shape[0] != blk.dim2:
        raise DimensionMismatch(
            f"a22 has dim {a22_sym.shape[0]} but the block needs {blk.dim2}"
        )
    top = np.hstack([blk.a11, blk.a12])
    bottom = np.hstack([blk.a12.T, a22_sym])
    return symmetrize(np.vstack([top, bottom]))


def schur_inertia(blk: IncompleteBlock, a22, tol: ToleranceProfile | None = None) -> Inertia:
    """Inertia of the assembled block through the generalized Schur complement.

    Under the range inclusion, the inertia splits additively between
    ``a11`` and ``a22 - S^T J S``; the multivalued count is zero.
    """
    tol = resolve(tol)
    sol = minimal_completion(blk, tol)
    a22_sym = as_symmetric(a22, tol)
    if a22_sym.shape[0] != blk.dim2:
        raise DimensionMismatch(
            f"a22 has dim {a22_sym.shape[0]} but the block needs {blk.dim2}"
        )
    corner_floor = 1.0 + norm2(a22_sym) + norm2(sol.a22_min)
    corner = inertia_of(symmetrize(a22_sym - sol.a22_min), tol, floor=corner_floor)
    head = inertia_of(blk.a11, tol)
    return Inertia(
        n_plus=head.n_plus + corner.n_plus,
        n_minus=head.n_minus + corner.n_minus,
        n_zero=head.n_zero + corner.n_zero,
        n_inf=0,
    )


def reconstruction(blk: IncompleteBlock, sol: CompletionSolution) -> np.ndarray:
    """Rebuild the minimal completion from its factor: ``L^T J L``.

    ``L = [|a11|^{1/2}, J s]`` row block; useful as an independent residual
    check on the factorization.
    """
    half = _half_power(blk.a11, default_tolerances())
    left = np.hstack([half, sol.j @ sol.s])
    return symmetrize(left.T @ sol.j @ left)
