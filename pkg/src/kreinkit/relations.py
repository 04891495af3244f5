"""Linear relations as graph subspaces and their extension theory.

A linear relation on an ``n``-dimensional space is a subspace of the
doubled space, held here through an orthonormal basis of its graph
(canonicalized on construction, so equality is projector equality).  The
module provides the relation calculus (adjoint, inverse, shift, Cayley
transform), classification and inertia, the boundary form with the
projection onto ``ran(I + A)`` inserted, the Friedrichs and Krein-von
Neumann extensions of a symmetric relation with minimal negative index,
the resolvent order with its interval characterizations, and the
antitonicity and uniqueness criteria.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    ConsistencyError,
    DimensionMismatch,
    InvalidInput,
    NotAnExtension,
    NotSelfadjoint,
    NotSolvable,
    NotSymmetric,
    PreconditionViolated,
    ShiftNotAdmissible,
)
from .quasicontraction import SymmetricColumn, extremal_extensions, uniqueness_gap
from .spectral import (
    Inertia,
    as_matrix,
    as_symmetric,
    complement_basis,
    inertia_of,
    loewner_leq,
    negativity,
    norm2,
    nullspace_basis,
    orthonormal_columns,
    projector,
    subspace_distance,
    symmetrize,
)
from .tolerances import ToleranceProfile, resolve

__all__ = [
    "LinearRelation",
    "RelationInertia",
    "RelationClass",
    "FormData",
    "classify",
    "relation_inertia",
    "operator_part",
    "as_bounded_operator",
    "resolvent_matrix",
    "form_a1",
    "friedrichs_krein",
    "relation_leq",
    "ext_membership",
    "resolvent_interval_check",
    "inverse_duality_check",
    "antitonicity_check",
    "krein_uniqueness_relation",
]


@dataclass(frozen=True)
class RelationInertia:
    """Positive, negative, zero eigenvalue counts plus the multivalued dimension."""

    i_plus: int
    i_minus: int
    i_zero: int
    i_inf: int


@dataclass(frozen=True)
class RelationClass:
    """Symmetry classification and the negative-squares count of the form."""

    symmetric: bool
    selfadjoint: bool
    nonnegative: bool
    form_negativity: int


@dataclass(frozen=True)
class FormData:
    """Gram matrix of a boundary form over the canonical graph basis."""

    gram: np.ndarray
    negatives: int


class LinearRelation:
    """A subspace of the doubled space, canonicalized to an orthonormal basis.

    The basis is a ``(2n, r)`` matrix whose top and bottom halves are the
    first and second components of the spanning graph elements.  Generator
    representations are wildly non-unique, so everything relation-valued is
    reduced to this canonical form immediately and compared by projectors.
    """

    def __init__(self, space_dim: int, basis: np.ndarray):
        self.space_dim = int(space_dim)
        self.basis = basis

    # -- constructors -------------------------------------------------

    @classmethod
    def from_generators(cls, f, fp, tol: ToleranceProfile | None = None) -> "LinearRelation":
        f_arr = as_matrix(f)
        fp_arr = as_matrix(fp)
        if f_arr.shape != fp_arr.shape:
            raise DimensionMismatch(
                f"generator blocks have shapes {f_arr.shape} and {fp_arr.shape}"
            )
        stacked = np.vstack([f_arr, fp_arr])
        return cls(f_arr.shape[0], orthonormal_columns(stacked, tol))

    @classmethod
    def from_operator(cls, m, tol: ToleranceProfile | None = None) -> "LinearRelation":
        m_arr = as_matrix(m)
        if m_arr.shape[0] != m_arr.shape[1]:
            raise DimensionMismatch("from_operator expects a square matrix")
        n = m_arr.shape[0]
        return cls.from_generators(np.eye(n), m_arr, tol)

    # -- components ----------------------------------------------------

    @property
    def graph_dim(self) -> int:
        return self.basis.shape[1]

    @property
    def first(self) -> np.ndarray:
        return self.basis[: self.space_dim, :]

    @property
    def second(self) -> np.ndarray:
        return self.basis[self.space_dim:, :]

    def dom_basis(self, tol: ToleranceProfile | None = None) -> np.ndarray:
        return orthonormal_columns(self.first, tol)

    def ran_basis(self, tol: ToleranceProfile | None = None) -> np.ndarray:
        return orthonormal_columns(self.second, tol)

    def mul_basis(self, tol: ToleranceProfile | None = None) -> np.ndarray:
        null = nullspace_basis(self.first, tol)
        return orthonormal_columns(self.second @ null, tol)

    def ker_basis(self, tol: ToleranceProfile | None = None) -> np.ndarray:
        null = nullspace_basis(self.second, tol)
        return orthonormal_columns(self.first @ null, tol)

    def mul_dim(self, tol: ToleranceProfile | None = None) -> int:
        return self.mul_basis(tol).shape[1]

    # -- calculus -------------------------------------------------------

    def adjoint(self, tol: ToleranceProfile | None = None) -> "LinearRelation":
        """Adjoint relation: the orthogonal complement of the flipped graph."""
        flipped = np.vstack([self.second, -self.first])
        return LinearRelation(self.space_dim, complement_basis(flipped, 2 * self.space_dim))

    def inverse(self) -> "LinearRelation":
        return LinearRelation(self.space_dim, np.vstack([self.second, self.first]))

    def negate(self) -> "LinearRelation":
        return LinearRelation(self.space_dim, np.vstack([self.first, -self.second]))

    def shift(self, c: float, tol: ToleranceProfile | None = None) -> "LinearRelation":
        """Map each graph element ``(f, f')`` to ``(f, f' + c f)``."""
        stacked = np.vstack([self.first, self.second + c * self.first])
        return LinearRelation(self.space_dim, orthonormal_columns(stacked, tol))

    def cayley(self, tol: ToleranceProfile | None = None) -> "LinearRelation":
        """Graph transform ``(f, f') -> (f + f', f - f')`` (an involution)."""
        stacked = np.vstack([self.first + self.second, self.first - self.second])
        return LinearRelation(self.space_dim, orthonormal_columns(stacked, tol))

    # -- comparisons -----------------------------------------------------

    def graph_projector(self) -> np.ndarray:
        return projector(self.basis)

    def same_as(self, other: "LinearRelation", tol: ToleranceProfile | None = None) -> bool:
        tol = resolve(tol)
        if self.space_dim != other.space_dim:
            return False
        return subspace_distance(self.basis, other.basis) <= tol.subspace

    def contains(self, other: "LinearRelation", tol: ToleranceProfile | None = None) -> bool:
        """Graph containment ``other`` inside ``self``."""
        tol = resolve(tol)
        if self.space_dim != other.space_dim:
            return False
        if other.graph_dim == 0:
            return True
        eye = np.eye(2 * self.space_dim)
        leak = norm2((eye - self.graph_projector()) @ other.basis)
        return leak <= tol.subspace


def classify(rel: LinearRelation, tol: ToleranceProfile | None = None) -> RelationClass:
    """Symmetric/selfadjoint classification and the form's negative count.

    Symmetry is the vanishing of the boundary pairing on the graph, which
    over the canonical basis is the symmetry of ``F^T F'``; selfadjointness
    adds the dimension count.  The negative-squares count is the negative
    index of the symmetrized Gram.
    """
    tol = resolve(tol)
    gram_raw = rel.first.T @ rel.second
    scale = 1.0 + norm2(gram_raw)
    symmetric = norm2(gram_raw - gram_raw.T) <= tol.residual * scale
    selfadjoint = symmetric and rel.graph_dim == rel.space_dim
    gram = symmetrize(gram_raw)
    # graph bases are orthonormal, so the form has unit natural scale
    negatives = negativity(gram, tol, floor=1.0) if gram.size else 0
    return RelationClass(
        symmetric=bool(symmetric),
        selfadjoint=bool(selfadjoint),
        nonnegative=bool(symmetric and negatives == 0),
        form_negativity=negatives,
    )


def operator_part(rel: LinearRelation, tol: ToleranceProfile | None = None):
    """Domain basis and the matrix of the operator part in that basis.

    For a selfadjoint relation the space splits orthogonally into domain
    and multivalued part; the operator part acts on the domain.  Returns
    ``(U, M)`` with ``U`` of shape ``(n, d)`` and ``M`` symmetric ``(d, d)``.
    """
    tol = resolve(tol)
    u = rel.dom_basis(tol)
    d = u.shape[1]
    if d == 0:
        return u, np.zeros((0, 0))
    coeff, *_ = np.linalg.lstsq(rel.first, u, rcond=None)
    images = rel.second @ coeff
    residual = norm2(rel.first @ coeff - u)
    if residual > tol.residual * (1.0 + float(d)):
        raise ConsistencyError(f"domain basis failed to resolve in the graph: {residual:.3e}")
    return u, symmetrize(u.T @ images)


def relation_inertia(rel: LinearRelation, tol: ToleranceProfile | None = None) -> RelationInertia:
    """Eigenvalue-count quadruplet of a selfadjoint relation."""
    tol = resolve(tol)
    cls = classify(rel, tol)
    if not cls.selfadjoint:
        raise NotSelfadjoint("relation inertia is defined for selfadjoint relations")
    u, m = operator_part(rel, tol)
    floor = 1.0 + norm2(m)
    counts = inertia_of(m, tol, floor=floor) if m.size else Inertia(0, 0, 0, 0)
    i_inf = rel.space_dim - u.shape[1]
    return RelationInertia(counts.n_plus, counts.n_minus, counts.n_zero, i_inf)


def as_bounded_operator(rel: LinearRelation, tol: ToleranceProfile | None = None):
    """Matrix representation when the relation is an operator graph.

    Returns ``(domain basis, matrix)`` where the matrix is the full-space
    representation vanishing on the orthogonal complement of the domain, or
    ``None`` when the relation has a multivalued part.
    """
    tol = resolve(tol)
    if rel.mul_dim(tol) > 0:
        return None
    u = rel.dom_basis(tol)
    if u.shape[1] == 0:
        return u, np.zeros((rel.space_dim, rel.space_dim))
    coeff, *_ = np.linalg.lstsq(rel.first, u, rcond=None)
    images = rel.second @ coeff
    return u, images @ u.T


def resolvent_matrix(rel: LinearRelation, a: float, tol: ToleranceProfile | None = None) -> np.ndarray:
    """Materialize ``(H - a)^{-1}`` for selfadjoint ``H`` and admissible ``a``.

    The operator part is inverted on the domain and extended by zero on the
    multivalued part, which is the unique bounded nonnegative realization
    required by the resolvent ordering.
    """
    tol = resolve(tol)
    u, m = operator_part(rel, tol)
    d = u.shape[1]
    if d == 0:
        return np.zeros((rel.space_dim, rel.space_dim))
    w = np.linalg.eigvalsh(m)
    if w[0] - a <= tol.zero * (1.0 + float(np.max(np.abs(w)))):
        raise ShiftNotAdmissible(
            f"shift {a} does not stay below the operator-part minimum {w[0]:.6g}"
        )
    inv = np.linalg.solve(m - a * np.eye(d), np.eye(d))
    return symmetrize(u @ inv @ u.T)


def _operator_minimum(rel: LinearRelation, tol: ToleranceProfile) -> float:
    _, m = operator_part(rel, tol)
    if m.size == 0:
        return np.inf
    return float(np.linalg.eigvalsh(m)[0])


def form_a1(rel: LinearRelation, tol: ToleranceProfile | None = None) -> FormData:
    """Boundary form with the projection onto ``ran(I + A)`` inserted.

    The Gram is taken over the canonical graph basis; graph elements
    supported in the multivalued part contribute zero rows.  The identity
    set linking the form to the Cayley transform side (on each basis
    element: four times the projected form equals ``|g|^2 - |P1 h|^2`` for
    ``g = f + f'`` and ``h = f - f'``, the unprojected form matches
    ``|g|^2 - |h|^2``, and the coupling norms match) is verified.
    """
    tol = resolve(tol)
    cls = classify(rel, tol)
    if not cls.symmetric:
        raise NotSymmetric("the projected boundary form needs a symmetric relation")
    f = rel.first
    fp = rel.second
    sums = f + fp
    diffs = f - fp
    p1 = projector(orthonormal_columns(sums, tol))
    gram = symmetrize(f.T @ p1 @ fp)
    # elementwise identities against the Cayley side
    bound = tol.residual * 4.0
    for i in range(rel.graph_dim):
        g = sums[:, i]
        h = diffs[:, i]
        fi = f[:, i]
        fpi = fp[:, i]
        a1_val = float(fi @ (p1 @ fpi))
        a_val = float(fi @ fpi)
        if abs(4.0 * a1_val - (g @ g - (p1 @ h) @ (p1 @ h))) > bound:
            raise ConsistencyError("projected form identity failed on a basis element")
        if abs(4.0 * a_val - (g @ g - h @ h)) > bound:
            raise ConsistencyError("form identity failed on a basis element")
        p2f = fi - p1 @ fi
        p2h = h - p1 @ h
        if abs(p2h @ p2h - 4.0 * (p2f @ p2f)) > bound:
            raise ConsistencyError("coupling norm identity failed on a basis element")
    negatives = negativity(gram, tol, floor=1.0) if gram.size else 0
    return FormData(gram=gram, negatives=negatives)


def _cayley_column(rel: LinearRelation, tol: ToleranceProfile):
    """Cayley transform of a symmetric relation split into column blocks.

    Returns ``(U1, U2, t11, t21)``: orthonormal bases of ``ran(I + A)`` and
    its complement, and the blocks of the transform along that splitting.
    """
    t1 = rel.cayley(tol)
    if t1.mul_dim(tol) > 0:
        raise NotSolvable(
            "the Cayley transform is multivalued; the relation admits no "
            "minimal-index selfadjoint extension"
        )
    u1, op = as_bounded_operator(t1, tol)
    u2 = complement_basis(u1, rel.space_dim)
    images = op @ u1
    t11 = symmetrize(u1.T @ images)
    t21 = u2.T @ images
    return u1, u2, t11, t21


def friedrichs_krein(rel: LinearRelation, tol: ToleranceProfile | None = None):
    """Friedrichs and Krein-von Neumann extensions of a symmetric relation.

    Solvability requires the negative count of the projected form to equal
    that of the full form.  The extensions are the inverse Cayley images of
    the extreme quasi-contractive extensions of the transformed column; both
    are verified to be selfadjoint extensions with the minimal negative
    count.
    """
    tol = resolve(tol)
    cls = classify(rel, tol)
    if not cls.symmetric:
        raise NotSymmetric("extensions are built for symmetric relations")
    projected = form_a1(rel, tol)
    kappa = projected.negatives
    if kappa != cls.form_negativity:
        raise NotSolvable(
            f"projected form has {kappa} negative squares but the relation has "
            f"{cls.form_negativity}; no extension attains the minimal index"
        )
    u1, u2, t11, t21 = _cayley_column(rel, tol)
    pair = extremal_extensions(SymmetricColumn(t11, t21), tol)
    basis = np.hstack([u1, u2])
    t_min_std = symmetrize(basis @ pair.t_min @ basis.T)
    t_max_std = symmetrize(basis @ pair.t_max @ basis.T)
    a_f = LinearRelation.from_operator(t_min_std, tol).cayley(tol)
    a_k = LinearRelation.from_operator(t_max_std, tol).cayley(tol)
    for name, ext in (("Friedrichs extension", a_f), ("Krein-von Neumann extension", a_k)):
        if not ext.contains(rel, tol):
            raise ConsistencyError(f"{name} does not extend the relation")
        counts = relation_inertia(ext, tol)
        if counts.i_minus != kappa:
            raise ConsistencyError(
                f"{name} has i_minus = {counts.i_minus}, expected {kappa}"
            )
    return a_f, a_k


def relation_leq(h1: LinearRelation, h2: LinearRelation, tol: ToleranceProfile | None = None) -> bool:
    """Resolvent order for selfadjoint semibounded relations.

    With a shift strictly below both operator-part minima, ``H1 <= H2``
    means ``0 <= (H2 - a)^{-1} <= (H1 - a)^{-1}``; the verdict does not
    depend on the admissible shift.
    """
    tol = resolve(tol)
    for h in (h1, h2):
        if not classify(h, tol).selfadjoint:
            raise NotSelfadjoint("the resolvent order compares selfadjoint relations")
    if h1.space_dim != h2.space_dim:
        raise DimensionMismatch("relations live on spaces of different dimension")
    mins = [_operator_minimum(h, tol) for h in (h1, h2)]
    finite = [m for m in mins if np.isfinite(m)]
    a = (min(finite) if finite else 0.0) - 1.0
    r1 = resolvent_matrix(h1, a, tol)
    r2 = resolvent_matrix(h2, a, tol)
    zero = np.zeros_like(r2)
    return loewner_leq(zero, r2, tol) and loewner_leq(r2, r1, tol)


def ext_membership(rel: LinearRelation, candidate: LinearRelation, tol: ToleranceProfile | None = None) -> bool:
    """Membership of ``candidate`` in the minimal-index extension interval.

    Decided through the Cayley transform: the candidate's transform must be
    a bounded operator sandwiched between the extreme transforms in the
    Loewner order.
    """
    tol = resolve(tol)
    if not classify(candidate, tol).selfadjoint:
        raise NotAnExtension("the candidate is not selfadjoint")
    if not candidate.contains(rel, tol):
        raise NotAnExtension("the candidate does not extend the relation")
    u1, u2, t11, t21 = _cayley_column(rel, tol)
    pair = extremal_extensions(SymmetricColumn(t11, t21), tol)
    basis = np.hstack([u1, u2])
    t_min_std = symmetrize(basis @ pair.t_min @ basis.T)
    t_max_std = symmetrize(basis @ pair.t_max @ basis.T)
    transform = candidate.cayley(tol)
    if transform.mul_dim(tol) > 0:
        return False
    bounded = as_bounded_operator(transform, tol)
    if bounded is None or bounded[0].shape[1] < rel.space_dim:
        return False
    t = symmetrize(bounded[1])
    return loewner_leq(t_min_std, t, tol) and loewner_leq(t, t_max_std, tol)


def resolvent_interval_check(
    rel: LinearRelation,
    candidate: LinearRelation,
    a: float,
    tol: ToleranceProfile | None = None,
) -> bool:
    """Shifted resolvent interval test for an extension-family member.

    ``a`` must exceed the negative of the uniform lower bound of the family
    (computed over the two extreme extensions and the candidate), otherwise
    :class:`ShiftNotAdmissible` is raised.
    """
    tol = resolve(tol)
    a_f, a_k = friedrichs_krein(rel, tol)
    mins = [
        _operator_minimum(a_f, tol),
        _operator_minimum(a_k, tol),
        _operator_minimum(candidate, tol),
    ]
    finite = [m for m in mins if np.isfinite(m)]
    mu = min(finite) if finite else 0.0
    if a <= -mu:
        raise ShiftNotAdmissible(f"shift {a} does not exceed {-mu:.6g}")
    r_f = resolvent_matrix(a_f, -a, tol)
    r_k = resolvent_matrix(a_k, -a, tol)
    r_c = resolvent_matrix(candidate, -a, tol)
    return loewner_leq(r_f, r_c, tol) and loewner_leq(r_c, r_k, tol)


def inverse_duality_check(rel: LinearRelation, tol: ToleranceProfile | None = None) -> bool:
    """Duality of the extreme extensions under relation inversion.

    The Friedrichs extension of the inverse is the inverse of the
    Krein-von Neumann extension, and vice versa (graph-projector equality).
    """
    tol = resolve(tol)
    a_f, a_k = friedrichs_krein(rel, tol)
    inv_f, inv_k = friedrichs_krein(rel.inverse(), tol)
    return inv_f.same_as(a_k.inverse(), tol) and inv_k.same_as(a_f.inverse(), tol)


def antitonicity_check(h1, h2, mode: str, tol: ToleranceProfile | None = None) -> bool:
    """Inverse-order check with its exact inertia characterization.

    mode ``"matrix"``
        ``h1 <= h2`` invertible symmetric matrices: the inverse order
        ``h2^{-1} <= h1^{-1}`` holds iff the full inertias agree.
    mode ``"relation"``
        selfadjoint semibounded relations ordered by resolvents: the
        inverse order holds iff the negative counts agree.

    The biconditional is verified exactly; the order hypothesis itself is a
    precondition.
    """
    tol = resolve(tol)
    if mode == "matrix":
        m1 = as_symmetric(h1, tol)
        m2 = as_symmetric(h2, tol)
        i1 = inertia_of(m1, tol)
        i2 = inertia_of(m2, tol)
        if i1.n_zero or i2.n_zero:
            raise PreconditionViolated("matrix antitonicity needs invertible operands")
        if not loewner_leq(m1, m2, tol):
            raise PreconditionViolated("order hypothesis h1 <= h2 fails")
        holds = loewner_leq(np.linalg.inv(m2), np.linalg.inv(m1), tol)
        expected = i1 == i2
    elif mode == "relation":
        if not relation_leq(h1, h2, tol):
            raise PreconditionViolated("order hypothesis h1 <= h2 fails")
        holds = relation_leq(h2.inverse(), h1.inverse(), tol)
        expected = relation_inertia(h1, tol).i_minus == relation_inertia(h2, tol).i_minus
    else:
        raise InvalidInput(f"mode must be 'matrix' or 'relation', got {mode!r}")
    if holds != expected:
        raise ConsistencyError(
            f"antitonicity verdict {holds} contradicts the inertia condition {expected}"
        )
    return holds


def krein_uniqueness_relation(rel: LinearRelation, tol: ToleranceProfile | None = None) -> bool:
    """Uniqueness of the minimal-index extension of a symmetric relation.

    Decided through the zero gap of the transformed column.  The
    translation identities tying the relation side to the transform side
    (the pairing against defect vectors and the quadratic form pulled back
    through the resolvent) are verified on deterministic random probes.
    """
    tol = resolve(tol)
    cls = classify(rel, tol)
    if not cls.symmetric:
        raise NotSymmetric("uniqueness is asked for symmetric relations")
    projected = form_a1(rel, tol)
    if projected.negatives != cls.form_negativity:
        raise NotSolvable("the relation admits no minimal-index extension")
    u1, u2, t11, t21 = _cayley_column(rel, tol)
    pair = extremal_extensions(SymmetricColumn(t11, t21), tol)
    gap = uniqueness_gap(pair, tol)
    unique = norm2(gap) <= tol.residual * (1.0 + norm2(pair.t_min) + norm2(pair.t_max))
    _assert_translation_identities(rel, u1, u2, tol)
    return unique


def _assert_translation_identities(rel, u1, u2, tol: ToleranceProfile) -> None:
    """Verify the identities linking the relation to its Cayley transform.

    On probes ``g`` in ``ran(I + A)`` and ``phi`` in its complement:
    the transform pairing equals twice the resolvent pairing, and the
    quadratic defect form equals four times the operator-part form pulled
    back through the resolvent.  The compressed symmetric operator built
    from these maps is also checked for symmetry.
    """
    n = rel.space_dim
    d = u1.shape[1]
    if d == 0:
        return
    bounded_t1 = as_bounded_operator(rel.cayley(tol), tol)
    if bounded_t1 is None:
        raise ConsistencyError("the Cayley transform is multivalued on a solvable relation")
    t1 = bounded_t1[1]
    # (I + A)^{-1} as an operator on ran(I + A)
    bounded_res = as_bounded_operator(rel.shift(1.0, tol).inverse(), tol)
    if bounded_res is None:
        raise ConsistencyError("(I + A) is not injective although the problem is solvable")
    res = bounded_res[1]
    # operator part of A composed with the resolvent, column by column
    coeff, *_ = np.linalg.lstsq(rel.first + rel.second, u1, rcond=None)
    first_parts = rel.first @ coeff
    second_parts = rel.second @ coeff
    mul = rel.mul_basis(tol)
    p_op = np.eye(n) - projector(mul)
    images = p_op @ second_parts
    a_hat_raw = first_parts.T @ images
    if norm2(a_hat_raw - a_hat_raw.T) > 1e-10 * (1.0 + norm2(a_hat_raw)):
        raise ConsistencyError("the resolvent-compressed operator is not symmetric")
    a_hat = symmetrize(a_hat_raw)
    rng = np.random.default_rng(0)
    scale = (1.0 + norm2(t1)) ** 2 + norm2(a_hat)
    for _ in range(4):
        g = u1 @ rng.standard_normal(d)
        lhs_form = float(g @ g - (t1 @ g) @ (t1 @ g))
        coeffs, *_ = np.linalg.lstsq(rel.first + rel.second, g, rcond=None)
        f_part = rel.first @ coeffs
        fp_part = p_op @ (rel.second @ coeffs)
        rhs_form = 4.0 * float(fp_part @ f_part)
        if abs(lhs_form - rhs_form) > 1e-10 * scale * (1.0 + g @ g):
            raise ConsistencyError("quadratic translation identity failed")
        if u2.shape[1]:
            phi = u2 @ rng.standard_normal(u2.shape[1])
            lhs_pair = float((t1 @ g) @ phi)
            rhs_pair = 2.0 * float((res @ g) @ phi)
            if abs(lhs_pair - rhs_pair) > 1e-10 * scale * (1.0 + g @ g + phi @ phi):
                raise ConsistencyError("pairing translation identity failed")
