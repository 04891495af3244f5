import numpy as np
import pytest

from kreinkit import gens
from kreinkit.errors import (
    NotAnExtension,
    NotSelfadjoint,
    NotSolvable,
    PreconditionViolated,
    ShiftNotAdmissible,
)
from kreinkit.relations import (
    LinearRelation,
    antitonicity_check,
    as_bounded_operator,
    classify,
    ext_membership,
    form_a1,
    friedrichs_krein,
    inverse_duality_check,
    krein_uniqueness_relation,
    relation_inertia,
    relation_leq,
    resolvent_interval_check,
    resolvent_matrix,
)
from kreinkit.spectral import subspace_distance


def graph(m):
    return LinearRelation.from_operator(np.asarray(m, dtype=float))


# the running example: the identity on span{e1} inside R^2
PARTIAL_IDENTITY = LinearRelation.from_generators(
    np.array([[1.0], [0.0]]), np.array([[1.0], [0.0]])
)


def test_constructors():
    rel = graph([[2.0]])
    expected = LinearRelation.from_generators(np.array([[1.0]]), np.array([[2.0]]))
    assert rel.same_as(expected)
    pure_mul = LinearRelation.from_generators(np.zeros((2, 2)), np.eye(2))
    assert pure_mul.mul_dim() == 2
    duplicated = LinearRelation.from_generators(
        np.array([[1.0, 1.0], [0.0, 0.0]]), np.array([[1.0, 1.0], [0.0, 0.0]])
    )
    assert duplicated.same_as(PARTIAL_IDENTITY)
    assert duplicated.graph_dim == 1


def test_adjoint_inverse_shift():
    rng = np.random.default_rng(50)
    m = rng.standard_normal((3, 3))
    assert graph(m).adjoint().same_as(graph(m.T))
    inv = graph(np.diag([1.0, 0.0])).inverse()
    assert inv.mul_dim() == 1
    assert subspace_distance(inv.mul_basis(), np.eye(2)[:, 1:]) <= 1e-10
    assert graph(np.zeros((2, 2))).shift(1.0).same_as(graph(np.eye(2)))


def test_classify_examples():
    cls = classify(graph(np.diag([1.0, -2.0])))
    assert cls.selfadjoint and cls.form_negativity == 1
    # identity on span{e1} extended by a multivalued direction: the graph
    # pairing vanishes and the graph dimension is full, so selfadjoint
    rel = LinearRelation.from_generators(
        np.array([[1.0, 0.0], [0.0, 0.0]]), np.array([[1.0, 0.0], [0.0, 1.0]])
    )
    cls = classify(rel)
    assert cls.symmetric and cls.selfadjoint and cls.form_negativity == 0
    # a strict restriction is symmetric but not selfadjoint
    cls = classify(PARTIAL_IDENTITY)
    assert cls.symmetric and not cls.selfadjoint
    rotation = graph(np.array([[0.0, -1.0], [1.0, 0.0]]))
    assert not classify(rotation).symmetric


def test_relation_inertia():
    counts = relation_inertia(graph(np.diag([2.0, -3.0, 0.0])))
    assert (counts.i_plus, counts.i_minus, counts.i_zero, counts.i_inf) == (1, 1, 1, 0)
    rel = LinearRelation.from_generators(
        np.array([[1.0, 0.0], [0.0, 0.0]]), np.array([[1.0, 0.0], [0.0, 1.0]])
    )
    counts = relation_inertia(rel)
    assert (counts.i_plus, counts.i_minus, counts.i_zero, counts.i_inf) == (1, 0, 0, 1)
    with pytest.raises(NotSelfadjoint):
        relation_inertia(PARTIAL_IDENTITY)


def test_cayley_scalar_and_multivalued():
    assert graph([[2.0]]).cayley().same_as(graph([[-1.0 / 3.0]]))
    pure_mul = LinearRelation.from_generators(np.zeros((2, 2)), np.eye(2))
    assert pure_mul.cayley().same_as(graph(-np.eye(2)))


def test_cayley_involution_property():
    rng = np.random.default_rng(51)
    for _ in range(500):
        n = int(rng.integers(1, 6))
        k = int(rng.integers(0, 2 * n + 1))
        rel = LinearRelation(n, gens.random_orthogonal(rng, 2 * n)[:, :k])
        double = rel.cayley().cayley()
        assert subspace_distance(double.basis, rel.basis) <= 1e-9
        lhs = rel.cayley().inverse()
        rhs = rel.negate().cayley()
        assert subspace_distance(lhs.basis, rhs.basis) <= 1e-9


def test_as_bounded_operator():
    rng = np.random.default_rng(52)
    m = rng.standard_normal((3, 3))
    basis, op = as_bounded_operator(graph(m))
    assert basis.shape == (3, 3)
    assert np.allclose(op, m)
    pure_mul = LinearRelation.from_generators(np.zeros((2, 2)), np.eye(2))
    assert as_bounded_operator(pure_mul) is None
    for _ in range(20):
        n = int(rng.integers(1, 5))
        rel = gens.random_solvable_relation(rng, n)
        assert as_bounded_operator(rel.cayley()) is not None


def test_form_a1_selfadjoint_case():
    rel = graph(np.diag([2.0, -3.0]))
    data = form_a1(rel)
    cls = classify(rel)
    assert data.negatives == cls.form_negativity == 1


def test_form_a1_detects_cayley_singularity():
    # an eigenvalue at exactly -1 kills a negative square of the projected
    # form, so the minimal-index extension set is empty
    rel = graph(np.diag([2.0, -1.0]))
    assert classify(rel).form_negativity == 1
    assert form_a1(rel).negatives == 0
    with pytest.raises(NotSolvable):
        friedrichs_krein(rel)


def test_form_a1_partial_case():
    rel = LinearRelation.from_generators(
        np.array([[1.0, 0.0], [0.0, 0.0]]), np.array([[1.0, 0.0], [0.0, 1.0]])
    )
    assert form_a1(rel).negatives == 0


def test_form_a1_projected_versus_plain():
    # a negative restriction with a coupled defect direction: the projected
    # form may lose negativity relative to the plain one
    rng = np.random.default_rng(53)
    for _ in range(40):
        n = int(rng.integers(1, 6))
        rel_sa = gens.random_selfadjoint_relation(rng, n, mul_dim=int(rng.integers(0, 2)))
        d = int(rng.integers(0, rel_sa.graph_dim + 1))
        rel = LinearRelation(n, rel_sa.basis @ gens.random_orthogonal(rng, rel_sa.graph_dim)[:, :d])
        cls = classify(rel)
        assert cls.symmetric
        assert form_a1(rel).negatives <= cls.form_negativity


def test_form_identities_at_tight_tolerance():
    # the identities linking the forms to the transform side hold to 1e-10
    # on random symmetric relations, measured directly on graph elements
    rng = np.random.default_rng(63)
    from kreinkit.spectral import orthonormal_columns, projector

    for _ in range(100):
        n = int(rng.integers(1, 6))
        rel_sa = gens.random_selfadjoint_relation(rng, n, mul_dim=int(rng.integers(0, 2)))
        d = int(rng.integers(0, rel_sa.graph_dim + 1))
        coeff = gens.random_orthogonal(rng, rel_sa.graph_dim)[:, :d]
        rel = LinearRelation(n, rel_sa.basis @ coeff)
        f, fp = rel.first, rel.second
        sums = f + fp
        p1 = projector(orthonormal_columns(sums))
        for i in range(rel.graph_dim):
            g = sums[:, i]
            h = f[:, i] - fp[:, i]
            a1_val = float(f[:, i] @ (p1 @ fp[:, i]))
            a_val = float(f[:, i] @ fp[:, i])
            assert abs(4.0 * a1_val - (g @ g - (p1 @ h) @ (p1 @ h))) <= 1e-10
            assert abs(4.0 * a_val - (g @ g - h @ h)) <= 1e-10
            p2f = f[:, i] - p1 @ f[:, i]
            p2h = h - p1 @ h
            assert abs(p2h @ p2h - 4.0 * (p2f @ p2f)) <= 1e-10


def test_friedrichs_krein_worked_example():
    a_f, a_k = friedrichs_krein(PARTIAL_IDENTITY)
    assert a_k.same_as(graph(np.diag([1.0, 0.0])))
    expected_af = LinearRelation.from_generators(
        np.array([[1.0, 0.0], [0.0, 0.0]]), np.array([[1.0, 0.0], [0.0, 1.0]])
    )
    assert a_f.same_as(expected_af)
    assert subspace_distance(a_f.mul_basis(), np.eye(2)[:, 1:]) <= 1e-9


def test_friedrichs_krein_selfadjoint_input():
    rel = graph(np.diag([2.0, -3.0]))
    a_f, a_k = friedrichs_krein(rel)
    assert a_f.same_as(rel) and a_k.same_as(rel)


def test_friedrichs_krein_nonnegative_case():
    rng = np.random.default_rng(54)
    for _ in range(20):
        n = int(rng.integers(2, 5))
        d = int(rng.integers(1, n))
        m = gens.random_psd(rng, n)
        u = gens.random_orthogonal(rng, n)[:, :d]
        rel = LinearRelation.from_generators(u, m @ u)
        a_f, a_k = friedrichs_krein(rel)
        assert relation_inertia(a_f).i_minus == 0
        assert relation_inertia(a_k).i_minus == 0
        assert relation_leq(a_k, a_f)


def test_friedrichs_krein_not_solvable():
    # a one-dimensional restriction that loses a negative square
    rel = LinearRelation.from_generators(
        np.array([[1.0], [0.0]]), np.array([[-1.0], [1.0]])
    )
    cls = classify(rel)
    assert cls.symmetric and cls.form_negativity == 1
    assert form_a1(rel).negatives == 0
    with pytest.raises(NotSolvable):
        friedrichs_krein(rel)


def test_relation_leq_examples():
    assert relation_leq(graph(np.zeros((2, 2))), graph(np.eye(2)))
    assert relation_leq(graph(np.diag([1.0, -1.0])), graph(np.diag([2.0, -0.5])))
    a_f, a_k = friedrichs_krein(PARTIAL_IDENTITY)
    assert relation_leq(a_k, a_f)


def test_resolvent_matrix():
    rel = graph(np.diag([1.0, 3.0]))
    r = resolvent_matrix(rel, 0.0)
    assert np.allclose(r, np.diag([1.0, 1.0 / 3.0]))
    with pytest.raises(ShiftNotAdmissible):
        resolvent_matrix(rel, 2.0)


def test_relation_order_shift_invariance():
    # the resolvent-order verdict must not depend on the admissible shift
    rng = np.random.default_rng(59)
    from kreinkit.relations import _operator_minimum
    from kreinkit.spectral import loewner_leq

    for _ in range(30):
        n = int(rng.integers(1, 5))
        mul_dim = int(rng.integers(0, 2))
        h1_mat, h2_mat = gens.random_ordered_matrix_pair(rng, n, bool(rng.integers(0, 2)))
        dim = n + mul_dim
        basis = gens.random_orthogonal(rng, dim)
        u, u_mul = basis[:, :n], basis[:, n:]
        pad = np.zeros((dim, mul_dim))
        rel1 = LinearRelation.from_generators(np.hstack([u, pad]), np.hstack([u @ h1_mat, u_mul]))
        rel2 = LinearRelation.from_generators(np.hstack([u, pad]), np.hstack([u @ h2_mat, u_mul]))
        reference = relation_leq(rel1, rel2)
        bottom = min(_operator_minimum(rel1, None), _operator_minimum(rel2, None))
        for offset in (0.5, 2.0, 10.0):
            a = bottom - offset
            r1 = resolvent_matrix(rel1, a)
            r2 = resolvent_matrix(rel2, a)
            verdict = loewner_leq(np.zeros_like(r2), r2) and loewner_leq(r2, r1)
            assert verdict == reference


def test_ext_membership_sweep():
    a_f, a_k = friedrichs_krein(PARTIAL_IDENTITY)
    for t in (-5.0, -1.0, -0.2):
        assert not ext_membership(PARTIAL_IDENTITY, graph(np.diag([1.0, t])))
    for t in (0.0, 0.5, 3.0):
        assert ext_membership(PARTIAL_IDENTITY, graph(np.diag([1.0, t])))
    assert ext_membership(PARTIAL_IDENTITY, a_f)
    assert ext_membership(PARTIAL_IDENTITY, a_k)
    with pytest.raises(NotAnExtension):
        ext_membership(PARTIAL_IDENTITY, graph(np.diag([2.0, 0.0])))


def test_membership_triple_agreement():
    rng = np.random.default_rng(55)
    for _ in range(20):
        n = int(rng.integers(2, 5))
        rel = gens.random_solvable_relation(rng, n)
        a_f, a_k = friedrichs_krein(rel)
        kappa = relation_inertia(a_f).i_minus
        for candidate in (a_f, a_k):
            assert ext_membership(rel, candidate)
            assert relation_leq(a_k, candidate) and relation_leq(candidate, a_f)
            assert relation_inertia(candidate).i_minus == kappa


def test_resolvent_interval_examples():
    rng = np.random.default_rng(56)
    n = 3
    m = gens.random_psd(rng, n)
    u = gens.random_orthogonal(rng, n)[:, :2]
    rel = LinearRelation.from_generators(u, m @ u)
    a_f, a_k = friedrichs_krein(rel)
    assert resolvent_interval_check(rel, a_f, 1.0)
    assert resolvent_interval_check(rel, a_k, 1.0)
    with pytest.raises(ShiftNotAdmissible):
        resolvent_interval_check(rel, a_k, -100.0)


def test_inverse_duality_examples():
    assert inverse_duality_check(PARTIAL_IDENTITY)
    assert inverse_duality_check(graph(np.diag([2.0, -3.0])))
    rng = np.random.default_rng(57)
    for _ in range(10):
        rel = gens.random_solvable_relation(rng, int(rng.integers(2, 5)))
        assert inverse_duality_check(rel)


def test_antitonicity_matrix_examples():
    assert antitonicity_check(np.diag([1.0, -1.0]), np.diag([2.0, -0.5]), "matrix")
    assert antitonicity_check(np.diag([1.0, 1.0]), np.diag([2.0, 2.0]), "matrix")
    # ordered with different inertias: the inverse order must fail
    assert not antitonicity_check(np.array([[-1.0]]), np.array([[1.0]]), "matrix")
    with pytest.raises(PreconditionViolated):
        antitonicity_check(np.eye(2), np.zeros((2, 2)) - np.eye(2), "matrix")


def test_antitonicity_relation_mode():
    h1 = graph(np.array([[-1.0]]))
    h2 = graph(np.array([[1.0]]))
    assert not antitonicity_check(h1, h2, "relation")
    assert antitonicity_check(graph(np.eye(2)), graph(2.0 * np.eye(2)), "relation")


def test_krein_uniqueness_relation_examples():
    assert krein_uniqueness_relation(graph(np.diag([2.0, -3.0])))
    assert not krein_uniqueness_relation(PARTIAL_IDENTITY)
    rng = np.random.default_rng(58)
    for _ in range(10):
        n = int(rng.integers(2, 5))
        d = int(rng.integers((n + 1) // 2, n + 1))
        rel = gens.random_solvable_relation(rng, n, dom_dim=d, unique=True)
        assert krein_uniqueness_relation(rel)
        a_f, a_k = friedrichs_krein(rel)
        assert a_f.same_as(a_k)
